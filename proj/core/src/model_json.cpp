#include "polariton/model_json.hpp"

#include <fmt/format.h>

namespace polariton {

namespace {

template <typename T>
void read_field(const nlohmann::json& j, const std::string& key, T& out) {
  const auto& v = j.at(key);
  if constexpr (std::is_same_v<T, int>) {
    if (!v.is_number_integer()) {
      throw Error(ErrorCode::Config, fmt::format("system.{}: expected an integer", key));
    }
  } else {
    if (!v.is_number()) {
      throw Error(ErrorCode::Config, fmt::format("system.{}: expected a number", key));
    }
  }
  out = v.get<T>();
}

}  // namespace

RawParams raw_params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Config, "system: expected an object");
  RawParams raw;
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key == "n_molecules") read_field(j, key, raw.n_molecules);
    else if (key == "g") read_field(j, key, raw.g);
    else if (key == "delta_x") read_field(j, key, raw.delta_x);
    else if (key == "delta_c") read_field(j, key, raw.delta_c);
    else if (key == "gamma_x") read_field(j, key, raw.gamma_x);
    else if (key == "gamma_c") read_field(j, key, raw.gamma_c);
    else if (key == "omega_v") read_field(j, key, raw.omega_v);
    else if (key == "gamma_v") read_field(j, key, raw.gamma_v);
    else if (key == "lambda_hr") read_field(j, key, raw.lambda_hr);
    else if (key == "omega_ref") read_field(j, key, raw.omega_ref);
    else if (key == "dipole") read_field(j, key, raw.dipole);
    else if (key == "phase") read_field(j, key, raw.phase);
    else throw Error(ErrorCode::Config, fmt::format("system.{}: unknown key", key));
  }
  return raw;
}

nlohmann::json to_json(const RawParams& raw) {
  // nlohmann::json objects are key-sorted, which makes the dump canonical.
  return nlohmann::json{
      {"n_molecules", raw.n_molecules}, {"g", raw.g},
      {"delta_x", raw.delta_x},         {"delta_c", raw.delta_c},
      {"gamma_x", raw.gamma_x},         {"gamma_c", raw.gamma_c},
      {"omega_v", raw.omega_v},         {"gamma_v", raw.gamma_v},
      {"lambda_hr", raw.lambda_hr},     {"omega_ref", raw.omega_ref},
      {"dipole", raw.dipole},           {"phase", raw.phase},
  };
}

std::uint64_t fnv1a64(const std::string& bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string parameter_hash(const SystemParams& sys) {
  return fmt::format("{:016x}", fnv1a64(to_json(sys).dump()));
}

}  // namespace polariton

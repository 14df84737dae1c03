#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "polariton/model.hpp"

namespace polariton {

/// Reads a parameter record. Keys must match RawParams field names exactly;
/// unknown keys and wrongly typed values raise Error(Config) naming the key.
/// Missing keys keep their defaults.
RawParams raw_params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RawParams& raw);
inline nlohmann::json to_json(const SystemParams& sys) { return to_json(sys.raw()); }

/// Stable 64-bit FNV-1a hash of the canonical JSON serialization, as hex.
std::string parameter_hash(const SystemParams& sys);
std::uint64_t fnv1a64(const std::string& bytes) noexcept;

}  // namespace polariton

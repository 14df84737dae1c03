#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polariton/cli/job.hpp"
#include "polariton/cli/validate.hpp"

namespace cli = polariton::cli;
using polariton::Error;
using polariton::ErrorCode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidate = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int exit_code_for(const Error& e) {
  if (e.code() == ErrorCode::Io) return kExitIo;
  if (e.is_numeric()) return kExitNumeric;
  return kExitConfig;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string cell = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Config, fmt::format("--t-list: not a number: '{}'", cell));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void print_checks(const std::vector<cli::CheckResult>& results) {
  for (const auto& r : results) {
    fmt::print("{} {:<30} max_error={:.3e} tol={:.1e} {:.2f}s{}\n", r.passed ? "PASS" : "FAIL", r.name, r.max_error,
               r.tolerance, r.seconds, r.note.empty() ? "" : "  (" + r.note + ")");
  }
}

struct RunArgs {
  std::string config;
  std::string out;
  std::string format;
  std::string t_list;
  std::optional<int> workers;
  bool inject_fault = false;
};

int run_mode(cli::Mode mode, const RunArgs& a) {
  nlohmann::json doc = nlohmann::json::object();
  if (!a.config.empty()) doc = cli::load_json(a.config);
  if (!a.t_list.empty()) {
    doc.erase("waiting_time");
    doc["t_list"] = parse_list(a.t_list);
  }
  if (!a.out.empty()) doc["output"]["directory"] = a.out;
  if (!a.format.empty()) {
    std::vector<std::string> formats;
    std::size_t pos = 0;
    while (true) {
      const auto comma = a.format.find(',', pos);
      formats.push_back(a.format.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    doc["output"]["formats"] = formats;
  }
  cli::JobSpec spec = cli::parse_job(doc, mode);
  spec.workers = cli::workers_from_env(a.workers ? a.workers
                                                 : (doc.contains("workers") ? std::optional<int>(spec.workers)
                                                                            : std::nullopt));

  if (mode == cli::Mode::Validate && a.out.empty()) {
    cli::ValidateOptions vo;
    vo.system = spec.system;
    vo.inject_parity_fault = a.inject_fault;
    const auto results = cli::validate_suite(vo);
    print_checks(results);
    for (const auto& r : results)
      if (!r.passed) return kExitValidate;
    return kExitOk;
  }

  const auto res = cli::run_job(spec);
  if (mode == cli::Mode::Validate) {
    for (const auto& r : res.manifest["oracles"]) {
      fmt::print("{} {:<30} max_error={:.3e} tol={:.1e}\n", r["passed"].get<bool>() ? "PASS" : "FAIL",
                 r["name"].get<std::string>(), r["max_error"].get<double>(), r["tolerance"].get<double>());
    }
  }
  for (const auto& f : res.files) fmt::print("wrote {}\n", f.string());
  return res.exit_code;
}

int run_peaks(const std::string& file, bool all) {
  const auto rep = cli::find_peaks(file, !all);
  if (!rep.two_dimensional) {
    fmt::print("omega,refined,height\n");
    for (const auto& p : rep.peaks_1d) fmt::print("{:.6g},{:.6g},{:.6g}\n", p.position, p.refined, p.height);
  } else {
    fmt::print("omega1,omega3,refined1,refined3,height,kind,k,label\n");
    for (const auto& p : rep.peaks_2d) {
      fmt::print("{:.6g},{:.6g},{:.6g},{:.6g},{:.6g},{},{},{}\n", p.omega1, p.omega3, p.refined1, p.refined3,
                 p.height, polariton::to_string(p.kind), p.k, p.label);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polariton linear, pump-probe and two-dimensional spectra"};
  app.set_version_flag("--version", std::string(POLARITON_VERSION));
  app.require_subcommand(1);

  RunArgs args;
  std::string peaks_file;
  bool peaks_all = false;

  struct Sub {
    cli::Mode mode;
    CLI::App* app;
  };
  std::vector<Sub> subs;
  const std::vector<std::pair<cli::Mode, const char*>> modes{
      {cli::Mode::Absorption, "linear absorption spectrum"},
      {cli::Mode::Twod, "two-dimensional spectra, one grid per waiting time"},
      {cli::Mode::PumpProbe, "pump-probe spectra, one per waiting time"},
      {cli::Mode::Slices, "waiting-time traces at the UP and dark-state lines"},
      {cli::Mode::Eig, "eigenvalues of the dynamics matrix"},
      {cli::Mode::Validate, "run the oracle cross-checks"}};
  for (const auto& [mode, help] : modes) {
    auto* sub = app.add_subcommand(cli::to_string(mode), help);
    sub->add_option("--config", args.config, "job file (JSON)");
    sub->add_option("--out", args.out, "output directory");
    sub->add_option("--format", args.format, "comma separated: csv,json");
    sub->add_option("--workers", args.workers, "worker threads, 0 = all cores");
    sub->add_option("--t-list", args.t_list, "waiting times in fs, e.g. \"0,250,500,750\"");
    if (mode == cli::Mode::Validate) {
      sub->add_flag("--inject-parity-fault", args.inject_fault, "drop the (-1)^(m3+m6) sign (must fail)");
    }
    subs.push_back({mode, sub});
  }
  auto* peaks = app.add_subcommand("peaks", "peak report for a CSV grid file");
  peaks->add_option("file", peaks_file, "grid file written by this tool")->required();
  peaks->add_flag("--all", peaks_all, "include peaks below 5% of the maximum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (peaks->parsed()) return run_peaks(peaks_file, peaks_all);
    for (const auto& s : subs)
      if (s.app->parsed()) {
        if (s.mode != cli::Mode::Validate && s.mode != cli::Mode::Eig && args.config.empty()) {
          throw Error(ErrorCode::Config, "--config: required for this mode");
        }
        return run_mode(s.mode, args);
      }
  } catch (const Error& e) {
    fmt::print(stderr, "error [{}]: {}\n", polariton::to_string(e.code()), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitNumeric;
  }
  return kExitConfig;
}

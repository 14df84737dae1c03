#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polariton/model.hpp"
#include "polariton/peaks.hpp"
#include "polariton/spectrum.hpp"

namespace polariton::cli {

enum class Mode { Absorption, Twod, PumpProbe, Slices, Eig, Validate };

std::string to_string(Mode mode);
/// Throws Error(Config) for an unknown name.
Mode parse_mode(const std::string& name);

struct AxisSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
};

struct JobSpec {
  Mode mode = Mode::Absorption;
  RawParams system;
  std::optional<double> tail_eps;
  std::optional<int> m_max;
  std::optional<AxisSpec> omega;
  std::optional<AxisSpec> omega1;
  std::optional<AxisSpec> omega3;
  std::vector<double> times;  // fs
  int dark_orders = 2;        // slices only
  std::filesystem::path out_dir = ".";
  std::vector<std::string> formats{"csv"};
  int workers = 0;            // 0 = auto
  nlohmann::json config;      // document as read, echoed into the manifest
};

/// Parses and checks a job document. `mode` overrides the document's own
/// "mode" key. Every problem is an Error(Config) whose message starts with the
/// offending key path.
JobSpec parse_job(const nlohmann::json& doc, std::optional<Mode> mode = std::nullopt);

/// Reads a JSON file; malformed documents are Error(Config), unreadable files
/// Error(Io).
nlohmann::json load_json(const std::filesystem::path& path);

/// Resolves the worker count: explicit value, else POLARITON2DCS_WORKERS, else 0.
int workers_from_env(std::optional<int> explicit_value);

struct RunResult {
  std::vector<std::filesystem::path> files;
  nlohmann::json manifest;
  int exit_code = 0;
};

/// Computes the requested spectra, writes the data files and manifest.json
/// (atomically) into spec.out_dir.
RunResult run_job(const JobSpec& spec);

// ------------------------------------------------------------ serialization

void write_csv(const SpectrumGrid& grid, const std::filesystem::path& path);
void write_json(const SpectrumGrid& grid, const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

/// Parses a CSV written by write_csv. Throws Error(Config) on malformed input.
SpectrumGrid read_grid_csv(const std::filesystem::path& path);

struct PeakReport {
  bool two_dimensional = false;
  std::vector<Peak1D> peaks_1d;
  std::vector<Peak2D> peaks_2d;
};

/// Peaks of a grid file: magnitude for 1D, |Im| for 2D; 2D peaks are
/// classified against the mode lines recorded in the file header.
PeakReport find_peaks(const std::filesystem::path& grid_file, bool dominant_only = true);

}  // namespace polariton::cli

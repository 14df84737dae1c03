#include "polariton/cli/job.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "polariton/cli/validate.hpp"
#include "polariton/model_json.hpp"
#include "polariton/signals.hpp"
#include "polariton/units.hpp"

namespace polariton::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Absorption: return "absorption";
    case Mode::Twod: return "twod";
    case Mode::PumpProbe: return "pump-probe";
    case Mode::Slices: return "slices";
    case Mode::Eig: return "eig";
    case Mode::Validate: return "validate";
  }
  return "unknown";
}

Mode parse_mode(const std::string& name) {
  for (Mode m : {Mode::Absorption, Mode::Twod, Mode::PumpProbe, Mode::Slices, Mode::Eig, Mode::Validate})
    if (to_string(m) == name) return m;
  throw Error(ErrorCode::Config, fmt::format("mode: unknown mode '{}'", name));
}

namespace {

[[noreturn]] void config_error(const std::string& key, const std::string& what) {
  throw Error(ErrorCode::Config, fmt::format("{}: {}", key, what));
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) config_error(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) config_error(where.empty() ? key : where + "." + key, "unknown key");
  }
}

double number(const json& v, const std::string& key) {
  if (!v.is_number()) config_error(key, "expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) config_error(key, "expected an integer");
  return v.get<int>();
}

AxisSpec parse_axis(const json& v, const std::string& key) {
  only_keys(v, key, {"start", "stop", "count"});
  for (const char* k : {"start", "stop", "count"})
    if (!v.contains(k)) config_error(key + "." + k, "missing");
  AxisSpec a{number(v["start"], key + ".start"), number(v["stop"], key + ".stop"),
             integer(v["count"], key + ".count")};
  try {
    (void)Axis::make(a.start, a.stop, a.count);
  } catch (const Error& e) {
    config_error(key, e.what());
  }
  return a;
}

void check_time(double t, const std::string& key) {
  if (!std::isfinite(t) || t < 0.0) config_error(key, fmt::format("waiting time {} must be finite and >= 0", t));
}

}  // namespace

nlohmann::json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, fmt::format("cannot open {}", path.string()));
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Config, fmt::format("{}: malformed JSON ({})", path.string(), e.what()));
  }
}

int workers_from_env(std::optional<int> explicit_value) {
  if (explicit_value) return *explicit_value;
  if (const char* env = std::getenv("POLARITON2DCS_WORKERS")) {
    int v = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) {
      config_error("POLARITON2DCS_WORKERS", fmt::format("expected a non-negative integer, got '{}'", s));
    }
    return v;
  }
  return 0;
}

JobSpec parse_job(const json& doc, std::optional<Mode> mode) {
  only_keys(doc, "", {"mode", "system", "kernel", "grid", "waiting_time", "t_list", "output", "workers",
                      "slices"});
  JobSpec spec;
  spec.config = doc;

  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) config_error("mode", "expected a string");
    const Mode declared = parse_mode(doc["mode"].get<std::string>());
    if (mode && *mode != declared) {
      config_error("mode", fmt::format("document says '{}' but '{}' was requested", to_string(declared),
                                       to_string(*mode)));
    }
    spec.mode = declared;
  } else if (mode) {
    spec.mode = *mode;
  } else {
    config_error("mode", "missing");
  }
  if (mode) spec.mode = *mode;

  if (doc.contains("system")) spec.system = raw_params_from_json(doc["system"]);

  if (doc.contains("kernel")) {
    const auto& k = doc["kernel"];
    only_keys(k, "kernel", {"tail_eps", "m_max"});
    if (k.contains("tail_eps") && k.contains("m_max")) config_error("kernel", "give tail_eps or m_max, not both");
    if (k.contains("tail_eps")) {
      spec.tail_eps = number(k["tail_eps"], "kernel.tail_eps");
      if (!(*spec.tail_eps > 0.0 && *spec.tail_eps < 1.0)) config_error("kernel.tail_eps", "must lie in (0, 1)");
    }
    if (k.contains("m_max")) {
      spec.m_max = integer(k["m_max"], "kernel.m_max");
      if (*spec.m_max < 0) config_error("kernel.m_max", "must be >= 0");
    }
  }

  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    only_keys(g, "grid", {"omega", "omega1", "omega3"});
    if (g.contains("omega")) spec.omega = parse_axis(g["omega"], "grid.omega");
    if (g.contains("omega1")) spec.omega1 = parse_axis(g["omega1"], "grid.omega1");
    if (g.contains("omega3")) spec.omega3 = parse_axis(g["omega3"], "grid.omega3");
  }

  if (doc.contains("waiting_time") && doc.contains("t_list")) {
    config_error("t_list", "give waiting_time or t_list, not both");
  }
  if (doc.contains("waiting_time")) {
    spec.times = {number(doc["waiting_time"], "waiting_time")};
  } else if (doc.contains("t_list")) {
    if (!doc["t_list"].is_array() || doc["t_list"].empty()) config_error("t_list", "expected a non-empty array");
    for (std::size_t k = 0; k < doc["t_list"].size(); ++k)
      spec.times.push_back(number(doc["t_list"][k], fmt::format("t_list[{}]", k)));
  }
  for (std::size_t k = 0; k < spec.times.size(); ++k) check_time(spec.times[k], fmt::format("t_list[{}]", k));

  if (doc.contains("slices")) {
    only_keys(doc["slices"], "slices", {"dark_orders"});
    if (doc["slices"].contains("dark_orders")) {
      spec.dark_orders = integer(doc["slices"]["dark_orders"], "slices.dark_orders");
      if (spec.dark_orders < 0) config_error("slices.dark_orders", "must be >= 0");
    }
  }

  if (doc.contains("output")) {
    const auto& o = doc["output"];
    only_keys(o, "output", {"directory", "formats"});
    if (o.contains("directory")) {
      if (!o["directory"].is_string()) config_error("output.directory", "expected a string");
      spec.out_dir = o["directory"].get<std::string>();
    }
    if (o.contains("formats")) {
      if (!o["formats"].is_array() || o["formats"].empty()) config_error("output.formats", "expected a non-empty array");
      spec.formats.clear();
      for (const auto& f : o["formats"]) {
        if (!f.is_string() || (f != "csv" && f != "json")) config_error("output.formats", "entries must be csv or json");
        spec.formats.push_back(f.get<std::string>());
      }
    }
  }

  if (doc.contains("workers")) {
    spec.workers = integer(doc["workers"], "workers");
    if (spec.workers < 0) config_error("workers", "must be >= 0");
  }

  const auto require = [&](bool ok, const char* key) {
    if (!ok) config_error(key, fmt::format("required for mode {}", to_string(spec.mode)));
  };
  switch (spec.mode) {
    case Mode::Absorption: require(spec.omega.has_value(), "grid.omega"); break;
    case Mode::Twod:
      require(spec.omega1.has_value(), "grid.omega1");
      require(spec.omega3.has_value(), "grid.omega3");
      require(!spec.times.empty(), "t_list");
      break;
    case Mode::PumpProbe:
      require(spec.omega.has_value(), "grid.omega");
      require(!spec.times.empty(), "t_list");
      break;
    case Mode::Slices: require(!spec.times.empty(), "t_list"); break;
    case Mode::Eig:
    case Mode::Validate: break;
  }

  try {
    (void)validate_params(spec.system);
  } catch (const ParamError& e) {
    std::string msg;
    for (const auto& v : e.violations()) msg += fmt::format("{}system.{}: {}", msg.empty() ? "" : "; ", v.field, v.message);
    throw Error(ErrorCode::Config, msg);
  }
  return spec;
}

// ------------------------------------------------------------ serialization

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

void write_atomically(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, fmt::format("cannot write {}", tmp.string()));
    out << contents;
    out.flush();
    if (!out) throw Error(ErrorCode::Io, fmt::format("write to {} failed", tmp.string()));
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, fmt::format("cannot move {} into place: {}", path.string(), ec.message()));
}

void write_csv(const SpectrumGrid& grid, const fs::path& path) {
  grid.check();
  std::string s;
  for (const auto& [k, v] : grid.metadata) s += fmt::format("# {}={}\n", k, v);
  if (grid.is_2d()) {
    s += "omega1,omega3,re,im\n";
    for (int r = 0; r < grid.rows(); ++r)
      for (int c = 0; c < grid.cols(); ++c) {
        const auto v = grid.at(r, c);
        s += fmt::format("{},{},{},{}\n", num(grid.axis1.at(r)), num(grid.axis2->at(c)), num(v.real()),
                         num(v.imag()));
      }
  } else {
    s += "omega,value\n";
    for (int r = 0; r < grid.rows(); ++r) s += fmt::format("{},{}\n", num(grid.axis1.at(r)), num(grid.at(r).real()));
  }
  write_atomically(path, s);
}

namespace {

json axis_json(const Axis& a) {
  return {{"start", a.start}, {"stop", a.stop}, {"count", a.count}, {"offset", a.offset}};
}

}  // namespace

void write_json(const SpectrumGrid& grid, const fs::path& path) {
  grid.check();
  json j;
  j["axis1"] = axis_json(grid.axis1);
  if (grid.axis2) j["axis2"] = axis_json(*grid.axis2);
  j["waiting_time"] = grid.waiting_time;
  json re = json::array(), im = json::array();
  for (const auto& v : grid.values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j["values_re"] = std::move(re);
  j["values_im"] = std::move(im);
  j["metadata"] = grid.metadata;
  write_atomically(path, j.dump(1) + "\n");
}

namespace {

double parse_double(std::string_view s, const std::string& where) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) config_error(where, fmt::format("not a number: '{}'", s));
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(line.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Axis axis_from_points(const std::vector<double>& pts, double offset, const std::string& where) {
  if (pts.size() < 2) config_error(where, "fewer than two distinct coordinates");
  try {
    return Axis::make(pts.front(), pts.back(), static_cast<int>(pts.size()), offset);
  } catch (const Error& e) {
    config_error(where, e.what());
  }
}

}  // namespace

SpectrumGrid read_grid_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, fmt::format("cannot open {}", path.string()));
  const std::string where = path.string();
  SpectrumGrid grid;
  std::string line;
  std::string header;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) config_error(fmt::format("{}:{}", where, lineno), "metadata line without '='");
      grid.metadata[line.substr(2, eq - 2)] = line.substr(eq + 1);
      continue;
    }
    header = line;
    break;
  }
  const bool two_d = header == "omega1,omega3,re,im";
  if (!two_d && header != "omega,value") config_error(fmt::format("{}:{}", where, lineno), "unrecognised column header");

  std::vector<double> c1, c3;
  std::vector<std::complex<double>> values;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line);
    const std::string loc = fmt::format("{}:{}", where, lineno);
    if (cells.size() != (two_d ? 4u : 2u)) config_error(loc, "wrong number of columns");
    if (two_d) {
      c1.push_back(parse_double(cells[0], loc));
      c3.push_back(parse_double(cells[1], loc));
      values.emplace_back(parse_double(cells[2], loc), parse_double(cells[3], loc));
    } else {
      c1.push_back(parse_double(cells[0], loc));
      values.emplace_back(parse_double(cells[1], loc), 0.0);
    }
  }
  double offset = 0.0;
  if (auto it = grid.metadata.find("axis_offset"); it != grid.metadata.end()) {
    offset = parse_double(it->second, where + ": axis_offset");
  }
  if (two_d) {
    std::vector<double> u1, u3;
    for (double v : c1)
      if (u1.empty() || u1.back() != v) u1.push_back(v);
    const std::set<double> s3(c3.begin(), c3.end());
    u3.assign(s3.begin(), s3.end());
    grid.axis1 = axis_from_points(u1, offset, where + ": omega1");
    grid.axis2 = axis_from_points(u3, offset, where + ": omega3");
  } else {
    grid.axis1 = axis_from_points(c1, offset, where + ": omega");
  }
  grid.values = std::move(values);
  try {
    grid.check();
  } catch (const Error& e) {
    config_error(where, e.what());
  }
  if (auto it = grid.metadata.find("waiting_time_fs"); it != grid.metadata.end()) {
    grid.waiting_time = parse_double(it->second, where + ": waiting_time_fs");
  }
  return grid;
}

PeakReport find_peaks(const fs::path& grid_file, bool dominant_only) {
  const SpectrumGrid grid = read_grid_csv(grid_file);
  PeakReport rep;
  rep.two_dimensional = grid.is_2d();
  std::vector<double> mag;
  mag.reserve(grid.values.size());
  for (const auto& v : grid.values) mag.push_back(grid.is_2d() ? std::abs(v.imag()) : std::abs(v.real()));

  if (!grid.is_2d()) {
    rep.peaks_1d = find_peaks_1d(mag, grid.axis1);
    if (dominant_only) rep.peaks_1d = dominant_peaks(rep.peaks_1d);
    return rep;
  }
  rep.peaks_2d = find_peaks_2d(mag, grid.axis1, *grid.axis2);
  if (dominant_only) rep.peaks_2d = dominant_peaks(rep.peaks_2d);

  const auto meta = [&](const char* key) -> std::optional<double> {
    auto it = grid.metadata.find(key);
    if (it == grid.metadata.end()) return std::nullopt;
    return parse_double(it->second, grid_file.string() + ": " + key);
  };
  const auto lp = meta("line_lp"), up = meta("line_up"), d = meta("line_dark"), wv = meta("system.omega_v");
  if (lp && up && d && wv) {
    const ModeLines lines{*lp, *up, *d};
    const double tol = std::max(grid.axis1.step(), grid.axis2->step());
    for (auto& p : rep.peaks_2d) classify_peak(p, lines, *wv, tol);
  }
  return rep;
}

// ------------------------------------------------------------------- run_job

namespace {

struct Context {
  SystemParams sys;
  ModeDecomposition dec;
  VibKernel kernel;
};

Context make_context(const JobSpec& spec) {
  const SystemParams sys = validate_params(spec.system);
  const ModeDecomposition dec = decompose(build_matrix(sys));
  VibKernel kernel = spec.m_max ? VibKernel::with_order(sys, *spec.m_max)
                                : VibKernel::from_tail(sys, spec.tail_eps.value_or(1e-10));
  return {sys, dec, kernel};
}

void stamp(SpectrumGrid& g, const JobSpec& spec, const Context& ctx) {
  auto& m = g.metadata;
  m["mode"] = to_string(spec.mode);
  m["parameter_hash"] = parameter_hash(ctx.sys);
  m["code_version"] = POLARITON_VERSION;
  m["m_max"] = std::to_string(ctx.kernel.m_max());
  m["fc_tail"] = num(ctx.kernel.tail_eps());
  m["axis_offset"] = num(ctx.sys.axis_offset());
  m["c_cm_per_fs"] = num(kSpeedOfLightCmPerFs);
  m["two_pi_c"] = num(kTwoPiC);
  m["units"] = "omega cm^-1 (absolute axis), time fs";
  const auto lines = mode_lines(ctx.sys, ctx.dec);
  m["line_lp"] = num(lines.lower);
  m["line_up"] = num(lines.upper);
  m["line_dark"] = num(lines.dark);
  if (g.is_2d() || spec.mode == Mode::PumpProbe) m["waiting_time_fs"] = num(g.waiting_time);
  const json sys = to_json(ctx.sys);
  for (const auto& [k, v] : sys.items()) m["system." + k] = v.is_number_integer() ? v.dump() : num(v.get<double>());
}

std::string time_tag(double t) { return fmt::format("T{:g}", t); }

void emit(const SpectrumGrid& g, const JobSpec& spec, const std::string& stem, RunResult& res, json& outputs) {
  for (const auto& f : spec.formats) {
    const fs::path path = spec.out_dir / (stem + "." + f);
    if (f == "csv") write_csv(g, path);
    else write_json(g, path);
    res.files.push_back(path);
    json entry{{"file", path.filename().string()},
               {"format", f},
               {"axis1", axis_json(g.axis1)},
               {"waiting_time_fs", g.waiting_time},
               {"metadata", g.metadata}};
    if (g.axis2) entry["axis2"] = axis_json(*g.axis2);
    outputs.push_back(std::move(entry));
  }
}

std::string slices_csv(const SliceReport& rep) {
  std::string s = "# quantity=pump-probe slices\n";
  const auto fit_line = [&](const SliceTrace& tr) {
    s += fmt::format("# fit.{}=scale {} residual {}\n", tr.label, num(tr.fitted_scale), num(tr.residual));
  };
  fit_line(rep.upper);
  for (const auto& d : rep.dark) fit_line(d);
  s += "t_fs,label,omega,formula,grid\n";
  const auto rows = [&](const SliceTrace& tr) {
    for (std::size_t k = 0; k < rep.times.size(); ++k)
      s += fmt::format("{},{},{},{},{}\n", num(rep.times[k]), tr.label, num(tr.omega), num(tr.formula[k]),
                       num(tr.grid[k]));
  };
  rows(rep.upper);
  for (const auto& d : rep.dark) rows(d);
  return s;
}

json slice_json(const SliceTrace& tr) {
  return {{"label", tr.label},   {"omega", tr.omega},
          {"formula", tr.formula}, {"grid", tr.grid},
          {"fitted_scale", tr.fitted_scale}, {"residual", tr.residual}};
}

}  // namespace

RunResult run_job(const JobSpec& spec) {
  const auto started = std::chrono::system_clock::now();
  const auto t0 = std::chrono::steady_clock::now();
  RunResult res;

  std::error_code ec;
  fs::create_directories(spec.out_dir, ec);
  if (ec || !fs::is_directory(spec.out_dir)) {
    throw Error(ErrorCode::Io, fmt::format("cannot create output directory {}", spec.out_dir.string()));
  }

  json manifest;
  manifest["config"] = spec.config;
  manifest["mode"] = to_string(spec.mode);
  manifest["code_version"] = POLARITON_VERSION;
  manifest["workers"] = spec.workers;
  manifest["unit_bridge"] = {{"c_cm_per_fs", kSpeedOfLightCmPerFs}, {"two_pi_c", kTwoPiC}};
  json outputs = json::array();

  if (spec.mode == Mode::Validate) {
    ValidateOptions vo;
    vo.system = spec.system;
    const auto results = validate_suite(vo);
    manifest["oracles"] = to_json(results);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    res.exit_code = ok ? 0 : 1;
  } else {
    const Context ctx = make_context(spec);
    manifest["system"] = to_json(ctx.sys);
    manifest["parameter_hash"] = parameter_hash(ctx.sys);
    manifest["truncation"] = {{"m_max", ctx.kernel.m_max()}, {"fc_tail", ctx.kernel.tail_eps()}};
    manifest["axis_offset"] = ctx.sys.axis_offset();

    switch (spec.mode) {
      case Mode::Absorption: {
        auto g = linear_absorption(ctx.sys, ctx.dec, ctx.kernel,
                                   Axis::make(spec.omega->start, spec.omega->stop, spec.omega->count), spec.workers);
        stamp(g, spec, ctx);
        emit(g, spec, "absorption", res, outputs);
        break;
      }
      case Mode::Twod: {
        TwodOptions opts;
        opts.workers = spec.workers;
        for (double t : spec.times) {
          auto g = twod_signal(ctx.sys, ctx.dec, ctx.kernel,
                               Axis::make(spec.omega1->start, spec.omega1->stop, spec.omega1->count),
                               Axis::make(spec.omega3->start, spec.omega3->stop, spec.omega3->count), t, opts);
          stamp(g, spec, ctx);
          emit(g, spec, "twod_" + time_tag(t), res, outputs);
        }
        break;
      }
      case Mode::PumpProbe: {
        for (double t : spec.times) {
          auto g = pump_probe(ctx.sys, ctx.dec, ctx.kernel,
                              Axis::make(spec.omega->start, spec.omega->stop, spec.omega->count), t, spec.workers);
          stamp(g, spec, ctx);
          emit(g, spec, "pump-probe_" + time_tag(t), res, outputs);
        }
        break;
      }
      case Mode::Slices: {
        const auto rep = pump_probe_slices(ctx.sys, ctx.dec, ctx.kernel, spec.times, spec.dark_orders);
        json traces = json::array();
        traces.push_back(slice_json(rep.upper));
        for (const auto& d : rep.dark) traces.push_back(slice_json(d));
        for (const auto& f : spec.formats) {
          const fs::path path = spec.out_dir / ("slices." + f);
          if (f == "csv") write_atomically(path, slices_csv(rep));
          else write_atomically(path, json{{"times", rep.times}, {"traces", traces}}.dump(1) + "\n");
          res.files.push_back(path);
          outputs.push_back({{"file", path.filename().string()}, {"format", f}, {"times", rep.times}});
        }
        manifest["slices"] = traces;
        break;
      }
      case Mode::Eig: {
        std::string s = "k,label,gamma,omega,omega_abs\n";
        json modes = json::array();
        for (int k = 0; k < ctx.dec.dimension(); ++k) {
          const cplx mu = ctx.dec.eigenvalue(k);
          const auto name = ctx.dec.label(k).name();
          s += fmt::format("{},{},{},{},{}\n", k, name, num(mu.real()), num(mu.imag()),
                           num(mu.imag() + ctx.sys.axis_offset()));
          modes.push_back({{"k", k}, {"label", name}, {"gamma", mu.real()}, {"omega", mu.imag()}});
        }
        for (const auto& f : spec.formats) {
          const fs::path path = spec.out_dir / ("eig." + f);
          if (f == "csv") write_atomically(path, s);
          else write_atomically(path, json{{"modes", modes}, {"axis_offset", ctx.sys.axis_offset()}}.dump(1) + "\n");
          res.files.push_back(path);
          outputs.push_back({{"file", path.filename().string()}, {"format", f}});
        }
        break;
      }
      case Mode::Validate: break;
    }
  }

  manifest["outputs"] = outputs;
  manifest["started_at"] = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::chrono::system_clock::to_time_t(started)));
  manifest["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_atomically(spec.out_dir / "manifest.json", manifest.dump(1) + "\n");
  res.files.push_back(spec.out_dir / "manifest.json");
  res.manifest = std::move(manifest);
  return res;
}

}  // namespace polariton::cli

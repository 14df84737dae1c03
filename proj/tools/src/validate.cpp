#include "polariton/cli/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "polariton/cli/oracles.hpp"
#include "polariton/signals.hpp"

namespace polariton::cli {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

RawParams random_params(Rng& rng, int n) {
  RawParams r;
  r.n_molecules = n;
  r.g = uniform(rng, 100.0, 900.0) / std::sqrt(static_cast<double>(n));
  r.delta_x = uniform(rng, -300.0, 300.0);
  r.delta_c = uniform(rng, -300.0, 300.0);
  r.gamma_x = uniform(rng, 0.5, 30.0);
  r.gamma_c = uniform(rng, 0.5, 30.0);
  r.omega_v = uniform(rng, 600.0, 1600.0);
  r.gamma_v = uniform(rng, 5.0, 40.0);
  r.lambda_hr = uniform(rng, 0.2, 1.2);
  r.phase = uniform(rng, 0.0, 6.0);
  return r;
}

template <typename Fn>
CheckResult timed(std::string name, double tol, Fn&& body) {
  CheckResult r;
  r.name = std::move(name);
  r.tolerance = tol;
  const auto t0 = std::chrono::steady_clock::now();
  r.max_error = body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = std::isfinite(r.max_error) && r.max_error < tol;
  return r;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

std::vector<CheckResult> validate_suite(const ValidateOptions& opts) {
  std::vector<CheckResult> out;
  const SystemParams ref = validate_params(opts.system);

  out.push_back(timed("expm_vs_arrowhead", 1e-10, [](CheckResult&) {
    Rng rng(101);
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n)
      for (int s = 0; s < 20; ++s) {
        const auto sys = validate_params(random_params(rng, n));
        const auto m = build_matrix(sys);
        const auto dec = decompose(m);
        const double t = uniform(rng, 0.0, 300.0);
        worst = std::max(worst, (propagator_G(dec, t) - expm_oracle(m, t)).cwiseAbs().maxCoeff());
      }
    return worst;
  }));

  out.push_back(timed("quadrature_vs_resolvent", 1e-6, [&](CheckResult&) {
    Rng rng(202);
    const auto dec = decompose(build_matrix(ref));
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const cplx w{uniform(rng, -2500.0, 2500.0), uniform(rng, 0.0, 60.0)};
      worst = std::max(worst, max_relative_difference(resolvent(dec, w), quadrature_resolvent(dec, w)));
    }
    return worst;
  }));

  out.push_back(timed("fock_vs_correlator", 1e-8, [](CheckResult& r) {
    Rng rng(303);
    double worst = 0.0;
    bool warned = false;
    for (double lambda : {0.3, 0.7, 1.0, 1.2}) {
      const auto k = VibKernel::with_order(lambda, 1200.0, 0.0, 0);
      for (int s = 0; s < 50; ++s) {
        TimeQuadruple q;
        for (int a = 0; a < 4; ++a) {
          q.times[a] = uniform(rng, 0.0, 200.0);
          q.sites[a] = std::uniform_int_distribution<int>(0, 2)(rng);
        }
        const auto f = fock_oracle_correlator(q, lambda, 1200.0, 40);
        warned = warned || f.truncation_warning;
        worst = std::max(worst, std::abs(f.value - four_point_correlator(q, k)));
      }
    }
    if (warned) r.note = "Fock truncation warning raised";
    return worst;
  }));

  const auto direct_check = [&](bool twod) {
    return [&, twod](CheckResult&) {
      Rng rng(twod ? 404 : 505);
      TwodOptions to;
      to.drop_vibronic_parity = opts.inject_parity_fault;
      double worst = 0.0;
      for (int n = 2; n <= 5; ++n) {
        const auto sys = validate_params(random_params(rng, n));
        const auto dec = decompose(build_matrix(sys));
        const auto k = VibKernel::with_order(sys, 3);
        for (int s = 0; s < 20; ++s) {
          const double w1 = uniform(rng, -1500.0, 1500.0);
          const double w3 = uniform(rng, -1500.0, 1500.0);
          const double t = uniform(rng, 0.0, 300.0);
          if (twod) {
            worst = std::max(worst, rel(twod_signal_point(sys, dec, k, w1, w3, t, to),
                                        twod_signal_direct(sys, dec, k, w1, w3, t)));
          } else {
            worst = std::max(worst, rel(pump_probe_at(sys, dec, k, w3, t), pump_probe_direct(sys, dec, k, w3, t)));
          }
        }
      }
      return worst;
    };
  };
  out.push_back(timed("twod_direct_vs_classes", 1e-10, direct_check(true)));
  out.push_back(timed("pump_probe_direct_vs_classes", 1e-10, direct_check(false)));

  out.push_back(timed("slices_vs_resonant_terms", 1e-10, [&](CheckResult&) {
    // The slice formulas are e^{lambda^2} times the single-mode resonant
    // pieces of the pump-probe sum; the upper one needs gamma_x == gamma_c.
    RawParams raw = opts.system;
    raw.n_molecules = std::min(raw.n_molecules, 6);
    raw.gamma_c = raw.gamma_x;
    raw.delta_x = raw.delta_c = 0.0;
    const auto sys = validate_params(raw);
    const auto dec = decompose(build_matrix(sys));
    const auto k = VibKernel::with_order(sys, 4);
    const double e = std::exp(sys.lambda_hr() * sys.lambda_hr());
    // The n = 0 dark trace vanishes identically, so errors are measured
    // against the largest trace value rather than pointwise.
    double diff = 0.0, scale = 0.0;
    const auto add = [&](double formula, double term) {
      diff = std::max(diff, std::abs(formula - e * term));
      scale = std::max(scale, std::abs(e * term));
    };
    for (double t : {0.0, 37.0, 180.0, 420.0}) {
      add(slice_upper_formula(dec, k, t),
          pump_probe_mode_term(dec, k, dec.upper().imag(), t, 0, [](int m) { return m == 1; }));
      for (int order = 0; order <= 2; ++order) {
        const double w = dec.dark().imag() - order * k.omega_v();
        add(slice_dark_formula(dec, k, order, t),
            pump_probe_mode_term(dec, k, w, t, order, [](int m) { return m >= 2; }));
      }
    }
    return diff / scale;
  }));

  const auto ratio_check = [](RawParams raw) {
    return [raw](CheckResult&) {
      const auto sys = validate_params(raw);
      const auto dec = decompose(build_matrix(sys));
      const auto k = VibKernel::from_tail(sys);
      const double lp = absorption_at(sys, dec, k, dec.lower().imag());
      const double eds = absorption_at(sys, dec, k, dec.dark().imag() + sys.omega_v());
      return std::abs((eds / lp) / peak_ratios(sys, dec, 1).eds_over_lp[0] - 1.0);
    };
  };
  out.push_back(timed("ratio_law_reference", 0.05, ratio_check(opts.system)));
  {
    RawParams equal = opts.system;
    equal.gamma_x = equal.gamma_c = 1.0;
    out.push_back(timed("ratio_law_equal_damping", 0.01, ratio_check(equal)));
  }

  out.push_back(timed("franck_condon_normalization", 1e-10, [](CheckResult&) {
    double worst = 0.0;
    for (double lambda : {0.0, 0.5, 1.0, 2.0, 3.0}) {
      const auto k = VibKernel::from_tail(lambda, 1200.0, 20.0);
      double sum = 0.0;
      for (double w : k.weights()) sum += w;
      worst = std::max(worst, std::max(0.0, 1.0 - sum));
    }
    return worst;
  }));

  return out;
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    arr.push_back({{"name", r.name},
                   {"max_error", r.max_error},
                   {"tolerance", r.tolerance},
                   {"passed", r.passed},
                   {"seconds", r.seconds},
                   {"note", r.note}});
  }
  return arr;
}

}  // namespace polariton::cli

#include "radmap/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "radmap/continuum.hpp"
#include "radmap/mapping.hpp"
#include "radmap/susy.hpp"
#include "radmap/verify.hpp"

namespace radmap::harness {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void add(SuiteResult& s, const std::string& name, double value, double tol) {
  s.checks.push_back({name, value <= tol, value, tol});
}

void add_flag(SuiteResult& s, const std::string& name, bool ok) {
  s.checks.push_back({name, ok, ok ? 0.0 : 1.0, 0.0});
}

double pointwise_rel_error(const RadialState& got, const RadialState& want,
                           const std::vector<double>& grid) {
  double sup = 0.0, err = 0.0;
  for (double r : grid) {
    sup = std::max(sup, std::abs(want(r).value));
    err = std::max(err, std::abs(got(r).value - want(r).value));
  }
  return err / std::max(sup, 1e-300);
}

sqdt::CoulombDefectProfile constant_coulomb(int filled, double defect, int j = 0) {
  sqdt::CoulombDefectProfile p;
  p.tail_filled = filled;
  p.tail_defect = defect;
  p.dim_shift = j;
  return p;
}

sqdt::OscillatorDefectProfile constant_osc(int inaccessible, double defect,
                                           int J = 0) {
  sqdt::OscillatorDefectProfile p;
  p.tail_inaccessible = inaccessible;
  p.tail_defect = defect;
  p.dim_shift = J;
  return p;
}

}  // namespace

bool SuiteResult::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* SuiteResult::worst() const {
  const CheckResult* w = nullptr;
  double ratio = -1.0;
  for (const auto& c : checks) {
    const double r = c.value / std::max(c.tolerance, 1e-300);
    if (r > ratio) {
      ratio = r;
      w = &c;
    }
  }
  return w;
}

SuiteResult table1_reproduction() {
  Timer t;
  SuiteResult s{"table1", {}, 0.0};
  const auto rows = mapping::sodium_table(1);
  struct Expected {
    const char* printed;
    int decimals;
  };
  const Expected expected[5] = {{"1.20", 2}, {"1.218", 3}, {"0.52", 2},
                                {"0.50", 2}, {"0.5", 1}};
  for (size_t i = 0; i < rows.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", expected[i].decimals, rows[i].Delta);
    add_flag(s, "row l=" + std::to_string(rows[i].l) + " prints " +
                    expected[i].printed,
             std::string(buf) == expected[i].printed);
    const double tol = 0.5 * std::pow(10.0, -expected[i].decimals);
    add(s, "row l=" + std::to_string(rows[i].l) + " numeric",
        std::abs(rows[i].Delta - std::atof(expected[i].printed)), tol);
  }
  s.runtime_seconds = t.seconds();
  return s;
}

SuiteResult orthonormality() {
  Timer t;
  SuiteResult s{"orthonormality", {}, 0.0};
  for (int d : {2, 3, 5, 8}) {
    for (int l = 0; l <= 3; ++l) {
      std::vector<RadialState> stack;
      for (int n = l + 1; n <= l + 6; ++n)
        stack.push_back(systems::coulomb_state({d, n, l}));
      add(s, "coulomb d=" + std::to_string(d) + " l=" + std::to_string(l),
          verify::overlap_identity_deviation(stack), 1e-8);
    }
  }
  for (int D : {1, 2, 3, 4, 7}) {
    for (int L = 0; L <= (D == 1 ? 1 : 3); ++L) {
      std::vector<RadialState> stack;
      for (int k = 0; k <= 5; ++k)
        stack.push_back(systems::oscillator_state({D, L + 2 * k, L}));
      add(s, "oscillator D=" + std::to_string(D) + " L=" + std::to_string(L),
          verify::overlap_identity_deviation(stack), 1e-8);
    }
  }
  s.runtime_seconds = t.seconds();
  return s;
}

SuiteResult eigen_residuals() {
  Timer t;
  SuiteResult s{"residuals", {}, 0.0};

  for (int d : {2, 3, 5, 8}) {
    double worst = 0.0;
    for (int l = 0; l <= 3; ++l) {
      for (int n = l + 1; n <= l + 4; ++n) {
        const CoulombQN qn{d, n, l};
        const auto w = systems::coulomb_state(qn);
        worst = std::max(worst,
                         verify::residual_scan(systems::coulomb_operator(qn, w.energy),
                                               w, systems::coulomb_grid(n + qn.gamma()))
                             .max_rel);
      }
    }
    add(s, "exact coulomb d=" + std::to_string(d), worst, 1e-8);
  }
  for (int D : {1, 2, 3, 4, 7}) {
    double worst = 0.0;
    for (int L = 0; L <= (D == 1 ? 1 : 3); ++L) {
      for (int k = 0; k <= 3; ++k) {
        const OscillatorQN qn{D, L + 2 * k, L};
        const auto W = systems::oscillator_state(qn);
        worst = std::max(
            worst, verify::residual_scan(systems::oscillator_operator(qn, W.energy), W,
                                         systems::oscillator_grid())
                       .max_rel);
      }
    }
    add(s, "exact oscillator D=" + std::to_string(D), worst, 1e-8);
  }

  // SUSY sectors through tier 2, paired with the partner-form equations
  for (int tier = 1; tier <= 2; ++tier) {
    double worst_c = 0.0, worst_o = 0.0;
    for (int d : {3, 5}) {
      const double g = 0.5 * (d - 3.0);
      for (int l = 0; l <= 2; ++l) {
        const double lt = l + tier + g;
        const double shift = 1.0 / (4.0 * lt * lt);
        for (int n = l + tier + 1; n <= l + tier + 3; ++n) {
          const auto w = susy::sector_state_coulomb(d, l, tier, n);
          RadialOperator op{[lt, shift](double y) {
                              return lt * (lt + 1.0) / (y * y) - 1.0 / y + shift;
                            },
                            shift - 1.0 / (4.0 * (n + g) * (n + g))};
          worst_c = std::max(
              worst_c,
              verify::residual_scan(op, w, systems::coulomb_grid(n + g)).max_rel);
        }
      }
    }
    for (int D : {3, 4}) {
      const double G = 0.5 * (D - 3.0);
      for (int L = 0; L <= 2; ++L) {
        const double Lt = L + tier + G;
        for (int k = 0; k <= 2; ++k) {
          const int Nt = L + tier + 2 * k;
          const auto W = susy::sector_state_oscillator(D, L, tier, Nt);
          RadialOperator op{[Lt](double Y) {
                              return Lt * (Lt + 1.0) / (Y * Y) + Y * Y -
                                     (2.0 * Lt - 1.0);
                            },
                            2.0 * (Nt - L - tier + 2.0)};
          worst_o = std::max(worst_o, verify::residual_scan(
                                          op, W, systems::oscillator_grid())
                                          .max_rel);
        }
      }
    }
    add(s, "susy coulomb tier " + std::to_string(tier), worst_c, 1e-8);
    add(s, "susy oscillator tier " + std::to_string(tier), worst_o, 1e-8);
  }

  // quantum-defect systems: sodium plus synthetic profiles
  struct NamedCoulomb {
    const char* name;
    sqdt::CoulombDefectProfile p;
  };
  const NamedCoulomb cps[] = {{"sodium", sqdt::sodium_coulomb_profile()},
                              {"synthetic fermionic", constant_coulomb(1, 0.0)},
                              {"synthetic defect", constant_coulomb(0, 0.3)},
                              {"synthetic dim-shift", constant_coulomb(1, 0.25, 2)}};
  for (const auto& c : cps) {
    double worst = 0.0;
    for (int l = 0; l <= 3; ++l) {
      for (int n = l + 1; n <= l + 3; ++n) {
        const auto w = sqdt::sqdt_coulomb_state(c.p, 3, n, l);
        const auto op = sqdt::sqdt_coulomb_operator(c.p, 3, n, l);
        const auto st = sqdt::coulomb_starred(c.p, 3, n, l);
        worst = std::max(
            worst, verify::residual_scan(
                       op, w, systems::coulomb_grid(st.n_star + st.gamma_star))
                       .max_rel);
      }
    }
    add(s, std::string("sqdt coulomb ") + c.name, worst, 1e-8);
  }
  struct NamedOsc {
    const char* name;
    sqdt::OscillatorDefectProfile p;
  };
  const NamedOsc ops[] = {{"synthetic fermionic", constant_osc(1, 0.0)},
                          {"synthetic defect", constant_osc(0, 0.5)},
                          {"synthetic dim-shift", constant_osc(2, 0.35, -1)}};
  for (const auto& c : ops) {
    double worst = 0.0;
    for (int L = 0; L <= 3; ++L) {
      for (int k = 0; k <= 2; ++k) {
        const auto W = sqdt::sqdt_oscillator_state(c.p, 3, L + 2 * k, L);
        const auto op = sqdt::sqdt_oscillator_operator(c.p, 3, L + 2 * k, L);
        worst = std::max(
            worst,
            verify::residual_scan(op, W, systems::oscillator_grid()).max_rel);
      }
    }
    add(s, std::string("sqdt oscillator ") + c.name, worst, 1e-8);
  }

  s.runtime_seconds = t.seconds();
  return s;
}

SuiteResult classic_map_identities() {
  Timer t;
  SuiteResult s{"classic map", {}, 0.0};
  for (int d : {3, 4, 5}) {
    double worst_pw = 0.0, worst_en = 0.0;
    for (int l = 0; l <= 2; ++l) {
      for (int lambda = -2 * l; lambda <= d - 2; ++lambda) {
        for (int n = l + 1; n <= 6; ++n) {
          const auto r = mapping::classic_map(d, lambda, n, l);
          worst_pw = std::max(
              worst_pw, pointwise_rel_error(r.transported,
                                            systems::oscillator_state(r.image),
                                            systems::oscillator_grid()));
          const double E = systems::coulomb_energy({d, n, l});
          worst_en = std::max(worst_en,
                              std::abs(systems::oscillator_energy(r.image) -
                                       2.0 * std::sqrt(1.0 / -E)));
        }
      }
    }
    add(s, "pointwise identity d=" + std::to_string(d), worst_pw, 1e-10);
    add(s, "energy relation d=" + std::to_string(d), worst_en, 1e-12);
  }
  // full-spectrum images of d = 3 are exactly the two- and four-dimensional
  // oscillators
  const auto range = mapping::classic_map_range(3, 0, true);
  add_flag(s, "d=3 full-spectrum images are D in {2,4}",
           range.size() == 2 && range[0].first == 2 && range[1].first == 4);
  s.runtime_seconds = t.seconds();
  return s;
}

SuiteResult odd_dimension_map() {
  Timer t;
  SuiteResult s{"odd-dimension map", {}, 0.0};
  // j = 0, J = 1, lambda = 1: a three-dimensional Coulomb system injected
  // into a three-dimensional oscillator
  double worst_pw = 0.0, worst_en = 0.0;
  bool dims_ok = true;
  for (int l = 0; l <= 1; ++l) {
    for (int n = l + 1; n <= 4; ++n) {
      const auto spec = mapping::three_dim_map(1, mapping::ThreeDimExact::coulomb_exact,
                                               n, l);
      dims_ok = dims_ok && spec.image.D_star == 3.0 &&
                spec.coulomb_profile.dim_shift == 0 &&
                spec.oscillator_profile.dim_shift == 1;
      const auto res = mapping::general_map(spec);
      worst_pw = std::max(worst_pw, res.report.max_pointwise_rel_error);
      worst_en = std::max(worst_en, res.report.energy_residual);
    }
  }
  add_flag(s, "d=3, j=0, J=1 yields D*=3", dims_ok);
  add(s, "pointwise identity (D*=3)", worst_pw, 1e-10);
  add(s, "energy relation F = 2 sqrt(E0/-E) + 4a (D*=3)", worst_en, 1e-12);

  // a second odd image: lambda = 0, J = 1 lands in D* = 5 (l >= 1 keeps the
  // image angular momentum L* = 2l - 1/2 nonnegative)
  const auto spec5 = mapping::make_map_spec(0, constant_coulomb(0, 0.0), 3, 2, 1,
                                            constant_osc(0, 0.5, 1));
  add_flag(s, "lambda=0, J=1 yields D*=5", spec5.image.D_star == 5.0);
  const auto res5 = mapping::general_map(spec5);
  add(s, "pointwise identity (D*=5)", res5.report.max_pointwise_rel_error, 1e-10);
  add(s, "energy relation (D*=5)", res5.report.energy_residual, 1e-12);
  s.runtime_seconds = t.seconds();
  return s;
}

SuiteResult three_dim_special_cases() {
  Timer t;
  SuiteResult s{"three-dimensional special cases", {}, 0.0};
  using mapping::ThreeDimExact;
  {
    const auto s1 = mapping::three_dim_map(1, ThreeDimExact::oscillator_exact, 2, 0);
    const auto s2 = mapping::three_dim_map(1, ThreeDimExact::oscillator_exact, 2, 1);
    add_flag(s, "kets (9/4,1/4) and (9/4,5/4) land on (N=3,L=1) and (N=3,L=3)",
             s1.source.n_star == 2.25 && s1.source.l_star == 0.25 &&
                 s2.source.n_star == 2.25 && s2.source.l_star == 1.25 &&
                 s1.image.N_star == 3.0 && s1.image.L_star == 1.0 &&
                 s2.image.N_star == 3.0 && s2.image.L_star == 3.0);
    const auto r1 = mapping::general_map(s1);
    const auto r2 = mapping::general_map(s2);
    add(s, "oscillator-exact pointwise (l=0)", r1.report.max_pointwise_rel_error,
        1e-10);
    add(s, "oscillator-exact pointwise (l=1)", r2.report.max_pointwise_rel_error,
        1e-10);
    add(s, "degeneracy preserved (F values)",
        std::abs(r1.target.energy - r2.target.energy), 1e-14);
  }
  {
    const auto s1 = mapping::three_dim_map(0, ThreeDimExact::coulomb_exact, 3, 1);
    const auto s2 = mapping::three_dim_map(0, ThreeDimExact::coulomb_exact, 3, 2);
    add_flag(s, "kets (n=3,l=1) and (n=3,l=2) land on (9/2,5/2) and (9/2,9/2)",
             s1.image.N_star == 4.5 && s1.image.L_star == 2.5 &&
                 s2.image.N_star == 4.5 && s2.image.L_star == 4.5);
    const auto r1 = mapping::general_map(s1);
    const auto r2 = mapping::general_map(s2);
    add(s, "coulomb-exact pointwise (l=1)", r1.report.max_pointwise_rel_error, 1e-10);
    add(s, "coulomb-exact pointwise (l=2)", r2.report.max_pointwise_rel_error, 1e-10);
    add(s, "degeneracy preserved (F values)",
        std::abs(r1.target.energy - r2.target.energy), 1e-14);
  }
  s.runtime_seconds = t.seconds();
  return s;
}

SuiteResult susy_structure(int d_max, int l_max) {
  Timer t;
  SuiteResult s{"susy", {}, 0.0};

  double worst_annihilation = 0.0;
  for (int d = 2; d <= d_max; ++d) {
    for (int l = 0; l <= l_max; ++l) {
      const auto sp = susy::superpotential_coulomb(d, l);
      const auto ground = systems::coulomb_state({d, l + 1, l});
      const auto r = susy::ladder_down(sp, ground);
      double sup = 0.0, wsup = 0.0;
      for (double y : systems::coulomb_grid(l + 1 + 0.5 * (d - 3.0))) {
        sup = std::max(sup, std::abs(r.state(y).value));
        wsup = std::max(wsup, std::abs(ground(y).value));
      }
      worst_annihilation = std::max(worst_annihilation, sup / wsup);
    }
  }
  for (int D = 1; D <= d_max; ++D) {
    for (int L = 0; L <= (D == 1 ? 1 : l_max); ++L) {
      const auto sp = susy::superpotential_oscillator(D, L);
      const auto ground = systems::oscillator_state({D, L, L});
      const auto r = susy::ladder_down(sp, ground);
      double sup = 0.0, wsup = 0.0;
      for (double Y : systems::oscillator_grid()) {
        sup = std::max(sup, std::abs(r.state(Y).value));
        wsup = std::max(wsup, std::abs(ground(Y).value));
      }
      worst_annihilation = std::max(worst_annihilation, sup / wsup);
    }
  }
  add(s, "ground-state annihilation sup norm", worst_annihilation, 1e-8);

  double worst_match = 0.0, worst_eps = 0.0;
  for (int d : {2, 3, 5, 8}) {
    const double g = 0.5 * (d - 3.0);
    for (int l = 0; l <= l_max; ++l) {
      const auto sp = susy::superpotential_coulomb(d, l);
      for (int n = l + 2; n <= l + 4; ++n) {
        const auto w = systems::coulomb_state({d, n, l});
        const auto target = systems::coulomb_state({d, n, l + 1});
        const auto r = susy::ladder_down(sp, w);
        const auto grid = systems::coulomb_grid(n + g);
        double peak = 0.0, av = 0.0, bv = 0.0;
        for (double y : grid) {
          const double wv = std::abs(target(y).value);
          if (wv > peak) {
            peak = wv;
            av = r.state(y).value;
            bv = target(y).value;
          }
        }
        const double sign = av * bv >= 0.0 ? 1.0 : -1.0;
        double sup = 0.0;
        for (double y : grid)
          sup = std::max(sup, std::abs(r.state(y).value / r.norm -
                                       sign * target(y).value));
        worst_match = std::max(worst_match, sup);
        const double eps = susy::susy_energy_coulomb(d, n, l);
        worst_eps = std::max(worst_eps, std::abs(r.norm * r.norm - eps) / eps);
      }
    }
  }
  add(s, "intertwining pointwise match", worst_match, 1e-8);
  add(s, "ladder norm squared equals the shifted eigenvalue", worst_eps, 1e-8);

  bool degeneracies = true;
  for (int d : {2, 3, 5, 8}) {
    for (int l = 0; l <= l_max; ++l) {
      for (int n = l + 2; n <= l + 5; ++n)
        degeneracies = degeneracies &&
                       susy::susy_energy_coulomb_fermionic(d, n, l + 1) ==
                           susy::susy_energy_coulomb(d, n, l);
    }
  }
  for (int D : {1, 2, 3, 4, 7}) {
    for (int L = 0; L <= (D == 1 ? 1 : l_max); ++L) {
      for (int k = 1; k <= 3; ++k)
        degeneracies = degeneracies &&
                       susy::susy_energy_oscillator_fermionic(D, L + 2 * k - 1, L + 1) ==
                           susy::susy_energy_oscillator(D, L + 2 * k, L);
    }
  }
  add_flag(s, "degeneracy pairings n'=n and N'+1=N on analytic spectra",
           degeneracies);
  s.runtime_seconds = t.seconds();
  return s;
}

SuiteResult fd_oracle(const sqdt::CoulombDefectProfile& profile, int l) {
  Timer t;
  SuiteResult s{"fd-oracle", {}, 0.0};
  const auto op = sqdt::sqdt_coulomb_operator(profile, 3, l + 1, l);
  const auto numeric = verify::fd_eigensolve(op.potential, 3, 4000, 200.0);
  std::vector<double> analytic;
  for (int n = l + 1; n <= l + 3; ++n)
    analytic.push_back(sqdt::sqdt_coulomb_energy(profile, 3, n, l));
  const auto cmp = verify::compare_spectra(analytic, numeric, 4000, 200.0);
  add(s, "lowest three deformed levels", cmp.max_rel_error(), 1e-4);

  const auto coarse =
      verify::fd_eigensolve([](double y) { return y * y; }, 1, 1000, 10.0);
  const auto fine =
      verify::fd_eigensolve([](double y) { return y * y; }, 1, 2001, 10.0);
  const double ratio = std::abs(coarse[0] - 3.0) / std::abs(fine[0] - 3.0);
  add_flag(s, "second-order convergence ratio in [3,5]", ratio >= 3.0 && ratio <= 5.0);
  s.runtime_seconds = t.seconds();
  return s;
}

SuiteResult continuum_maps() {
  Timer t;
  SuiteResult s{"continuum", {}, 0.0};
  double worst_res = 0.0, worst_ratio = 0.0;
  for (int lambda : {0, 1}) {
    for (double E : {0.25, 1.0, 4.0}) {
      const auto r = continuum::continuum_map(3, E, 0, lambda);
      worst_ratio = std::max(worst_ratio, r.ratio_deviation);
      const auto op = continuum::inverted_oscillator_operator(r.D, r.L, r.F);
      worst_res = std::max(
          worst_res, verify::residual_scan(op, r.transported.eval,
                                           continuum::oscillator_continuum_grid())
                         .max_rel);
    }
  }
  add(s, "transported waves solve the inverted-oscillator equation", worst_res, 1e-6);
  add(s, "proportionality constant is constant", worst_ratio, 1e-8);

  const auto rep = continuum::repulsive_map(3, 1.0, 0, 0);
  add_flag(s, "repulsive variant yields F < 0", rep.F < 0.0);
  const auto op = continuum::inverted_oscillator_operator(rep.D, rep.L, rep.F);
  add(s, "repulsive transported-wave residual",
      verify::residual_scan(op, rep.transported.eval,
                            continuum::oscillator_continuum_grid())
          .max_rel,
      1e-6);
  s.runtime_seconds = t.seconds();
  return s;
}

SuiteResult figure_commutativity() {
  Timer t;
  SuiteResult s{"figure commutativity", {}, 0.0};
  bool qn_equal = true;
  double worst_pw = 0.0;

  // bosonic/fermionic square: stack shift then transport vs transport then
  // bosonic -> second-fermionic shift
  for (int lambda : {0, 1}) {
    for (int n = 1; n <= 5; ++n) {
      const auto shifted = susy::stack_correspondence(susy::CoulombStack{n, 0});
      const auto pathA = mapping::classic_map(3, lambda, shifted.n, shifted.l);
      const auto base = mapping::classic_map(3, lambda, n, 0);
      const auto pathB = susy::stack_correspondence(
          susy::OscillatorStack{base.image.N, base.image.L});
      qn_equal = qn_equal && pathA.image.N == pathB.N && pathA.image.L == pathB.L;
      const auto target =
          systems::oscillator_state({base.image.D, pathB.N, pathB.L});
      worst_pw = std::max(worst_pw,
                          pointwise_rel_error(pathA.transported, target,
                                              systems::oscillator_grid()));
    }
  }

  // bosonic/SQDT square: deform then map vs map then deform
  const auto cp = constant_coulomb(1, 0.2);
  const auto op = constant_osc(2, 0.4);  // A = 2a = 1.6
  for (int lambda : {0, 1}) {
    for (int n = 1; n <= 5; ++n) {
      const auto spec = mapping::make_map_spec(lambda, cp, 3, n, 0, op);
      const auto classic = mapping::classic_map(3, lambda, n, 0);
      const auto starred = sqdt::oscillator_starred(op, classic.image.D,
                                                    classic.image.N, classic.image.L);
      qn_equal = qn_equal && std::abs(spec.image.N_star - starred.N_star) < 1e-14 &&
                 std::abs(spec.image.L_star - starred.L_star) < 1e-14 &&
                 spec.image.D_star == starred.D_star;
      const auto res = mapping::general_map(spec);
      worst_pw = std::max(worst_pw, res.report.max_pointwise_rel_error);
    }
  }
  add_flag(s, "quantum-number paths agree", qn_equal);
  add(s, "pointwise state equality along both paths", worst_pw, 1e-10);
  s.runtime_seconds = t.seconds();
  return s;
}

std::vector<SuiteResult> run_all() {
  return {table1_reproduction(), orthonormality(),           eigen_residuals(),
          classic_map_identities(), odd_dimension_map(),     three_dim_special_cases(),
          susy_structure(),         fd_oracle(),             continuum_maps(),
          figure_commutativity()};
}

}  // namespace radmap::harness

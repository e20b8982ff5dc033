#include <cmath>

#include "doctest.h"
#include "radmap/specfun.hpp"
#include "radmap/systems.hpp"
#include "radmap/verify.hpp"

using namespace radmap;
using namespace radmap::verify;

TEST_CASE("quadrature self-test: weighted polynomials are exact") {
  // y^alpha e^{-y/s} y^m for m <= 2*order - 1 integrates to
  // s^{alpha+m+1} Gamma(alpha+m+1).
  const auto rule = gauss_laguerre_rule(24, 1.5, 0.7);
  for (int m = 0; m < 2 * 24 - 1; m += 7) {
    const double got = integrate_halfline(
        [m](double y) { return std::pow(y, 1.5 + m) * std::exp(-y / 0.7); }, rule);
    const double expected =
        std::pow(0.7, 2.5 + m) * specfun::gamma_fn(2.5 + m);
    CHECK(got == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("half-line integrals of the named trivial cases") {
  const auto exp_rule = rule_for(DecayClass::exponential, 1.0, 2.0);
  CHECK(integrate_halfline([](double y) { return y * y * std::exp(-y); },
                           exp_rule) == doctest::Approx(2.0).epsilon(1e-12));

  const auto gauss_rule = rule_for(DecayClass::gaussian);
  CHECK(integrate_halfline([](double y) { return y * y * std::exp(-y * y); },
                           gauss_rule) ==
        doctest::Approx(std::sqrt(M_PI) / 4.0).epsilon(1e-12));
}

TEST_CASE("decay-class mismatch heuristic flags a fat tail") {
  // 1/(1+y^2) decays far too slowly for a rule scaled to e^{-y}.
  const auto rule = rule_for(DecayClass::exponential, 1.0, 0.0);
  const auto r = integrate_halfline_checked(
      [](double y) { return 1.0 / (1.0 + y * y); }, rule);
  CHECK(r.tail_warning());
  const auto ok = integrate_halfline_checked(
      [](double y) { return y * y * std::exp(-y); }, rule);
  CHECK_FALSE(ok.tail_warning());
}

TEST_CASE("normalization integral of a Coulomb bound state") {
  const auto w = systems::coulomb_state({3, 2, 1});
  const auto rule = rule_for(DecayClass::exponential, 1.0 / 2.0, 4.0);
  const double norm = integrate_halfline(
      [&](double y) { return w(y).value * w(y).value; }, rule);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("residual scan: exact eigenpair and perturbed energy") {
  const CoulombQN qn{3, 1, 0};
  const auto w = systems::coulomb_state(qn);
  const auto grid = systems::coulomb_grid(1.0);

  const auto exact = residual_scan(systems::coulomb_operator(qn, w.energy), w, grid);
  CHECK(exact.max_rel < 1e-9);

  const double eps = 1e-3;
  const auto shifted =
      residual_scan(systems::coulomb_operator(qn, w.energy + eps), w, grid);
  CHECK(shifted.max_abs == doctest::Approx(eps * shifted.state_sup).epsilon(1.0));
  CHECK(shifted.max_abs > eps * shifted.state_sup / 2.0);
  CHECK(shifted.max_abs < 2.0 * eps * shifted.state_sup);
}

TEST_CASE("overlap matrix: single state and an orthonormal stack") {
  std::vector<RadialState> one;
  one.push_back(systems::coulomb_state({3, 1, 0}));
  const auto m = overlap_matrix(one);
  CHECK(m.size() == 1);
  CHECK(m[0][0] == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<RadialState> stack;
  for (int n = 2; n <= 6; ++n) stack.push_back(systems::coulomb_state({3, n, 1}));
  CHECK(overlap_identity_deviation(stack) < 1e-8);
}

TEST_CASE("finite-difference oracle: D = 3 oscillator benchmark") {
  auto potential = [](double y) { return y * y; };  // L = 0, barrier-free
  const auto ev = fd_eigensolve(potential, 3, 2000, 10.0);
  REQUIRE(ev.size() == 3);
  CHECK(std::abs(ev[0] - 3.0) / 3.0 < 1e-5);
  CHECK(std::abs(ev[1] - 7.0) / 7.0 < 1e-5);
  CHECK(std::abs(ev[2] - 11.0) / 11.0 < 1e-5);
}

TEST_CASE("finite-difference oracle: second-order convergence under halving") {
  auto potential = [](double y) { return y * y; };
  const auto coarse = fd_eigensolve(potential, 1, 1000, 10.0);
  const auto fine = fd_eigensolve(potential, 1, 2001, 10.0);  // h -> h/2
  const double e_coarse = std::abs(coarse[0] - 3.0);
  const double e_fine = std::abs(fine[0] - 3.0);
  const double ratio = e_coarse / e_fine;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("finite-difference oracle: shifted Coulomb SUSY spectrum") {
  // d = 3, l = 0 with the ground-state energy shifted to zero; the next level
  // sits at 3/16.
  auto potential = [](double y) { return -1.0 / y + 0.25; };
  const auto ev = fd_eigensolve(potential, 2, 4000, 200.0);
  CHECK(std::abs(ev[0] - 0.0) < 1e-4);
  CHECK(std::abs(ev[1] - 3.0 / 16.0) / (3.0 / 16.0) < 1e-4);
}

TEST_CASE("degeneracy report clusters paired levels") {
  LabeledSpectrum bos{"bosonic", {0.0, 3.0 / 16.0, 2.0 / 9.0}};
  LabeledSpectrum fer{"fermionic", {3.0 / 16.0, 2.0 / 9.0}};
  const auto groups = degeneracy_report({bos, fer}, 1e-12);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].members.size() == 1);  // bosonic ground state unpaired
  CHECK(groups[0].members[0].first == "bosonic");
  CHECK(groups[1].members.size() == 2);
  CHECK(groups[2].members.size() == 2);
}

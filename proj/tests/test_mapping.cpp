#include <cmath>

#include "doctest.h"
#include "radmap/mapping.hpp"
#include "radmap/susy.hpp"
#include "radmap/systems.hpp"
#include "radmap/verify.hpp"

using namespace radmap;
using namespace radmap::mapping;

namespace {

double pointwise_rel_error(const RadialState& got, const RadialState& want,
                           const std::vector<double>& grid) {
  double sup = 0.0, err = 0.0;
  for (double r : grid) {
    sup = std::max(sup, std::abs(want(r).value));
    err = std::max(err, std::abs(got(r).value - want(r).value));
  }
  return err / sup;
}

sqdt::CoulombDefectProfile constant_coulomb(int filled, double defect, int j = 0) {
  sqdt::CoulombDefectProfile p;
  p.tail_filled = filled;
  p.tail_defect = defect;
  p.dim_shift = j;
  return p;
}

sqdt::OscillatorDefectProfile constant_osc(int inaccessible, double defect, int J = 0) {
  sqdt::OscillatorDefectProfile p;
  p.tail_inaccessible = inaccessible;
  p.tail_defect = defect;
  p.dim_shift = J;
  return p;
}

}  // namespace

TEST_CASE("classic map: quantum numbers, K, pointwise identity") {
  // d=3, lambda=0, n=1, l=0 -> (D,N,L) = (4,0,0), F/F0 = 4 = 2 sqrt(E0/-E)
  {
    const auto r = classic_map(3, 0, 1, 0);
    CHECK(r.image.D == 4);
    CHECK(r.image.N == 0);
    CHECK(r.image.L == 0);
    const double E = systems::coulomb_energy({3, 1, 0});
    CHECK(systems::oscillator_energy(r.image) ==
          doctest::Approx(2.0 * std::sqrt(1.0 / -E)).epsilon(1e-15));
    CHECK(systems::oscillator_energy(r.image) == doctest::Approx(4.0));
    CHECK(r.K == doctest::Approx(2.0));
    const auto target = systems::oscillator_state(r.image);
    CHECK(pointwise_rel_error(r.transported, target, systems::oscillator_grid()) <
          1e-12);
  }
  // d=3, lambda=1, n=2, l=0 -> (2,3,1) with K = 2n = 4
  {
    const auto r = classic_map(3, 1, 2, 0);
    CHECK(r.image.D == 2);
    CHECK(r.image.N == 3);
    CHECK(r.image.L == 1);
    CHECK(r.K == doctest::Approx(4.0));
    const auto target = systems::oscillator_state(r.image);
    CHECK(pointwise_rel_error(r.transported, target, systems::oscillator_grid()) <
          1e-10);
  }
  CHECK_THROWS_WITH_AS((void)classic_map(3, 2, 3, 0),
                       doctest::Contains("even-dimensional"), std::domain_error);
  CHECK_THROWS_AS((void)classic_map(3, -1, 2, 0), std::domain_error);
}

TEST_CASE("classic map sweeps: pointwise and energy identities") {
  for (int d : {3, 4, 5}) {
    for (int lambda = 0; lambda <= d - 2; ++lambda) {
      for (int l = 0; l <= 2; ++l) {
        for (int n = l + 1; n <= 6; ++n) {
          const auto r = classic_map(d, lambda, n, l);
          const auto target = systems::oscillator_state(r.image);
          CHECK(pointwise_rel_error(r.transported, target,
                                    systems::oscillator_grid()) < 1e-10);
          const double E = systems::coulomb_energy({d, n, l});
          CHECK(std::abs(systems::oscillator_energy(r.image) -
                         2.0 * std::sqrt(1.0 / -E)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("classic map admissible ranges") {
  const auto full3 = classic_map_range(3, 0, true);
  REQUIRE(full3.size() == 2);
  CHECK(full3[0] == std::pair<int, int>{2, 1});
  CHECK(full3[1] == std::pair<int, int>{4, 0});

  const auto fixed = classic_map_range(3, 1, false);
  CHECK(fixed.front() == std::pair<int, int>{2, 1});
  CHECK(fixed.back() == std::pair<int, int>{8, -2});  // D up to 2d-2+4l

  const auto full2 = classic_map_range(2, 0, true);
  REQUIRE(full2.size() == 1);
  CHECK(full2[0] == std::pair<int, int>{2, 0});
}

TEST_CASE("map constant: closed form, norm verification, scale covariance") {
  const auto spec40 =
      make_map_spec(1, constant_coulomb(0, 0.0), 4, 2, 0, constant_osc(0, 0.0));
  CHECK(spec40.K == doctest::Approx(5.0));  // 2n + d - 3

  PhysicalScales doubled;
  doubled.r0 = 2.0;
  CHECK(map_constant(spec40, doubled) ==
        doctest::Approx(5.0 * std::pow(2.0, 4.0 / 2.0)));

  const auto res = general_map(spec40);
  CHECK(res.report.k_verified);
  CHECK(res.report.k_norm_deviation < 1e-10);
}

TEST_CASE("general map with zero profiles reduces to the classic map") {
  const auto spec =
      make_map_spec(1, constant_coulomb(0, 0.0), 3, 2, 0, constant_osc(0, 0.0));
  const auto classic = classic_map(3, 1, 2, 0);
  CHECK(spec.D == classic.image.D);
  CHECK(spec.N == classic.image.N);
  CHECK(spec.L == classic.image.L);
  CHECK(spec.image.N_star == doctest::Approx(classic.image.N));
  CHECK(spec.image.L_star == doctest::Approx(classic.image.L));
  CHECK(spec.K == doctest::Approx(classic.K));
  const auto res = general_map(spec);
  CHECK(res.report.max_pointwise_rel_error < 1e-10);
  CHECK(res.report.energy_residual < 1e-12);
  CHECK(pointwise_rel_error(res.transported, classic.transported,
                            systems::oscillator_grid()) < 1e-12);
}

TEST_CASE("a = 1, A = 2: fermionic sector onto second-fermionic sector") {
  const auto cp = constant_coulomb(1, 0.0);
  const auto op = constant_osc(2, 0.0);
  for (int lambda : {0, 1}) {
    for (int n = 1; n <= 4; ++n) {
      const auto spec = make_map_spec(lambda, cp, 3, n, 0, op);
      const auto res = general_map(spec);
      CHECK(res.report.max_pointwise_rel_error < 1e-10);
      CHECK(res.report.energy_residual < 1e-12);
      // the source is the fermionic Coulomb eigenstate w_{n+1, l+1} ...
      const auto fermionic = susy::sector_state_coulomb(3, 0, 1, n + 1);
      const auto src = sqdt::sqdt_coulomb_state(cp, 3, n, 0);
      for (double y : {0.5, 2.0, 7.0}) {
        CHECK(src(y).value == doctest::Approx(fermionic(y).value).epsilon(1e-13));
      }
      // ... and the image is the second-fermionic oscillator eigenstate
      const auto second =
          susy::sector_state_oscillator(spec.D, spec.L, 2, spec.N + 2);
      CHECK(pointwise_rel_error(res.target, second, systems::oscillator_grid()) <
            1e-13);
    }
  }
}

TEST_CASE("odd oscillator dimensions: d = 3, J = 1 lands in D* = 3") {
  // lambda = 1 makes D* = 2d - 2 - 2 lambda + J = 3
  const auto spec = three_dim_map(1, ThreeDimExact::coulomb_exact, 2, 0);
  CHECK(spec.image.D_star == doctest::Approx(3.0));
  CHECK(spec.coulomb_profile.dim_shift == 0);
  CHECK(spec.oscillator_profile.dim_shift == 1);
  const auto res = general_map(spec);
  CHECK(res.report.max_pointwise_rel_error < 1e-10);
  CHECK(res.report.energy_residual < 1e-12);
}

TEST_CASE("three-dimensional special cases reproduce the degenerate kets") {
  // oscillator exact, lambda = 1: (n* = 9/4, l* = 1/4) and (9/4, 5/4)
  // map to (N = 3, L = 1) and (N = 3, L = 3)
  {
    const auto s1 = three_dim_map(1, ThreeDimExact::oscillator_exact, 2, 0);
    CHECK(s1.source.n_star == doctest::Approx(2.25));
    CHECK(s1.source.l_star == doctest::Approx(0.25));
    CHECK(s1.N == 3);
    CHECK(s1.L == 1);
    CHECK(s1.image.N_star == doctest::Approx(3.0));
    CHECK(s1.image.L_star == doctest::Approx(1.0));

    const auto s2 = three_dim_map(1, ThreeDimExact::oscillator_exact, 2, 1);
    CHECK(s2.source.n_star == doctest::Approx(2.25));
    CHECK(s2.source.l_star == doctest::Approx(1.25));
    CHECK(s2.image.N_star == doctest::Approx(3.0));
    CHECK(s2.image.L_star == doctest::Approx(3.0));

    // degenerate in E, degenerate in F, and pointwise-transported
    const auto r1 = general_map(s1);
    const auto r2 = general_map(s2);
    CHECK(sqdt::sqdt_coulomb_energy(s1.coulomb_profile, 3, 2, 0) ==
          doctest::Approx(sqdt::sqdt_coulomb_energy(s2.coulomb_profile, 3, 2, 1)));
    CHECK(r1.target.energy == doctest::Approx(r2.target.energy));
    CHECK(r1.report.max_pointwise_rel_error < 1e-10);
    CHECK(r2.report.max_pointwise_rel_error < 1e-10);

    // eigenvalue displays: E = -E0/(2n + 1/2)^2 and F = F0 (2N + 4)
    for (int n = 1; n <= 4; ++n) {
      const auto sn = three_dim_map(1, ThreeDimExact::oscillator_exact, n, 0);
      CHECK(sqdt::sqdt_coulomb_energy(sn.coulomb_profile, 3, n, 0) ==
            doctest::Approx(-1.0 / ((2.0 * n + 0.5) * (2.0 * n + 0.5))));
      CHECK(sqdt::sqdt_oscillator_energy(sn.oscillator_profile, sn.D, sn.N, sn.L) ==
            doctest::Approx(2.0 * sn.N + 4.0));
    }
  }
  // coulomb exact, lambda = 0: (n=3,l=1) -> (N* = 9/2, L* = 5/2),
  // (n=3,l=2) -> (N* = 9/2, L* = 9/2)
  {
    const auto s1 = three_dim_map(0, ThreeDimExact::coulomb_exact, 3, 1);
    CHECK(s1.image.N_star == doctest::Approx(4.5));
    CHECK(s1.image.L_star == doctest::Approx(2.5));
    const auto s2 = three_dim_map(0, ThreeDimExact::coulomb_exact, 3, 2);
    CHECK(s2.image.N_star == doctest::Approx(4.5));
    CHECK(s2.image.L_star == doctest::Approx(4.5));
    const auto r1 = general_map(s1);
    const auto r2 = general_map(s2);
    CHECK(r1.report.max_pointwise_rel_error < 1e-10);
    CHECK(r2.report.max_pointwise_rel_error < 1e-10);
    CHECK(r1.target.energy == doctest::Approx(r2.target.energy));
    // F = F0 (2N - 2 lambda + 4)
    CHECK(r1.target.energy == doctest::Approx(2.0 * s1.N + 4.0));
  }
}

TEST_CASE("sodium table") {
  const auto rows = sodium_table();
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].l == 0);
  CHECK(rows[0].i == 2);
  CHECK(rows[0].L == 1);
  CHECK(rows[0].I == 2);
  CHECK(rows[0].n_min == 1);
  CHECK(rows[0].ns_min == 3);
  CHECK(rows[0].N_min == 1);
  CHECK(rows[0].Ns_min == 5);
  CHECK(rows[0].Delta == doctest::Approx(1.20).epsilon(1e-12));

  CHECK(rows[1].L == 3);
  CHECK(rows[1].I == 1);
  CHECK(rows[1].Ns_min == 5);
  CHECK(rows[1].Delta == doctest::Approx(1.218).epsilon(1e-12));

  CHECK(rows[2].Delta == doctest::Approx(0.52).epsilon(1e-12));
  CHECK(rows[3].Delta == doctest::Approx(0.50).epsilon(1e-12));
  CHECK(rows[4].Delta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows[4].L == 9);
}

TEST_CASE("map spec rejects inconsistent or out-of-range parameters") {
  // A != 2a
  CHECK_THROWS_AS((void)make_map_spec(0, constant_coulomb(1, 0.0), 3, 2, 0,
                                      constant_osc(1, 0.0)),
                  consistency_error);
  // lambda driving L below zero
  CHECK_THROWS_AS((void)make_map_spec(-1, constant_coulomb(0, 0.0), 3, 2, 0,
                                      constant_osc(0, 0.0)),
                  std::domain_error);
  // defect range violation on the Coulomb side propagates
  CHECK_THROWS_AS((void)make_map_spec(0, constant_coulomb(0, 1.2), 3, 2, 0,
                                      constant_osc(0, 2.4)),
                  defect_range_error);
}

TEST_CASE("quantum-number ledger: parity of image angular momenta") {
  for (int lambda : {0, 1}) {
    for (int l = 0; l <= 3; ++l) {
      const auto r = classic_map(5, lambda, l + 2, l);
      CHECK(r.image.L % 2 == lambda % 2);  // every second L is imaged
    }
  }
}

TEST_CASE("degeneracy preservation on random stacks") {
  // equal-E Coulomb states (same n, different l) map to equal-F images
  for (int d : {3, 4, 6}) {
    for (int lambda = 0; lambda <= d - 2; ++lambda) {
      const int n = 4;
      const auto r0 = classic_map(d, lambda, n, 0);
      for (int l = 1; l <= 3; ++l) {
        const auto rl = classic_map(d, lambda, n, l);
        CHECK(systems::oscillator_energy(rl.image) ==
              doctest::Approx(systems::oscillator_energy(r0.image)));
      }
    }
  }
}

TEST_CASE("pointwise identity survives physical scales") {
  PhysicalScales scales;
  scales.r0 = 2.0;
  scales.R0 = 1.5;
  const auto r = classic_map(4, 1, 3, 1, scales);
  const auto target = systems::oscillator_state(r.image, scales);
  CHECK(pointwise_rel_error(r.transported, target, systems::oscillator_grid()) <
        1e-10);

  const auto spec = make_map_spec(1, constant_coulomb(1, 0.3), 3, 2, 1,
                                  constant_osc(2, 0.6), scales);
  const auto res = general_map(spec, scales);
  CHECK(res.report.max_pointwise_rel_error < 1e-10);
  CHECK(res.report.k_verified);
}

TEST_CASE("figure composition: bosonic-fermionic square commutes") {
  // Path A: stack shift to the fermionic Coulomb state, then transport.
  // Path B: classic transport, then the bosonic -> second-fermionic shift.
  for (int lambda : {0, 1}) {
    for (int n = 1; n <= 5; ++n) {
      const int l = 0, d = 3;
      const auto shifted = susy::stack_correspondence(susy::CoulombStack{n, l});
      const auto pathA = classic_map(d, lambda, shifted.n, shifted.l);
      const auto base = classic_map(d, lambda, n, l);
      const auto pathB =
          susy::stack_correspondence(susy::OscillatorStack{base.image.N, base.image.L});
      CHECK(pathA.image.N == pathB.N);
      CHECK(pathA.image.L == pathB.L);
      CHECK(pathA.image.D == base.image.D);
      const auto target = systems::oscillator_state({base.image.D, pathB.N, pathB.L});
      CHECK(pointwise_rel_error(pathA.transported, target,
                                systems::oscillator_grid()) < 1e-10);
    }
  }
}

TEST_CASE("figure composition: bosonic-SQDT square commutes") {
  // Path A: deform (stack correspondence to starred labels), then general map.
  // Path B: classic map, then deform the oscillator side.
  const auto cp = constant_coulomb(1, 0.2);
  for (int lambda : {0, 1}) {
    const auto op = constant_osc(2, 0.4);  // A = 1.6 = 2a
    for (int n = 1; n <= 5; ++n) {
      const auto spec = make_map_spec(lambda, cp, 3, n, 0, op);
      const auto res = general_map(spec);
      // Path B endpoint: starred oscillator labels from the classic image
      const auto classic = classic_map(3, lambda, n, 0);
      const auto starred =
          sqdt::oscillator_starred(op, classic.image.D, classic.image.N,
                                   classic.image.L);
      CHECK(spec.image.N_star == doctest::Approx(starred.N_star).epsilon(1e-14));
      CHECK(spec.image.L_star == doctest::Approx(starred.L_star).epsilon(1e-14));
      CHECK(spec.image.D_star == doctest::Approx(starred.D_star).epsilon(1e-14));
      // and the transported state lands on the deformed eigenstate
      CHECK(res.report.max_pointwise_rel_error < 1e-10);
    }
  }
}

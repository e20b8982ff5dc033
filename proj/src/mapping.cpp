#include "radmap/mapping.hpp"

#include <cmath>
#include <sstream>

#include "radmap/verify.hpp"

namespace radmap::mapping {

namespace {

constexpr const char* kConventionNote =
    "K uses the classic closed form with starred arguments; its third slot is "
    "lambda - J/2 + j";

// W(Y) = K Y^{-1/2} w(q Y^2) with analytic derivatives; the first-derivative
// cross terms cancel in d2.
RadialState transported_state(RadialState source, double q, double K, double dim,
                              double principal, double angular, double energy) {
  auto eval = [source = std::move(source.eval), q, K](double Y) -> RadialEval {
    const RadialEval f = source(q * Y * Y);
    const double value = K * std::pow(Y, -0.5) * f.value;
    const double d1 =
        K * (-0.5 * std::pow(Y, -1.5) * f.value + 2.0 * q * std::sqrt(Y) * f.d1);
    const double d2 = K * (0.75 * std::pow(Y, -2.5) * f.value +
                           4.0 * q * q * std::pow(Y, 1.5) * f.d2);
    return {value, d1, d2};
  };
  return {SystemKind::oscillator, dim, principal, angular, energy, std::move(eval)};
}

double classic_constant(int d, int n, int lambda, const PhysicalScales& scales) {
  return (2.0 * n + d - 3.0) * std::pow(scales.r0, 0.5 * d) /
         std::pow(scales.R0, d - 1.0 - lambda);
}

}  // namespace

ClassicMapResult classic_map(int d, int lambda, int n, int l,
                             const PhysicalScales& scales) {
  CoulombQN qn{d, n, l};
  qn.validate();
  const int L = 2 * l + lambda;
  const int D = 2 * d - 2 - 2 * lambda;
  if (L < 0)
    throw std::domain_error("classic_map: lambda must keep L = 2l + lambda >= 0");
  if (D < 2)
    throw std::domain_error(
        "classic_map: image dimension D = 2d - 2 - 2 lambda fell below 2; only "
        "even-dimensional oscillators are reachable");
  const int N = 2 * n - 2 + lambda;
  const OscillatorQN image{D, N, L};
  image.validate();

  const double q = n + qn.gamma();
  const double K = classic_constant(d, n, lambda, scales);
  auto w = systems::coulomb_state(qn, scales);
  const double F = systems::oscillator_energy(image);
  return {image, K, transported_state(std::move(w), q, K, D, N, L, F)};
}

std::vector<std::pair<int, int>> classic_map_range(int d, int l, bool full_spectrum) {
  if (d < 2) throw std::domain_error("classic_map_range: d >= 2 required");
  if (l < 0) throw std::domain_error("classic_map_range: l >= 0 required");
  std::vector<std::pair<int, int>> out;
  const int lambda_max = d - 2;  // keeps D >= 2
  const int lambda_min = full_spectrum ? 0 : -2 * l;
  for (int lambda = lambda_max; lambda >= lambda_min; --lambda)
    out.emplace_back(2 * d - 2 - 2 * lambda, lambda);
  return out;
}

MapSpec make_map_spec(int lambda, const sqdt::CoulombDefectProfile& coulomb_profile,
                      int d, int n, int l,
                      const sqdt::OscillatorDefectProfile& oscillator_profile,
                      const PhysicalScales& scales) {
  MapSpec spec{lambda, d,  n, l, coulomb_profile, oscillator_profile,
               {},     0,  0, 0, {},              0.0};
  spec.source = sqdt::coulomb_starred(coulomb_profile, d, n, l);

  spec.L = 2 * l + lambda;
  spec.D = 2 * d - 2 - 2 * lambda;
  spec.N = 2 * n - 2 + lambda;
  if (spec.L < 0)
    throw std::domain_error("map spec: lambda must keep L = 2l + lambda >= 0");
  if (spec.D < 2)
    throw std::domain_error("map spec: base oscillator dimension fell below 2");

  const double a = spec.source.a;
  const double A = sqdt::oscillator_A(oscillator_profile, spec.L);
  if (std::abs(A - 2.0 * a) > 1e-12) {
    std::ostringstream msg;
    msg << "map spec: sector strengths must satisfy A = 2a (got a = " << a
        << ", A = " << A << ")";
    throw consistency_error(msg.str());
  }

  spec.image = sqdt::oscillator_starred(oscillator_profile, spec.D, spec.N, spec.L);
  if (spec.image.D_star < 1.0)
    throw std::domain_error("map spec: image dimension D* must be >= 1");
  if (spec.image.L_star < -1e-12)
    throw std::domain_error("map spec: image angular momentum L* must be >= 0");
  spec.K = map_constant(spec, scales);
  return spec;
}

double map_constant(const MapSpec& spec, const PhysicalScales& scales) {
  scales.validate();
  const double third = spec.lambda - 0.5 * spec.oscillator_profile.dim_shift +
                       spec.coulomb_profile.dim_shift;
  return (2.0 * spec.source.n_star + spec.source.d_star - 3.0) *
         std::pow(scales.r0, 0.5 * spec.source.d_star) /
         std::pow(scales.R0, spec.source.d_star - 1.0 - third);
}

GeneralMapResult general_map(const MapSpec& spec, const PhysicalScales& scales) {
  const double q = spec.source.n_star + spec.source.gamma_star;
  auto w = sqdt::sqdt_coulomb_state(spec.coulomb_profile, spec.d, spec.n, spec.l,
                                    scales);
  const double E = w.energy;
  auto target = sqdt::sqdt_oscillator_state(spec.oscillator_profile, spec.D, spec.N,
                                            spec.L, scales);
  const double F = target.energy;
  auto transported =
      transported_state(std::move(w), q, spec.K, spec.image.D_star,
                        spec.image.N_star, spec.image.L_star, F);

  MapReport rep{};
  rep.d_star = spec.source.d_star;
  rep.n_star = spec.source.n_star;
  rep.l_star = spec.source.l_star;
  rep.D_star = spec.image.D_star;
  rep.N_star = spec.image.N_star;
  rep.L_star = spec.image.L_star;
  rep.a = spec.source.a;
  rep.A = spec.image.A;
  rep.K = spec.K;
  rep.k_convention = kConventionNote;

  const auto grid = systems::oscillator_grid();
  double sup = 0.0, err = 0.0;
  for (double Y : grid) {
    sup = std::max(sup, std::abs(target(Y).value));
    err = std::max(err, std::abs(transported(Y).value - target(Y).value));
  }
  rep.max_pointwise_rel_error = err / std::max(sup, 1e-300);

  rep.energy_residual = std::abs(F - 2.0 * std::sqrt(1.0 / -E) - 4.0 * spec.source.a);

  const auto rule = verify::rule_for(verify::DecayClass::gaussian);
  const double norm = verify::integrate_halfline(
      [&](double Y) { return transported(Y).value * transported(Y).value; }, rule);
  const double expected = std::pow(scales.R0, -spec.image.D_star);
  rep.k_norm_deviation = std::abs(norm - expected) / expected;
  rep.k_verified = rep.k_norm_deviation <= 1e-8;

  return {std::move(rep), std::move(transported), std::move(target)};
}

MapSpec three_dim_map(int lambda, ThreeDimExact which, int n, int l) {
  if (lambda != 0 && lambda != 1)
    throw std::domain_error("three_dim_map: lambda must be 0 or 1");
  sqdt::CoulombDefectProfile cp;
  sqdt::OscillatorDefectProfile op;
  op.dim_shift = 2 * lambda - 1;
  if (which == ThreeDimExact::oscillator_exact) {
    cp.tail_defect = 0.5 * (0.5 - lambda);  // delta - i, with i = 0
  } else {
    op.tail_defect = lambda - 0.5;  // Delta - I, with I = 0
  }
  return make_map_spec(lambda, cp, 3, n, l, op);
}

MapSpec three_dim_map_custom(int lambda, const sqdt::CoulombDefectProfile& profile,
                             int n, int l) {
  if (lambda != 0 && lambda != 1)
    throw std::domain_error("three_dim_map: lambda must be 0 or 1");
  if (profile.dim_shift != 0)
    throw std::domain_error("three_dim_map: the Coulomb side must keep j = 0");
  sqdt::OscillatorDefectProfile op;
  op.dim_shift = 2 * lambda - 1;
  // Delta(L) = 2(delta - i)(l) + lambda - 1/2 at L = 2l + lambda, I = 0
  for (const auto& row : profile.rows) {
    op.rows.push_back({2 * row.l + lambda, 0,
                       2.0 * (row.defect - row.filled) + lambda - 0.5});
  }
  op.tail_defect =
      2.0 * (profile.tail_defect - profile.tail_filled) + lambda - 0.5;
  return make_map_spec(lambda, profile, 3, n, l, op);
}

std::vector<SodiumRow> sodium_table(int lambda,
                                    const std::function<int(int)>& inaccessible_of_L) {
  const auto na = sqdt::sodium_coulomb_profile();
  auto I_of = inaccessible_of_L;
  if (!I_of) {
    // fill every oscillator level below N_s = 5
    I_of = [](int L) { return L == 1 ? 2 : (L == 3 ? 1 : 0); };
  }
  std::vector<SodiumRow> rows;
  for (int l = 0; l <= 4; ++l) {
    SodiumRow r{};
    r.l = l;
    r.i = na.filled(l);
    r.delta = na.defect(l);
    r.n_min = l + 1;
    r.ns_min = l + r.i + 1;
    r.L = 2 * l + lambda;
    r.I = I_of(r.L);
    if (r.I < 0) throw std::domain_error("sodium_table: I(L) must be >= 0");
    r.N_min = 2 * r.n_min - 2 + lambda;
    r.Ns_min = r.N_min + 2 * r.I;
    r.Delta = r.I + 2.0 * (r.delta - r.i) + lambda - 0.5;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace radmap::mapping

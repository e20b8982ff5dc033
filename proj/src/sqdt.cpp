#include "radmap/sqdt.hpp"

#include <cmath>
#include <sstream>

namespace radmap::sqdt {

int CoulombDefectProfile::filled(int l) const {
  for (const auto& r : rows)
    if (r.l == l) return r.filled;
  return tail_filled;
}

double CoulombDefectProfile::defect(int l) const {
  for (const auto& r : rows)
    if (r.l == l) return r.defect;
  return tail_defect;
}

int OscillatorDefectProfile::inaccessible(int L) const {
  for (const auto& r : rows)
    if (r.L == L) return r.inaccessible;
  return tail_inaccessible;
}

double OscillatorDefectProfile::defect(int L) const {
  for (const auto& r : rows)
    if (r.L == L) return r.defect;
  return tail_defect;
}

CoulombStarred coulomb_starred(const CoulombDefectProfile& profile, int d, int n,
                               int l) {
  CoulombQN{d, n, l}.validate();
  const int j = profile.dim_shift;
  if (!(j > 1 - d))
    throw defect_range_error("coulomb profile: dimension shift must satisfy j > 1 - d");
  const int i = profile.filled(l);
  if (i < 0) throw std::domain_error("coulomb profile: filled-level count must be >= 0");
  const double delta = profile.defect(l);
  const double gamma = 0.5 * (d - 3.0);
  if (!(delta - i < l + gamma + 1.0 + 0.5 * j)) {
    std::ostringstream msg;
    msg << "coulomb profile: orthonormalizability requires delta - i < l + gamma + 1 + j/2 "
        << "(got delta - i = " << delta - i << " at l = " << l
        << ", bound = " << l + gamma + 1.0 + 0.5 * j << ")";
    throw defect_range_error(msg.str());
  }
  CoulombStarred s{};
  s.d_star = d + j;
  s.n_star = n + i - delta;
  s.l_star = l + i - delta;
  s.gamma_star = 0.5 * (s.d_star - 3.0);
  s.a = i - delta + 0.5 * j;
  s.n_s = n + i;
  return s;
}

OscillatorStarred oscillator_starred(const OscillatorDefectProfile& profile, int D,
                                     int N, int L) {
  OscillatorQN{D, N, L}.validate();
  const int J = profile.dim_shift;
  if (!(J >= 1 - D))
    throw defect_range_error("oscillator profile: dimension shift must satisfy J >= 1 - D");
  const int I = profile.inaccessible(L);
  if (I < 0)
    throw std::domain_error("oscillator profile: inaccessible-level count must be >= 0");
  const double Delta = profile.defect(L);
  const double Gamma = 0.5 * (D - 3.0);
  if (!(Delta - I < L + Gamma + 1.5 + 0.5 * J)) {
    std::ostringstream msg;
    msg << "oscillator profile: orthonormalizability requires Delta - I < L + Gamma + 3/2 + J/2 "
        << "(got Delta - I = " << Delta - I << " at L = " << L
        << ", bound = " << L + Gamma + 1.5 + 0.5 * J << ")";
    throw defect_range_error(msg.str());
  }
  OscillatorStarred s{};
  s.D_star = D + J;
  s.N_star = N + I - Delta;
  s.L_star = L + I - Delta;
  s.Gamma_star = 0.5 * (s.D_star - 3.0);
  s.A = I - Delta + 0.5 * J;
  s.N_s = N + 2 * I;
  return s;
}

double coulomb_a(const CoulombDefectProfile& profile, int l) {
  return profile.filled(l) - profile.defect(l) + 0.5 * profile.dim_shift;
}

double oscillator_A(const OscillatorDefectProfile& profile, int L) {
  return profile.inaccessible(L) - profile.defect(L) + 0.5 * profile.dim_shift;
}

double coulomb_effective_potential(const CoulombDefectProfile& profile, int d, int n,
                                   int l, double y) {
  if (!(y > 0.0))
    throw std::domain_error("coulomb_effective_potential: radius must be positive");
  const auto s = coulomb_starred(profile, d, n, l);
  const double gamma = 0.5 * (d - 3.0);
  const double q = n + gamma;
  const double qs = s.n_star + s.gamma_star;
  const double ls = s.l_star + s.gamma_star;
  const double lb = l + gamma;
  return (q * q - qs * qs) / (4.0 * q * q * qs * qs) +
         (ls * (ls + 1.0) - lb * (lb + 1.0)) / (y * y);
}

double oscillator_effective_potential(const OscillatorDefectProfile& profile, int D,
                                      int N, int L, double Y) {
  if (!(Y > 0.0))
    throw std::domain_error("oscillator_effective_potential: radius must be positive");
  const auto s = oscillator_starred(profile, D, N, L);
  const double Gamma = 0.5 * (D - 3.0);
  const double Ls = s.L_star + s.Gamma_star;
  const double Lb = L + Gamma;
  return 2.0 * (N - s.N_star + Gamma - s.Gamma_star) +
         (Ls * (Ls + 1.0) - Lb * (Lb + 1.0)) / (Y * Y);
}

double sqdt_coulomb_energy(const CoulombDefectProfile& profile, int d, int n, int l) {
  const auto s = coulomb_starred(profile, d, n, l);
  const double qs = s.n_star + s.gamma_star;
  return -1.0 / (4.0 * qs * qs);
}

double sqdt_oscillator_energy(const OscillatorDefectProfile& profile, int D, int N,
                              int L) {
  const auto s = oscillator_starred(profile, D, N, L);
  return 2.0 * N + (D - 3.0) + 4.0 * s.A + 3.0;
}

RadialState sqdt_coulomb_state(const CoulombDefectProfile& profile, int d, int n,
                               int l, const PhysicalScales& scales) {
  const auto s = coulomb_starred(profile, d, n, l);
  auto state = systems::coulomb_state_general(s.d_star, s.n_star, s.l_star, scales);
  return state;
}

RadialState sqdt_oscillator_state(const OscillatorDefectProfile& profile, int D,
                                  int N, int L, const PhysicalScales& scales) {
  const auto s = oscillator_starred(profile, D, N, L);
  auto state = systems::oscillator_state_general(s.D_star, s.N_star, s.L_star, scales);
  // report the anchored spectrum value, not the bare starred eigenvalue
  state.energy = sqdt_oscillator_energy(profile, D, N, L);
  return state;
}

RadialOperator sqdt_coulomb_operator(const CoulombDefectProfile& profile, int d,
                                     int n, int l) {
  const auto s = coulomb_starred(profile, d, n, l);
  return systems::coulomb_operator_general(s.l_star, s.gamma_star,
                                           sqdt_coulomb_energy(profile, d, n, l));
}

RadialOperator sqdt_oscillator_operator(const OscillatorDefectProfile& profile,
                                        int D, int N, int L) {
  const auto s = oscillator_starred(profile, D, N, L);
  auto op = systems::oscillator_operator_general(
      s.L_star, s.Gamma_star, sqdt_oscillator_energy(profile, D, N, L));
  // carry the spectrum anchor in the potential so the pair stays consistent
  const double anchor = 2.0 * s.A;
  auto base = std::move(op.potential);
  op.potential = [base, anchor](double Y) { return base(Y) + anchor; };
  return op;
}

std::optional<int> sector_classifier(double a_or_A) {
  const double r = std::round(a_or_A);
  if (r >= 0.0 && std::abs(a_or_A - r) < 1e-9) return static_cast<int>(r);
  return std::nullopt;
}

CoulombDefectProfile sodium_coulomb_profile() {
  CoulombDefectProfile p;
  p.rows = {{0, 2, 1.35}, {1, 1, 0.859}, {2, 0, 0.01}, {3, 0, 0.00}};
  p.dim_shift = 0;
  return p;
}

}  // namespace radmap::sqdt

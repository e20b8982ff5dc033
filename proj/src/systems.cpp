#include "radmap/systems.hpp"

#include <cmath>

#include "radmap/specfun.hpp"

namespace radmap {

void CoulombQN::validate() const {
  if (d < 2) throw std::domain_error("CoulombQN: dimension must satisfy d >= 2");
  if (l < 0) throw std::domain_error("CoulombQN: angular momentum must be >= 0");
  if (n < l + 1)
    throw std::domain_error("CoulombQN: principal quantum number requires n >= l+1");
}

void OscillatorQN::validate() const {
  if (D < 1) throw std::domain_error("OscillatorQN: dimension must satisfy D >= 1");
  if (L < 0) throw std::domain_error("OscillatorQN: angular momentum must be >= 0");
  if (D == 1 && L > 1)
    throw std::domain_error("OscillatorQN: D = 1 admits only the parity substacks L = 0, 1");
  if (N < L) throw std::domain_error("OscillatorQN: principal quantum number requires N >= L");
  if ((N - L) % 2 != 0)
    throw std::domain_error("OscillatorQN: N - L must be even");
}

namespace systems {

namespace {

// n - l (or (N-L)/2) must be a nonnegative integer for the Laguerre degree;
// quantum-defect shifts move n and l by the same amount, so this survives.
int integer_degree(double x, const char* what) {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9 || r < 0.0) throw std::domain_error(what);
  return static_cast<int>(r);
}

}  // namespace

double coulomb_energy(const CoulombQN& qn) {
  qn.validate();
  const double q = qn.n + qn.gamma();
  return -1.0 / (4.0 * q * q);
}

double oscillator_energy(const OscillatorQN& qn) {
  qn.validate();
  return 2.0 * qn.N + 2.0 * qn.gamma() + 3.0;
}

RadialState coulomb_state_general(double d, double n, double l,
                                  const PhysicalScales& scales) {
  scales.validate();
  const int k = integer_degree(n - l - 1.0,
                               "coulomb_state: n - l - 1 must be a nonnegative integer");
  const double gamma = 0.5 * (d - 3.0);
  const double q = n + gamma;           // inverse decay scale (two units)
  const double beta = l + gamma + 1.0;  // small-radius exponent
  if (!(q > 0.0)) throw std::domain_error("coulomb_state: n + gamma must be positive");
  if (!(beta > 0.0))
    throw std::domain_error("coulomb_state: l + gamma + 1 must be positive");
  // Both Gamma arguments positive: n - l is, and n + l + d - 2 = q + beta.
  const double log_norm =
      0.5 * (specfun::log_gamma(n - l) - std::log(2.0) - d * std::log(scales.r0) -
             (2.0 * l + d + 1.0) * std::log(q) - specfun::log_gamma(n + l + d - 2.0));
  const double alpha = 2.0 * beta - 1.0;
  const double energy = -1.0 / (4.0 * q * q);

  auto eval = [k, q, beta, alpha, log_norm](double y) -> RadialEval {
    if (!(y > 0.0)) throw std::domain_error("coulomb_state: radius must be positive");
    const auto p = specfun::laguerre2(k, alpha, y / q);
    const double g = std::exp(log_norm + beta * std::log(y) - 0.5 * y / q);
    const double phi = beta / y - 0.5 / q;  // g'/g
    const double value = g * p.value;
    const double d1 = g * (phi * p.value + p.d1 / q);
    const double d2 = g * ((phi * phi - beta / (y * y)) * p.value +
                           2.0 * phi * p.d1 / q + p.d2 / (q * q));
    return {value, d1, d2};
  };
  return {SystemKind::coulomb, d, n, l, energy, std::move(eval)};
}

RadialState coulomb_state(const CoulombQN& qn, const PhysicalScales& scales) {
  qn.validate();
  return coulomb_state_general(qn.d, qn.n, qn.l, scales);
}

RadialState oscillator_state_general(double D, double N, double L,
                                     const PhysicalScales& scales) {
  scales.validate();
  const int k = integer_degree(0.5 * (N - L),
                               "oscillator_state: (N - L)/2 must be a nonnegative integer");
  const double gamma = 0.5 * (D - 3.0);
  const double B = L + gamma + 1.0;   // small-radius exponent
  const double alpha = B - 0.5;
  if (!(alpha > -1.0))
    throw std::domain_error("oscillator_state: L + Gamma + 1/2 must exceed -1");
  const double gden = 0.5 * (N + L + D);
  if (!(gden > 0.0))
    throw std::domain_error("oscillator_state: (N + L + D)/2 must be positive");
  const double log_norm = 0.5 * (std::log(2.0) + specfun::log_gamma(k + 1.0) -
                                 D * std::log(scales.R0) - specfun::log_gamma(gden));
  const double energy = 2.0 * N + 2.0 * gamma + 3.0;

  auto eval = [k, B, alpha, log_norm](double Y) -> RadialEval {
    if (!(Y > 0.0)) throw std::domain_error("oscillator_state: radius must be positive");
    const auto p = specfun::laguerre2(k, alpha, Y * Y);
    const double h = std::exp(log_norm + B * std::log(Y) - 0.5 * Y * Y);
    const double phi = B / Y - Y;  // h'/h
    const double value = h * p.value;
    const double d1 = h * (phi * p.value + 2.0 * Y * p.d1);
    const double d2 = h * ((phi * phi - B / (Y * Y) - 1.0) * p.value +
                           4.0 * Y * phi * p.d1 + 4.0 * Y * Y * p.d2 + 2.0 * p.d1);
    return {value, d1, d2};
  };
  return {SystemKind::oscillator, D, N, L, energy, std::move(eval)};
}

RadialState oscillator_state(const OscillatorQN& qn, const PhysicalScales& scales) {
  qn.validate();
  return oscillator_state_general(qn.D, qn.N, qn.L, scales);
}

RadialOperator coulomb_operator_general(double l, double gamma, double energy) {
  const double lg = l + gamma;
  return {[lg](double y) { return lg * (lg + 1.0) / (y * y) - 1.0 / y; }, energy};
}

RadialOperator coulomb_operator(const CoulombQN& qn, double energy) {
  qn.validate();
  return coulomb_operator_general(qn.l, qn.gamma(), energy);
}

RadialOperator oscillator_operator_general(double L, double gamma, double energy) {
  const double lg = L + gamma;
  return {[lg](double Y) { return lg * (lg + 1.0) / (Y * Y) + Y * Y; }, energy};
}

RadialOperator oscillator_operator(const OscillatorQN& qn, double energy) {
  qn.validate();
  return oscillator_operator_general(qn.L, qn.gamma(), energy);
}

std::vector<double> coulomb_grid(double n_plus_gamma) {
  return geometric_grid(1e-3, 40.0 * n_plus_gamma, 200);
}

std::vector<double> oscillator_grid() { return geometric_grid(1e-3, 8.0, 200); }

}  // namespace systems
}  // namespace radmap

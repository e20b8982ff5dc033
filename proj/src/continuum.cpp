#include "radmap/continuum.hpp"

#include <cmath>

#include "radmap/specfun.hpp"

namespace radmap::continuum {

namespace {

Complex hyp_triplet(Complex a, Complex b, Complex z, Complex& d1, Complex& d2) {
  const Complex f = specfun::hyp1f1(a, b, z);
  d1 = a / b * specfun::hyp1f1(a + 1.0, b + 1.0, z);
  d2 = a * (a + 1.0) / (b * (b + 1.0)) * specfun::hyp1f1(a + 2.0, b + 2.0, z);
  return f;
}

}  // namespace

ContinuumWave coulomb_wave_general(int d, Complex E, int l, WaveSign sign,
                                   bool repulsive) {
  CoulombQN{d, l + 1, l}.validate();
  const double sigma = sign == WaveSign::outgoing ? 1.0 : -1.0;
  const double beta = l + 0.5 * (d - 3.0) + 1.0;
  const Complex mu = std::sqrt(E);  // sqrt(E/E0), principal branch
  const Complex eta_term = Complex(0.0, sigma * 0.5) / mu;
  const Complex a = beta + (repulsive ? eta_term : -eta_term);
  const Complex b{2.0 * beta, 0.0};
  const Complex c = Complex(0.0, sigma) * mu;   // phase exponent coefficient
  const Complex m = -2.0 * c;                   // 1F1 argument slope

  auto eval = [beta, a, b, c, m](double y) -> ComplexEval {
    if (!(y > 0.0))
      throw std::domain_error("continuum wave: radius must be positive");
    Complex f1, f2;
    const Complex f = hyp_triplet(a, b, m * y, f1, f2);
    const Complex g = std::pow(y, beta) * std::exp(c * y);
    const Complex lg = beta / y + c;  // g'/g
    return {g * f, g * (lg * f + m * f1),
            g * ((lg * lg - beta / (y * y)) * f + 2.0 * lg * m * f1 + m * m * f2)};
  };
  return {SystemKind::coulomb, static_cast<double>(d), static_cast<double>(l),
          E.real(), sign, repulsive, std::move(eval)};
}

ContinuumWave coulomb_continuum_wave(int d, double E, int l, WaveSign sign) {
  if (!(E > 0.0))
    throw std::domain_error(
        "coulomb_continuum_wave: E must be positive; bound states live in the "
        "discrete-spectrum constructors");
  return coulomb_wave_general(d, {E, 0.0}, l, sign, false);
}

ContinuumWave repulsive_coulomb_wave(int d, double E, int l, WaveSign sign) {
  if (!(E > 0.0))
    throw std::domain_error("repulsive_coulomb_wave: E must be positive");
  return coulomb_wave_general(d, {E, 0.0}, l, sign, true);
}

ContinuumWave inverted_oscillator_wave(int D, double F, int L, WaveSign sign) {
  OscillatorQN{D, L, L}.validate();
  const double sigma = sign == WaveSign::outgoing ? 1.0 : -1.0;
  const double B = L + 0.5 * (D - 3.0) + 1.0;
  const Complex b{B + 0.5, 0.0};
  const Complex a = 0.5 * b - Complex(0.0, sigma) * (F / 4.0);
  const Complex c{0.0, sigma * 0.5};  // phase: e^{c Y^2}
  const Complex m{0.0, -sigma};       // argument: m Y^2

  auto eval = [B, a, b, c, m](double Y) -> ComplexEval {
    if (!(Y > 0.0))
      throw std::domain_error("continuum wave: radius must be positive");
    Complex f1, f2;
    const Complex f = hyp_triplet(a, b, m * Y * Y, f1, f2);
    const Complex g = std::pow(Y, B) * std::exp(c * Y * Y);
    const Complex lg = B / Y + 2.0 * c * Y;  // g'/g
    const Complex df = 2.0 * m * Y * f1;
    const Complex d2f = 4.0 * m * m * Y * Y * f2 + 2.0 * m * f1;
    return {g * f, g * (lg * f + df),
            g * ((lg * lg - B / (Y * Y) + 2.0 * c) * f + 2.0 * lg * df + d2f)};
  };
  return {SystemKind::oscillator, static_cast<double>(D), static_cast<double>(L), F,
          sign, false, std::move(eval)};
}

RadialOperator coulomb_continuum_operator(int d, int l, double E, bool repulsive) {
  const double lg = l + 0.5 * (d - 3.0);
  const double s = repulsive ? 1.0 : -1.0;
  return {[lg, s](double y) { return lg * (lg + 1.0) / (y * y) + s / y; }, E};
}

RadialOperator inverted_oscillator_operator(int D, int L, double F) {
  const double lg = L + 0.5 * (D - 3.0);
  return {[lg](double Y) { return lg * (lg + 1.0) / (Y * Y) - Y * Y; }, F};
}

namespace {

ContinuumMapResult map_impl(int d, double E, int l, int lambda, WaveSign sign,
                            bool repulsive) {
  if (!(E > 0.0)) throw std::domain_error("continuum map: E must be positive");
  const int D = 2 * d - 2 - 2 * lambda;
  const int L = 2 * l + lambda;
  if (D < 2)
    throw std::domain_error(
        "continuum map: lambda must keep D = 2d - 2 - 2 lambda >= 2");
  if (L < 0) throw std::domain_error("continuum map: L = 2l + lambda fell below 0");
  const double mu = std::sqrt(E);
  const double F = (repulsive ? -2.0 : 2.0) / mu;

  auto source = repulsive ? repulsive_coulomb_wave(d, E, l, sign)
                          : coulomb_continuum_wave(d, E, l, sign);
  const double q = 0.5 / mu;  // y = q Y^2
  auto eval = [src = std::move(source.eval), q](double Y) -> ComplexEval {
    const ComplexEval f = src(q * Y * Y);
    return {std::pow(Y, -0.5) * f.value,
            -0.5 * std::pow(Y, -1.5) * f.value + 2.0 * q * std::sqrt(Y) * f.d1,
            0.75 * std::pow(Y, -2.5) * f.value + 4.0 * q * q * std::pow(Y, 1.5) * f.d2};
  };
  ContinuumWave transported{SystemKind::oscillator, static_cast<double>(D),
                            static_cast<double>(L), F, sign, repulsive,
                            std::move(eval)};

  // fit the proportionality constant against the closed-form image wave
  const auto image = inverted_oscillator_wave(D, F, L, sign);
  const auto grid = oscillator_continuum_grid();
  Complex num{0.0, 0.0};
  double den = 0.0, gsup = 0.0;
  std::vector<ComplexEval> t(grid.size()), g(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    t[i] = transported(grid[i]);
    g[i] = image(grid[i]);
    num += t[i].value * std::conj(g[i].value);
    den += std::norm(g[i].value);
    gsup = std::max(gsup, std::abs(g[i].value));
  }
  const Complex fitted = num / den;
  double dev = 0.0;
  for (size_t i = 0; i < grid.size(); ++i)
    dev = std::max(dev, std::abs(t[i].value - fitted * g[i].value));
  dev /= std::abs(fitted) * gsup;

  return {D, L, F, std::move(transported), fitted, dev};
}

}  // namespace

ContinuumMapResult continuum_map(int d, double E, int l, int lambda, WaveSign sign) {
  return map_impl(d, E, l, lambda, sign, false);
}

ContinuumMapResult repulsive_map(int d, double E, int l, int lambda, WaveSign sign) {
  return map_impl(d, E, l, lambda, sign, true);
}

std::vector<double> coulomb_continuum_grid() { return geometric_grid(0.1, 20.0, 200); }

std::vector<double> oscillator_continuum_grid() {
  return geometric_grid(0.1, 6.0, 200);
}

}  // namespace radmap::continuum

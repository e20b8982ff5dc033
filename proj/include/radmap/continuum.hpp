#pragma once

#include "radmap/systems.hpp"

namespace radmap::continuum {

enum class WaveSign { outgoing, incoming };

/// Scattering-sector radial solution with complex evaluator.  Behaves like
/// r^{l+gamma+1} at the origin with unit leading coefficient; not square
/// integrable, so no normalization is attempted.
struct ContinuumWave {
  SystemKind kind;
  double dim;
  double angular;
  double energy;  // E/E0 (Coulomb) or F/F0 (oscillator); sign-free container
  WaveSign sign;
  bool repulsive = false;
  std::function<ComplexEval(double)> eval;

  ComplexEval operator()(double r) const { return eval(r); }
};

/// Attractive Coulomb scattering wave (E > 0):
///   w = y^{l+gamma+1} e^{+-i y sqrt(E/E0)}
///       1F1(l+gamma+1 -+ i/2 sqrt(E0/E); 2(l+gamma+1); -+ 2 i y sqrt(E/E0)).
ContinuumWave coulomb_continuum_wave(int d, double E, int l, WaveSign sign);

/// Repulsive variant: the 1/y term flips sign, and with it the imaginary part
/// of the first hypergeometric parameter.
ContinuumWave repulsive_coulomb_wave(int d, double E, int l, WaveSign sign);

/// Closed form continued to complex energy; the bound spectrum is recovered at
/// E < 0 with the outgoing sign.
ContinuumWave coulomb_wave_general(int d, Complex E, int l, WaveSign sign,
                                   bool repulsive = false);

/// Inverted-oscillator solution (potential -Y^2), any real F:
///   W = Y^{L+Gamma+1} e^{+-i Y^2/2}
///       1F1((L+Gamma+3/2)/2 -+ i F/4F0; L+Gamma+3/2; -+ i Y^2).
ContinuumWave inverted_oscillator_wave(int D, double F, int L, WaveSign sign);

/// Operators for residual scans (trial energy in E0/F0 units).
RadialOperator coulomb_continuum_operator(int d, int l, double E,
                                          bool repulsive = false);
RadialOperator inverted_oscillator_operator(int D, int L, double F);

/// Quadratic continuum map Y^2 = 2 y sqrt(E/E0):
///   D = 2d - 2 - 2 lambda, L = 2l + lambda, F/F0 = 2 sqrt(E0/E),
/// transporting through Y^{-1/2} w(Y^2 / 2 sqrt(E/E0)).  The transported wave
/// is proportional to the inverted-oscillator solution; the fitted constant is
/// reported, only its constancy is checked.
struct ContinuumMapResult {
  int D;
  int L;
  double F;  // negative for the repulsive variant
  ContinuumWave transported;
  Complex fitted_constant;
  double ratio_deviation;  // max |t - c g| / (|c| max |g|) on the standard grid
};

ContinuumMapResult continuum_map(int d, double E, int l, int lambda,
                                 WaveSign sign = WaveSign::outgoing);

/// Same bookkeeping with the negative branch of the square root:
/// F/F0 = -2 sqrt(E0/E); the repulsive Coulomb wave solves the
/// inverted-oscillator equation at that negative F.
ContinuumMapResult repulsive_map(int d, double E, int l, int lambda,
                                 WaveSign sign = WaveSign::outgoing);

/// Standard scan grids.
std::vector<double> coulomb_continuum_grid();   // [0.1, 20]
std::vector<double> oscillator_continuum_grid();  // [0.1, 6]

}  // namespace radmap::continuum

#pragma once

#include "radmap/common.hpp"

namespace radmap {

/// Value and first two radial derivatives of a scaled radial function.
struct RadialEval {
  double value;
  double d1;
  double d2;
};

struct ComplexEval {
  Complex value;
  Complex d1;
  Complex d2;
};

/// Coulomb quantum numbers in d >= 2 dimensions.  For d = 2 the angular
/// quantum number is the modulus of the angular momentum.
struct CoulombQN {
  int d;
  int n;
  int l;

  double gamma() const { return 0.5 * (d - 3); }
  void validate() const;
};

/// Oscillator quantum numbers in D >= 1 dimensions.  N - L must be even;
/// for D = 1 only L in {0, 1} (even/odd parity substacks) is allowed, and for
/// D = 2 the angular quantum number is a modulus.
struct OscillatorQN {
  int D;
  int N;
  int L;

  double gamma() const { return 0.5 * (D - 3); }
  void validate() const;
};

/// A bound scaled radial eigenfunction together with its quantum labels and
/// eigenvalue.  The labels are real-valued so that quantum-defect states
/// (shifted, generally non-integer labels) share the representation with the
/// exact systems.  Evaluators are immutable and safe for concurrent reads.
struct RadialState {
  SystemKind kind;
  double dim;        // d or D (possibly shifted)
  double principal;  // n or N
  double angular;    // l or L
  double energy;     // units of E0 (Coulomb) or F0 (oscillator)
  std::function<RadialEval(double)> eval;

  RadialEval operator()(double r) const { return eval(r); }
};

/// Radial differential functional  f -> -f'' + (V(r) - energy) f,
/// evaluable at any r > 0 given (f, f', f'').
struct RadialOperator {
  std::function<double(double)> potential;
  double energy;

  double apply(double r, const RadialEval& f) const {
    return -f.d2 + (potential(r) - energy) * f.value;
  }
};

namespace systems {

/// Bound-state energy -1/(4(n+gamma)^2) in units of E0.
double coulomb_energy(const CoulombQN& qn);

/// Oscillator energy 2N + 2Gamma + 3 in units of F0.
double oscillator_energy(const OscillatorQN& qn);

/// Normalized scaled radial Coulomb eigenfunction
///   w(y) = c y^{l+gamma+1} exp(-y/2(n+gamma)) L^{(2l+2gamma+1)}_{n-l-1}(y/(n+gamma))
/// with analytic derivatives.
RadialState coulomb_state(const CoulombQN& qn, const PhysicalScales& scales = {});

/// Normalized scaled radial oscillator eigenfunction
///   W(Y) = C Y^{L+Gamma+1} exp(-Y^2/2) L^{(L+Gamma+1/2)}_{(N-L)/2}(Y^2),
/// normalized on the half line.
RadialState oscillator_state(const OscillatorQN& qn, const PhysicalScales& scales = {});

/// Real-label generalizations used by the quantum-defect layer: the closed
/// forms extend verbatim as long as n-l (resp. (N-L)/2) stays a nonnegative
/// integer and the normalization integrals converge.
RadialState coulomb_state_general(double d, double n, double l,
                                  const PhysicalScales& scales = {});
RadialState oscillator_state_general(double D, double N, double L,
                                     const PhysicalScales& scales = {});

/// Radial operators at arbitrary trial energy (units E0 / F0).
RadialOperator coulomb_operator(const CoulombQN& qn, double energy);
RadialOperator oscillator_operator(const OscillatorQN& qn, double energy);
RadialOperator coulomb_operator_general(double l, double gamma, double energy);
RadialOperator oscillator_operator_general(double L, double gamma, double energy);

/// Standard residual-scan grids: geometric, 200 points, spanning the
/// centrifugal region and the exponential tail.
std::vector<double> coulomb_grid(double n_plus_gamma);
std::vector<double> oscillator_grid();

}  // namespace systems
}  // namespace radmap

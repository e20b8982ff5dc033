#pragma once

#include "radmap/common.hpp"

namespace radmap::specfun {

/// Value and first derivative of a polynomial evaluation.
struct PolyEval {
  double value;
  double first_derivative;
};

/// Value and first two derivatives.
struct PolyEval2 {
  double value;
  double d1;
  double d2;
};

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(x) for x > 0, computed through log_gamma so that half-integer and
/// integer arguments up to a few hundred stay inside the internal range.
double gamma_fn(double x);

/// Generalized (Sonine-)Laguerre polynomial L_k^{(alpha)}(x) with its first
/// derivative, via the three-term recurrence in the degree.  The derivative
/// uses d/dx L_k^{(alpha)} = -L_{k-1}^{(alpha+1)}.
/// Requires k >= 0, alpha > -1, x >= 0.
PolyEval laguerre(int k, double alpha, double x);

/// As laguerre(), also returning the second derivative
/// d^2/dx^2 L_k^{(alpha)} = L_{k-2}^{(alpha+2)}.
PolyEval2 laguerre2(int k, double alpha, double x);

/// Confluent hypergeometric function 1F1(a; b; z) by Taylor series with
/// term-ratio stopping.  For Re(z) < 0 the Kummer transformation
/// 1F1(a;b;z) = e^z 1F1(b-a;b;-z) is applied first to control cancellation;
/// the remaining series is accumulated in double-double precision so that
/// oscillatory arguments up to the |z| <= 50 budget keep full double accuracy.
/// Throws std::domain_error if b is a nonpositive integer and accuracy_error
/// if the series does not converge within the term budget.
Complex hyp1f1(Complex a, Complex b, Complex z);

}  // namespace radmap::specfun

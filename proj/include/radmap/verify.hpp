#pragma once

#include <span>

#include "radmap/systems.hpp"

namespace radmap::verify {

/// Half-line quadrature rule: integral f ~ sum_i weights[i] * f(nodes[i]).
struct QuadratureRule {
  enum class Variant { gauss_laguerre_weighted, mapped_gauss_legendre };

  Variant variant;
  int order;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive
};

/// Generalized Gauss-Laguerre rule folded into plain half-line form: exact for
/// integrands of the form y^alpha exp(-y/scale) * (polynomial of degree
/// <= 2*order - 1 in y/scale).  alpha > -1 may be fractional.
QuadratureRule gauss_laguerre_rule(int order, double alpha, double scale);

/// Gauss-Legendre rule mapped onto (0, inf) through y = scale (1+t)/(1-t);
/// geometric convergence for integrands smooth up to Gaussian-decay tails.
QuadratureRule mapped_legendre_rule(int order, double scale);

/// Decay class declared by the caller of integrate_halfline.
enum class DecayClass { exponential, gaussian };

/// Rule selection by decay class.  Exponential tails get the Laguerre-weighted
/// variant (rate = decay exponent, endpoint_exponent = power of y at the
/// origin); Gaussian tails get the compactified Gauss-Legendre variant.
QuadratureRule rule_for(DecayClass decay, double rate = 1.0,
                        double endpoint_exponent = 0.0, int order = 0);

struct Integration {
  double value;
  double tail_fraction;  // |contribution of the last decade of nodes| / |value|
  bool tail_warning() const { return tail_fraction > 1e-6; }
};

/// integral_0^inf f, real- or complex-valued by the callable's return type.
template <typename F>
auto integrate_halfline(const F& f, const QuadratureRule& rule) {
  using R = decltype(f(1.0));
  R sum{};
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(rule.nodes[i]);
  return sum;
}

/// As integrate_halfline, also reporting the decay-class mismatch heuristic.
Integration integrate_halfline_checked(const std::function<double(double)>& f,
                                       const QuadratureRule& rule);

struct ResidualReport {
  double max_abs;        // max |(-f'' + (V - E) f)(r)| over the grid
  double max_rel;        // max_abs / max |f| over the grid
  double state_sup;      // max |f| over the grid
  std::vector<double> grid;
};

ResidualReport residual_scan(const RadialOperator& op, const RadialState& state,
                             const std::vector<double>& grid);
ResidualReport residual_scan(const RadialOperator& op,
                             const std::function<ComplexEval(double)>& state,
                             const std::vector<double>& grid);

/// Gram matrix of a family of states, symmetrized by averaging.  The rule is
/// chosen per pair from the states' decay (Coulomb: exponential with the joint
/// rate; oscillator: Gaussian).
std::vector<std::vector<double>> overlap_matrix(std::span<const RadialState> states);

/// Max entrywise deviation of overlap_matrix(states) from the identity.
double overlap_identity_deviation(std::span<const RadialState> states);

/// Independent finite-difference oracle: second-order central differences for
/// -f'' + V f on the uniform offset grid r_k = k h, k = 1..points,
/// h = r_max/(points+1), Dirichlet at both ends.  Returns the lowest `count`
/// eigenvalues from Sturm-sequence bisection on the tridiagonal matrix.
/// Touches nothing but the potential functional.
std::vector<double> fd_eigensolve(const std::function<double(double)>& potential,
                                  int count, int grid_points, double r_max);

struct SpectrumComparison {
  struct Row {
    double analytic;
    double numeric;
    double rel_error;
  };
  std::vector<Row> rows;  // ascending by analytic value
  int grid_points;
  double r_max;

  double max_rel_error() const;
};

SpectrumComparison compare_spectra(std::vector<double> analytic,
                                   std::vector<double> numeric, int grid_points,
                                   double r_max);

/// Clusters eigenvalues from labeled spectra within an absolute tolerance.
struct LabeledSpectrum {
  std::string label;
  std::vector<double> values;
};

struct DegeneracyGroup {
  double value;                                        // cluster representative
  std::vector<std::pair<std::string, int>> members;    // (label, index in list)
};

std::vector<DegeneracyGroup> degeneracy_report(
    const std::vector<LabeledSpectrum>& spectra, double tol);

}  // namespace radmap::verify

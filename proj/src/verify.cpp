#include "radmap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radmap/specfun.hpp"

namespace radmap::verify {

namespace {

constexpr int kMaxLaguerreOrder = 150;  // recurrence overflows beyond this

// Nodes of L_n^{(alpha)} by Newton iteration on the degree recurrence,
// weights for the weight function x^alpha e^{-x}.
void gauss_laguerre_raw(int n, double alpha, std::vector<double>& x,
                        std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
    } else if (i == 1) {
      z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai) +
            1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
           (z - x[i - 2]) / (1.0 + 0.3 * alpha);
    }
    double p1 = 0.0, p2 = 0.0, pp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      p1 = 1.0;
      p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1 + alpha - z) * p2 - (j - 1 + alpha) * p3) / j;
      }
      pp = (n * p1 - (n + alpha) * p2) / z;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-14 * std::max(1.0, z)) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw accuracy_error("gauss_laguerre_rule: node iteration stalled",
                           std::abs(p1 / pp));
    x[i] = z;
    w[i] = -std::exp(specfun::log_gamma(alpha + n) - specfun::log_gamma(n)) /
           (pp * n * p2);
  }
}

// Gauss-Legendre nodes/weights on (-1, 1).
void gauss_legendre_raw(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

}  // namespace

QuadratureRule gauss_laguerre_rule(int order, double alpha, double scale) {
  if (order < 1 || order > kMaxLaguerreOrder)
    throw std::invalid_argument("gauss_laguerre_rule: order out of range");
  if (!(alpha > -1.0))
    throw std::domain_error("gauss_laguerre_rule: alpha must exceed -1");
  if (!(scale > 0.0)) throw std::domain_error("gauss_laguerre_rule: scale must be positive");
  std::vector<double> x, w;
  gauss_laguerre_raw(order, alpha, x, w);
  QuadratureRule rule{QuadratureRule::Variant::gauss_laguerre_weighted, order, {}, {}};
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = scale * x[i];
    // fold the weight function back in: w e^{x} x^{-alpha}, kept in log form
    rule.weights[i] =
        std::exp(std::log(w[i]) + x[i] - alpha * std::log(x[i]) + std::log(scale));
  }
  return rule;
}

QuadratureRule mapped_legendre_rule(int order, double scale) {
  if (order < 1) throw std::invalid_argument("mapped_legendre_rule: order must be >= 1");
  if (!(scale > 0.0)) throw std::domain_error("mapped_legendre_rule: scale must be positive");
  std::vector<double> t, w;
  gauss_legendre_raw(order, t, w);
  QuadratureRule rule{QuadratureRule::Variant::mapped_gauss_legendre, order, {}, {}};
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    const double om = 1.0 - t[i];
    rule.nodes[i] = scale * (1.0 + t[i]) / om;
    rule.weights[i] = w[i] * 2.0 * scale / (om * om);
  }
  return rule;
}

QuadratureRule rule_for(DecayClass decay, double rate, double endpoint_exponent,
                        int order) {
  if (decay == DecayClass::exponential) {
    if (!(rate > 0.0))
      throw std::domain_error("rule_for: exponential decay needs a positive rate");
    return gauss_laguerre_rule(order > 0 ? order : 96, endpoint_exponent, 1.0 / rate);
  }
  return mapped_legendre_rule(order > 0 ? order : 400, 2.0);
}

Integration integrate_halfline_checked(const std::function<double(double)>& f,
                                       const QuadratureRule& rule) {
  const int n = static_cast<int>(rule.nodes.size());
  const int tail_start = n - std::max(1, n / 10);
  double total = 0.0, tail = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = rule.weights[i] * f(rule.nodes[i]);
    total += c;
    if (i >= tail_start) tail += c;
  }
  const double denom = std::max(std::abs(total), 1e-300);
  return {total, std::abs(tail) / denom};
}

ResidualReport residual_scan(const RadialOperator& op, const RadialState& state,
                             const std::vector<double>& grid) {
  ResidualReport rep{0.0, 0.0, 0.0, grid};
  for (double r : grid) {
    const RadialEval f = state(r);
    rep.max_abs = std::max(rep.max_abs, std::abs(op.apply(r, f)));
    rep.state_sup = std::max(rep.state_sup, std::abs(f.value));
  }
  rep.max_rel = rep.max_abs / std::max(rep.state_sup, 1e-300);
  return rep;
}

ResidualReport residual_scan(const RadialOperator& op,
                             const std::function<ComplexEval(double)>& state,
                             const std::vector<double>& grid) {
  ResidualReport rep{0.0, 0.0, 0.0, grid};
  for (double r : grid) {
    const ComplexEval f = state(r);
    const Complex res = -f.d2 + (op.potential(r) - op.energy) * f.value;
    rep.max_abs = std::max(rep.max_abs, std::abs(res));
    rep.state_sup = std::max(rep.state_sup, std::abs(f.value));
  }
  rep.max_rel = rep.max_abs / std::max(rep.state_sup, 1e-300);
  return rep;
}

namespace {

QuadratureRule pair_rule(const RadialState& a, const RadialState& b) {
  if (a.kind != b.kind)
    throw std::invalid_argument("overlap_matrix: mixed system kinds");
  if (a.kind == SystemKind::coulomb) {
    const double qa = a.principal + 0.5 * (a.dim - 3.0);
    const double qb = b.principal + 0.5 * (b.dim - 3.0);
    const double rate = 0.5 / qa + 0.5 / qb;
    const double ga = 0.5 * (a.dim - 3.0), gb = 0.5 * (b.dim - 3.0);
    const double exponent = (a.angular + ga + 1.0) + (b.angular + gb + 1.0);
    const int ka = static_cast<int>(std::lround(a.principal - a.angular)) - 1;
    const int kb = static_cast<int>(std::lround(b.principal - b.angular)) - 1;
    const int order = std::max(48, (ka + kb) / 2 + 16);
    return gauss_laguerre_rule(order, exponent, 1.0 / rate);
  }
  return mapped_legendre_rule(400, 2.0);
}

}  // namespace

std::vector<std::vector<double>> overlap_matrix(std::span<const RadialState> states) {
  const size_t n = states.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      const auto rule = pair_rule(states[i], states[j]);
      const auto& si = states[i];
      const auto& sj = states[j];
      const double v = integrate_halfline(
          [&](double r) { return si(r).value * sj(r).value; }, rule);
      m[i][j] = m[j][i] = v;
    }
  }
  return m;
}

double overlap_identity_deviation(std::span<const RadialState> states) {
  const auto m = overlap_matrix(states);
  double dev = 0.0;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      dev = std::max(dev, std::abs(m[i][j] - (i == j ? 1.0 : 0.0)));
  return dev;
}

std::vector<double> fd_eigensolve(const std::function<double(double)>& potential,
                                  int count, int grid_points, double r_max) {
  if (count < 1 || grid_points < count + 2)
    throw std::invalid_argument("fd_eigensolve: need grid_points > count + 1");
  if (!(r_max > 0.0)) throw std::domain_error("fd_eigensolve: r_max must be positive");
  const int m = grid_points;
  const double h = r_max / (m + 1);
  const double off2 = 1.0 / (h * h * h * h);  // square of the off-diagonal -1/h^2
  std::vector<double> diag(m);
  double glo = std::numeric_limits<double>::infinity();
  double ghi = -glo;
  for (int k = 0; k < m; ++k) {
    diag[k] = 2.0 / (h * h) + potential((k + 1) * h);
    glo = std::min(glo, diag[k]);
    ghi = std::max(ghi, diag[k]);
  }
  glo -= 2.0 / (h * h);
  ghi += 2.0 / (h * h);

  // Sturm sequence: number of eigenvalues below x.
  auto count_below = [&](double x) {
    int c = 0;
    double q = 1.0;
    for (int k = 0; k < m; ++k) {
      q = diag[k] - x - (k > 0 ? off2 / q : 0.0);
      if (q == 0.0) q = -std::numeric_limits<double>::min();
      if (q < 0.0) ++c;
    }
    return c;
  };

  std::vector<double> ev(count);
  for (int j = 1; j <= count; ++j) {
    double lo = glo, hi = ghi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) >= j)
        hi = mid;
      else
        lo = mid;
      if (hi - lo <= 1e-14 * std::max(1.0, std::abs(mid))) break;
    }
    ev[j - 1] = 0.5 * (lo + hi);
  }
  return ev;
}

double SpectrumComparison::max_rel_error() const {
  double e = 0.0;
  for (const auto& r : rows) e = std::max(e, r.rel_error);
  return e;
}

SpectrumComparison compare_spectra(std::vector<double> analytic,
                                   std::vector<double> numeric, int grid_points,
                                   double r_max) {
  if (analytic.size() != numeric.size())
    throw std::invalid_argument("compare_spectra: size mismatch");
  std::sort(analytic.begin(), analytic.end());
  std::sort(numeric.begin(), numeric.end());
  SpectrumComparison cmp{{}, grid_points, r_max};
  for (size_t i = 0; i < analytic.size(); ++i) {
    const double denom = std::max(std::abs(analytic[i]), 1e-12);
    cmp.rows.push_back({analytic[i], numeric[i],
                        std::abs(analytic[i] - numeric[i]) / denom});
  }
  return cmp;
}

std::vector<DegeneracyGroup> degeneracy_report(
    const std::vector<LabeledSpectrum>& spectra, double tol) {
  struct Entry {
    double value;
    std::string label;
    int index;
  };
  std::vector<Entry> all;
  for (const auto& s : spectra)
    for (size_t i = 0; i < s.values.size(); ++i)
      all.push_back({s.values[i], s.label, static_cast<int>(i)});
  std::sort(all.begin(), all.end(),
            [](const Entry& a, const Entry& b) { return a.value < b.value; });
  std::vector<DegeneracyGroup> groups;
  for (const auto& e : all) {
    if (groups.empty() || std::abs(e.value - groups.back().value) > tol)
      groups.push_back({e.value, {}});
    groups.back().members.emplace_back(e.label, e.index);
  }
  return groups;
}

}  // namespace radmap::verify

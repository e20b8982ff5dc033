#include "radmap/specfun.hpp"

#include <cmath>
#include <limits>

namespace radmap {

void PhysicalScales::validate() const {
  if (!(r0 > 0.0 && R0 > 0.0 && E0 > 0.0 && F0 > 0.0))
    throw std::domain_error("PhysicalScales: all scales must be positive");
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > lo) || count < 2)
    throw std::invalid_argument("geometric_grid: need 0 < lo < hi, count >= 2");
  std::vector<double> g(count);
  const double ratio = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) g[i] = lo * std::exp(ratio * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace radmap

namespace radmap::specfun {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  return std::lgamma(x);
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  return std::exp(std::lgamma(x));
}

namespace {

// One pass of the degree recurrence
//   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
double laguerre_value(int k, double alpha, double x) {
  if (k == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int m = 1; m < k; ++m) {
    const double lp1 = ((2 * m + 1 + alpha - x) * l - (m + alpha) * lm1) / (m + 1);
    lm1 = l;
    l = lp1;
  }
  return l;
}

void laguerre_check_args(int k, double alpha, double x) {
  if (k < 0) throw std::domain_error("laguerre: degree must be nonnegative");
  if (!(alpha > -1.0))
    throw std::domain_error("laguerre: alpha must exceed -1 (weight not integrable)");
  if (!(x >= 0.0)) throw std::domain_error("laguerre: argument must be nonnegative");
}

}  // namespace

PolyEval laguerre(int k, double alpha, double x) {
  laguerre_check_args(k, alpha, x);
  const double value = laguerre_value(k, alpha, x);
  const double deriv = (k == 0) ? 0.0 : -laguerre_value(k - 1, alpha + 1.0, x);
  return {value, deriv};
}

PolyEval2 laguerre2(int k, double alpha, double x) {
  laguerre_check_args(k, alpha, x);
  const double value = laguerre_value(k, alpha, x);
  const double d1 = (k == 0) ? 0.0 : -laguerre_value(k - 1, alpha + 1.0, x);
  const double d2 = (k <= 1) ? 0.0 : laguerre_value(k - 2, alpha + 2.0, x);
  return {value, d1, d2};
}

namespace {

// Double-double arithmetic (Dekker/Knuth).  The Kummer series for oscillatory
// arguments cancels like e^{|z|}; carrying the partial sums and the term
// recurrence with ~31 significant digits keeps the result at full double
// accuracy over the whole |z| <= 50 budget.
struct Dd {
  double hi, lo;
};

inline Dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd dd_add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline Dd dd_neg(Dd a) { return {-a.hi, -a.lo}; }

inline Dd dd_sub(Dd a, Dd b) { return dd_add(a, dd_neg(b)); }

inline Dd dd_mul(Dd a, Dd b) {
  Dd p = two_prod(a.hi, b.hi);
  return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline Dd dd_div(Dd a, Dd b) {
  const double q1 = a.hi / b.hi;
  Dd r = dd_sub(a, dd_mul({q1, 0.0}, b));
  const double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul({q2, 0.0}, b));
  const double q3 = r.hi / b.hi;
  Dd q = quick_two_sum(q1, q2);
  return dd_add(q, {q3, 0.0});
}

struct Cdd {
  Dd re, im;
};

inline Cdd cdd_from(Complex z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline Cdd cdd_add(Cdd a, Cdd b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline Cdd cdd_mul(Cdd a, Cdd b) {
  return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline Cdd cdd_conj(Cdd a) { return {a.re, dd_neg(a.im)}; }

inline Cdd cdd_div(Cdd a, Cdd b) {
  const Dd den = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
  const Cdd num = cdd_mul(a, cdd_conj(b));
  return {dd_div(num.re, den), dd_div(num.im, den)};
}

inline double cdd_abs(Cdd a) { return std::hypot(a.re.hi, a.im.hi); }

inline Complex cdd_to_complex(Cdd a) { return {a.re.hi + a.re.lo, a.im.hi + a.im.lo}; }

constexpr double kSeriesBudget = 60.0;  // design cap is |z| <= 50, with headroom
constexpr int kMaxTerms = 3000;

bool is_nonpositive_integer(Complex b) {
  const double rb = std::round(b.real());
  return rb <= 0.5 && std::abs(b - Complex(rb, 0.0)) < 1e-12;
}

// Raw Taylor series sum_{k} (a)_k / (b)_k z^k / k!, double-double accumulation.
Complex hyp1f1_series(Complex a, Complex b, Complex z) {
  Cdd sum = cdd_from(Complex(1.0, 0.0));
  Cdd term = sum;
  const Cdd zz = cdd_from(z);
  int quiet = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const Cdd num = cdd_mul(cdd_add(cdd_from(a), cdd_from(Complex(k, 0.0))), zz);
    const Cdd den = cdd_mul(cdd_add(cdd_from(b), cdd_from(Complex(k, 0.0))),
                            cdd_from(Complex(k + 1, 0.0)));
    term = cdd_mul(term, cdd_div(num, den));
    sum = cdd_add(sum, term);
    const double rel = cdd_abs(term) / std::max(cdd_abs(sum), 1e-300);
    if (rel < 1e-20) {
      if (++quiet >= 2) return cdd_to_complex(sum);
    } else {
      quiet = 0;
    }
  }
  const double attained =
      cdd_abs(term) / std::max(cdd_abs(sum), 1e-300);
  throw accuracy_error("hyp1f1: series did not converge within the term budget",
                       attained);
}

}  // namespace

Complex hyp1f1(Complex a, Complex b, Complex z) {
  if (is_nonpositive_integer(b))
    throw std::domain_error("hyp1f1: b must not be a nonpositive integer");
  if (std::abs(z) > kSeriesBudget)
    throw accuracy_error("hyp1f1: |z| exceeds the series-convergence budget",
                         std::numeric_limits<double>::infinity());
  if (z == Complex(0.0, 0.0)) return {1.0, 0.0};
  if (z.real() < 0.0) return std::exp(z) * hyp1f1_series(b - a, b, -z);
  return hyp1f1_series(a, b, z);
}

}  // namespace radmap::specfun

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radmap {

using Complex = std::complex<double>;

enum class SystemKind { coulomb, oscillator };

/// Thrown when a quantum-defect profile violates the orthonormalizability
/// range; the message names the violated inequality.
class defect_range_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a numerical routine cannot reach its accuracy target.
/// Carries the tolerance actually attained.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double attained)
      : std::runtime_error(what), attained_(attained) {}
  double attained() const { return attained_; }

 private:
  double attained_;
};

/// Thrown when jointly supplied map parameters contradict each other
/// (e.g. oscillator and Coulomb defect strengths breaking A = 2a).
class consistency_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Geometric grid on [lo, hi] with `count` points (count >= 2, 0 < lo < hi).
std::vector<double> geometric_grid(double lo, double hi, int count);

/// Physical units entering only as multiplicative scales.  Defaults give the
/// dimensionless convention used throughout the library and its tests.
struct PhysicalScales {
  double r0 = 1.0;  // Coulomb radial unit
  double R0 = 1.0;  // oscillator radial unit
  double E0 = 1.0;  // Coulomb energy unit (ground-state magnitude at d = 2)
  double F0 = 1.0;  // oscillator energy unit (ground energy at D = 1)

  void validate() const;
};

}  // namespace radmap

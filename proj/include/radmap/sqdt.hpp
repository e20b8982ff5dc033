#pragma once

#include <optional>

#include "radmap/systems.hpp"

namespace radmap::sqdt {

/// Quantum-defect profile for the Coulomb system: per-angular-momentum count
/// of filled lower levels i(l), defect delta(l), and an integer dimension
/// shift j > 1-d.  Angular momenta without a row take the tail values.
struct CoulombDefectProfile {
  struct Row {
    int l;
    int filled;     // i(l) >= 0
    double defect;  // delta(l)
  };
  std::vector<Row> rows;
  int dim_shift = 0;        // j
  int tail_filled = 0;
  double tail_defect = 0.0;

  int filled(int l) const;
  double defect(int l) const;
};

/// Oscillator analogue: inaccessible lower levels I(L), defect Delta(L), and
/// dimension shift J >= 1-D.
struct OscillatorDefectProfile {
  struct Row {
    int L;
    int inaccessible;  // I(L) >= 0
    double defect;     // Delta(L)
  };
  std::vector<Row> rows;
  int dim_shift = 0;        // J
  int tail_inaccessible = 0;
  double tail_defect = 0.0;

  int inaccessible(int L) const;
  double defect(int L) const;
};

/// Shifted (starred) quantum numbers: n* = n_s - delta = n + i - delta,
/// l* = l + i - delta, d* = d + j, and the sector strength a = i - delta + j/2.
struct CoulombStarred {
  double d_star;
  double n_star;
  double l_star;
  double gamma_star;
  double a;
  int n_s;  // spectroscopic principal number n + i
};

/// N* = N_s - I - Delta = N + I - Delta, L* = L + I - Delta, D* = D + J,
/// A = I - Delta + J/2, N_s = N + 2I.
struct OscillatorStarred {
  double D_star;
  double N_star;
  double L_star;
  double Gamma_star;
  double A;
  int N_s;
};

/// Validated starred numbers; throws defect_range_error naming the violated
/// orthonormalizability inequality.
CoulombStarred coulomb_starred(const CoulombDefectProfile& profile, int d, int n, int l);
OscillatorStarred oscillator_starred(const OscillatorDefectProfile& profile, int D,
                                     int N, int L);

/// Sector strengths at fixed angular momentum.
double coulomb_a(const CoulombDefectProfile& profile, int l);
double oscillator_A(const OscillatorDefectProfile& profile, int L);

/// Effective potential added to the fixed-l radial equation:
///   [(n+g)^2 - (n*+g*)^2] / [4 (n+g)^2 (n*+g*)^2]
///   + [(l*+g*)(l*+g*+1) - (l+g)(l+g+1)] / y^2.
/// The constant first term is state-dependent through n; it bookkeeps the
/// shift between the unshifted eigenvalue and the Rydberg-series one.
double coulomb_effective_potential(const CoulombDefectProfile& profile, int d, int n,
                                   int l, double y);

/// Oscillator analogue 2(N - N* + Gamma - Gamma*) + barrier shift / Y^2;
/// the constant evaluates to -2A.
double oscillator_effective_potential(const OscillatorDefectProfile& profile, int D,
                                      int N, int L, double Y);

/// Rydberg-type spectrum -1/(4(n + gamma + a)^2) in units of E0.
double sqdt_coulomb_energy(const CoulombDefectProfile& profile, int d, int n, int l);

/// 2N + 2Gamma + 4A + 3 in units of F0.  The 4A anchor makes the spectra of
/// the integral-A sectors line up with their supersymmetric degeneracies.
double sqdt_oscillator_energy(const OscillatorDefectProfile& profile, int D, int N,
                              int L);

/// Deformed eigenstates: the exact closed forms evaluated at the starred
/// labels (the Laguerre degree n - l - 1 resp. (N-L)/2 is unchanged).
RadialState sqdt_coulomb_state(const CoulombDefectProfile& profile, int d, int n,
                               int l, const PhysicalScales& scales = {});
RadialState sqdt_oscillator_state(const OscillatorDefectProfile& profile, int D,
                                  int N, int L, const PhysicalScales& scales = {});

/// The radial operator each deformed state satisfies, paired with its
/// spectrum convention.  The effective potential's constant terms are exactly
/// the reported-energy anchors, so they live on the eigenvalue side: what
/// remains is the defect-shifted barrier (plus the +2A oscillator anchor).
/// Residuals of (state, operator) pairs vanish identically.
RadialOperator sqdt_coulomb_operator(const CoulombDefectProfile& profile, int d,
                                     int n, int l);
RadialOperator sqdt_oscillator_operator(const OscillatorDefectProfile& profile,
                                        int D, int N, int L);

/// Integral nonnegative sector strength -> tier; anything else is a genuinely
/// deformed system (nullopt).
std::optional<int> sector_classifier(double a_or_A);

/// The sodium defect table: i(0)=2, i(1)=1, i(l>=2)=0 with the measured
/// s/p/d/f defects; j = 0.
CoulombDefectProfile sodium_coulomb_profile();

}  // namespace radmap::sqdt

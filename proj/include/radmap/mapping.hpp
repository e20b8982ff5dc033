#pragma once

#include "radmap/sqdt.hpp"

namespace radmap::mapping {

/// Quadratic radial map from a d-dimensional Coulomb bound state to an
/// even-dimensional oscillator state: Y^2 = y/(n+gamma),
///   D = 2d - 2 - 2 lambda,  N = 2n - 2 + lambda,  L = 2l + lambda,
/// transported through W(Y) = K Y^{-1/2} w((n+gamma) Y^2).
struct ClassicMapResult {
  OscillatorQN image;
  double K;
  RadialState transported;  // equals the closed-form image state pointwise
};

ClassicMapResult classic_map(int d, int lambda, int n, int l,
                             const PhysicalScales& scales = {});

/// Admissible (D, lambda) pairs.  Full-spectrum mappings require every l to
/// be imaged (2 <= D <= 2d-2); at fixed l the range widens to
/// 2 <= D <= 2d-2+4l.
std::vector<std::pair<int, int>> classic_map_range(int d, int l, bool full_spectrum);

/// A fully validated generalized map between a Coulomb and an oscillator
/// quantum-defect system.  The oscillator base labels (D, N, L) always come
/// out integral (they are the classic-map image); the starred labels absorb
/// the defects.  Construction enforces A = 2a and both defect ranges.
struct MapSpec {
  int lambda;
  int d, n, l;
  sqdt::CoulombDefectProfile coulomb_profile;
  sqdt::OscillatorDefectProfile oscillator_profile;

  // derived
  sqdt::CoulombStarred source;
  int D, N, L;
  sqdt::OscillatorStarred image;
  double K;
};

MapSpec make_map_spec(int lambda, const sqdt::CoulombDefectProfile& coulomb_profile,
                      int d, int n, int l,
                      const sqdt::OscillatorDefectProfile& oscillator_profile,
                      const PhysicalScales& scales = {});

/// Normalization constant K_{d*,n*,lambda - J/2 + j}: the classic functional
/// form with the starred arguments substituted (its subscript fixes the third
/// slot), verified a posteriori by quadrature of the transported state.
double map_constant(const MapSpec& spec, const PhysicalScales& scales = {});

struct MapReport {
  double max_pointwise_rel_error;  // transported vs closed-form image state
  double energy_residual;          // |F/F0 - 2 sqrt(E0/-E) - 4a|
  double d_star, n_star, l_star;
  double D_star, N_star, L_star;
  double a, A, K;
  double k_norm_deviation;  // |quadrature norm of transported - expected|
  bool k_verified;          // k_norm_deviation <= 1e-8
  std::string k_convention;
};

struct GeneralMapResult {
  MapReport report;
  RadialState transported;
  RadialState target;  // the deformed oscillator eigenstate
};

GeneralMapResult general_map(const MapSpec& spec, const PhysicalScales& scales = {});

/// Both systems three-dimensional (j = 0, J = 2 lambda - 1, lambda in {0,1}),
/// with the defect budget Delta - I = 2(delta - i) + lambda - 1/2 placed
/// entirely on one side.
enum class ThreeDimExact { oscillator_exact, coulomb_exact };

MapSpec three_dim_map(int lambda, ThreeDimExact which, int n, int l);

/// Custom Coulomb defect; the oscillator side is derived from A = 2a with
/// I = 0.
MapSpec three_dim_map_custom(int lambda, const sqdt::CoulombDefectProfile& profile,
                             int n, int l);

/// One row of the sodium-to-oscillator parameter table (lambda = 1, j = 0):
/// Delta(L) = I(L) + 2(delta(l) - i(l)) + lambda - 1/2 at L = 2l + lambda.
struct SodiumRow {
  int l;
  int i;
  int n_min;
  int ns_min;
  double delta;
  int L;
  int I;
  int N_min;
  int Ns_min;
  double Delta;
};

/// The published sodium defects with the oscillator levels below N_s = 5
/// filled; `inaccessible_of_L` overrides the I(L) choice.
std::vector<SodiumRow> sodium_table(
    int lambda = 1, const std::function<int(int)>& inaccessible_of_L = {});

}  // namespace radmap::mapping

#pragma once

#include "radmap/systems.hpp"

namespace radmap::susy {

/// Sector tier in the ladder of partner systems: 0 = bosonic, 1 = fermionic,
/// 2 = second fermionic, q = qth iteration.
struct SectorLabel {
  int tier;
};

/// Superpotential at fixed angular momentum: u = y/2(l+gamma+1) - (l+gamma+1) ln y
/// for the Coulomb sector, U = Y^2/2 - (L+Gamma+1) ln Y for the oscillator.
/// exp(-u) reproduces the nodeless bosonic ground state up to normalization.
struct Superpotential {
  SystemKind kind;
  int dim;
  int angular;
  double beta;  // l + gamma + 1  (resp. L + Gamma + 1)

  double u(double r) const;
  double du(double r) const;
  double d2u(double r) const;
};

Superpotential superpotential_coulomb(int d, int l);
Superpotential superpotential_oscillator(int D, int L);

/// Partner potentials v_{+-} = (u')^2 -+ u''.
struct PartnerPotentials {
  std::function<double(double)> v_plus;
  std::function<double(double)> v_minus;
};
PartnerPotentials partner_potentials(const Superpotential& sp);

/// Ladder action a = d/dr + u' applied to a bosonic-sector state: annihilates
/// the ground state and maps excited states onto fermionic eigenstates.
/// The image is returned unnormalized together with its norm, so that
/// norm^2 = (shifted SUSY eigenvalue) is itself checkable.
struct LadderResult {
  RadialState state;  // unnormalized
  double norm;
};
LadderResult ladder_down(const Superpotential& sp, const RadialState& state);

/// Shifted spectra with the bosonic ground state at zero.
double susy_energy_coulomb(int d, int n, int l);                      // bosonic
double susy_energy_coulomb_fermionic(int d, int n_prime, int l_prime);
double susy_energy_oscillator(int D, int N, int L);                   // bosonic
double susy_energy_oscillator_fermionic(int D, int N_prime, int L_prime);

/// Sector eigenstates: tier 1 (fermionic) and tier 2 (second fermionic) share
/// the closed form of the bosonic states with the angular momentum raised by
/// the tier.  `base_angular` is the bosonic-stack angular momentum.
RadialState sector_state_coulomb(int d, int base_l, int tier, int n,
                                 const PhysicalScales& scales = {});
RadialState sector_state_oscillator(int D, int base_L, int tier, int N,
                                    const PhysicalScales& scales = {});

/// Stack correspondences: pure quantum-number rewrites identifying the lowest
/// states of two stacks with each other.
struct CoulombStack {
  int n;
  int l;
};
struct OscillatorStack {
  int N;
  int L;
};
enum class StackDirection { up, down };

/// (n, l) -> (n+1, l+1): bosonic to fermionic.
CoulombStack stack_correspondence(const CoulombStack& qn,
                                  StackDirection dir = StackDirection::up);
/// (N, L) -> (N+2, L+2): bosonic to second fermionic.
OscillatorStack stack_correspondence(const OscillatorStack& qn,
                                     StackDirection dir = StackDirection::up);

}  // namespace radmap::susy

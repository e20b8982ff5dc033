#include "radmap/susy.hpp"

#include <cmath>

#include "radmap/verify.hpp"

namespace radmap::susy {

double Superpotential::u(double r) const {
  if (!(r > 0.0)) throw std::domain_error("Superpotential: radius must be positive");
  return (kind == SystemKind::coulomb ? 0.5 * r / beta : 0.5 * r * r) -
         beta * std::log(r);
}

double Superpotential::du(double r) const {
  return (kind == SystemKind::coulomb ? 0.5 / beta : r) - beta / r;
}

double Superpotential::d2u(double r) const {
  return (kind == SystemKind::coulomb ? 0.0 : 1.0) + beta / (r * r);
}

Superpotential superpotential_coulomb(int d, int l) {
  CoulombQN{d, l + 1, l}.validate();
  return {SystemKind::coulomb, d, l, l + 0.5 * (d - 3) + 1.0};
}

Superpotential superpotential_oscillator(int D, int L) {
  OscillatorQN{D, L, L}.validate();
  return {SystemKind::oscillator, D, L, L + 0.5 * (D - 3) + 1.0};
}

PartnerPotentials partner_potentials(const Superpotential& sp) {
  auto plus = [sp](double r) { return sp.du(r) * sp.du(r) - sp.d2u(r); };
  auto minus = [sp](double r) { return sp.du(r) * sp.du(r) + sp.d2u(r); };
  return {std::move(plus), std::move(minus)};
}

LadderResult ladder_down(const Superpotential& sp, const RadialState& state) {
  if (state.kind != sp.kind || state.dim != sp.dim || state.angular != sp.angular)
    throw std::invalid_argument(
        "ladder_down: state does not belong to the bosonic sector of this "
        "superpotential (for D = 1 the two parity substacks carry independent "
        "supersymmetries and may not be mixed)");

  const double beta = sp.beta;
  const double barrier = beta * (beta - 1.0);
  const bool coulomb = sp.kind == SystemKind::coulomb;
  const double energy = state.energy;
  auto source = state.eval;

  // d2 of the image needs the third derivative of the source; the source is an
  // eigenstate, so f''' = V' f + (V - E) f' from its own radial equation.
  auto eval = [=](double r) -> RadialEval {
    const RadialEval f = source(r);
    const double du = sp.du(r);
    const double d2u = sp.d2u(r);
    const double d3u = -2.0 * beta / (r * r * r);
    const double v = barrier / (r * r) + (coulomb ? -1.0 / r : r * r);
    const double dv = -2.0 * barrier / (r * r * r) + (coulomb ? 1.0 / (r * r) : 2.0 * r);
    const double f3 = dv * f.value + (v - energy) * f.d1;
    return {f.d1 + du * f.value,
            f.d2 + du * f.d1 + d2u * f.value,
            f3 + du * f.d2 + 2.0 * d2u * f.d1 + d3u * f.value};
  };

  RadialState image{state.kind, state.dim, state.principal, state.angular + 1.0,
                    coulomb ? energy : energy - 2.0, std::move(eval)};
  if (!coulomb) image.principal = state.principal - 1.0;

  const double gamma = 0.5 * (sp.dim - 3.0);
  const auto rule =
      coulomb ? verify::rule_for(verify::DecayClass::exponential,
                                 1.0 / (state.principal + gamma), 2.0 * (beta + 1.0))
              : verify::rule_for(verify::DecayClass::gaussian);
  const double norm2 = verify::integrate_halfline(
      [&](double r) {
        const double v = image(r).value;
        return v * v;
      },
      rule);
  return {std::move(image), std::sqrt(std::max(norm2, 0.0))};
}

double susy_energy_coulomb(int d, int n, int l) {
  CoulombQN{d, n, l}.validate();
  const double gamma = 0.5 * (d - 3.0);
  const double shift = l + 1.0 + gamma;
  const double q = n + gamma;
  return 1.0 / (4.0 * shift * shift) - 1.0 / (4.0 * q * q);
}

double susy_energy_coulomb_fermionic(int d, int n_prime, int l_prime) {
  if (l_prime < 1)
    throw std::domain_error("susy_energy_coulomb_fermionic: fermionic stack needs l' >= 1");
  // same closed form as the bosonic sector: the shift constant sits at l'+gamma
  return susy_energy_coulomb(d, n_prime, l_prime - 1);
}

double susy_energy_oscillator(int D, int N, int L) {
  OscillatorQN{D, N, L}.validate();
  return 2.0 * (N - L);
}

double susy_energy_oscillator_fermionic(int D, int N_prime, int L_prime) {
  // The partner stack is a radial system in its own right; for D = 1 its
  // label L' = L+1 may leave the {0,1} parity range, so validate directly.
  if (D < 1) throw std::domain_error("susy_energy_oscillator_fermionic: D >= 1 required");
  if (L_prime < 1)
    throw std::domain_error("susy_energy_oscillator_fermionic: fermionic stack needs L' >= 1");
  if (N_prime < L_prime || (N_prime - L_prime) % 2 != 0)
    throw std::domain_error(
        "susy_energy_oscillator_fermionic: N' must run over L', L'+2, ...");
  return 2.0 * (N_prime - L_prime + 2.0);
}

RadialState sector_state_coulomb(int d, int base_l, int tier, int n,
                                 const PhysicalScales& scales) {
  if (tier < 0) throw std::domain_error("sector_state_coulomb: tier must be >= 0");
  return systems::coulomb_state({d, n, base_l + tier}, scales);
}

RadialState sector_state_oscillator(int D, int base_L, int tier, int N,
                                    const PhysicalScales& scales) {
  if (tier < 0) throw std::domain_error("sector_state_oscillator: tier must be >= 0");
  return systems::oscillator_state({D, N, base_L + tier}, scales);
}

CoulombStack stack_correspondence(const CoulombStack& qn, StackDirection dir) {
  if (dir == StackDirection::up) return {qn.n + 1, qn.l + 1};
  if (qn.n < 2 || qn.l < 1)
    throw std::domain_error("stack_correspondence: no preimage below the stack base");
  return {qn.n - 1, qn.l - 1};
}

OscillatorStack stack_correspondence(const OscillatorStack& qn, StackDirection dir) {
  if (dir == StackDirection::up) return {qn.N + 2, qn.L + 2};
  if (qn.N < 2 || qn.L < 2)
    throw std::domain_error("stack_correspondence: no preimage below the stack base");
  return {qn.N - 2, qn.L - 2};
}

}  // namespace radmap::susy

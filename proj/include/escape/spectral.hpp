#pragma once

// Spectral construction of the Robin kernel from the Hamiltonian eigenbasis:
// continuum states phi_k (plus the eta < 0 bound state chi), assembled by
// oscillatory quadrature over k. Deliberately slow-but-sure; it exists as an
// independent correctness oracle for the closed form and is not exported to
// the CLI.

#include "escape/types.hpp"

namespace escape {

struct SpectralOptions {
  double k_max = 0.0;        // 0 => max(40, 20/sqrt(t))
  double phase_budget = 3.0; // initial per-panel oscillation allowance
  double tol = 1e-8;         // doubling agreement target (absolute)
};

// Continuum eigenfunction, delta-normalized in k:
//   phi_k(x) = sqrt(2 / (pi (1 + k^2/eta^2))) [sin(kx) + (k/eta) cos(kx)],
// with the eta = 0 limit sqrt(2/pi) cos(kx). Requires k > 0, x >= 0.
double phi(double k, double eta, double x);

// Same, with the Dirichlet limit sqrt(2/pi) sin(kx).
double phi(double k, const RobinParameter& eta, double x);

// Bound state chi(x) = sqrt(2|eta|) exp(-|eta| x); requires eta < 0.
double chi(double eta, double x);

// Integral of phi_k(x) phi_k(x') exp(-i k^2 t / 2) over k > 0, plus the
// bound-state term chi(x) chi(x') exp(i eta^2 t / 2) when eta < 0. The k
// integral runs along [0, k_max] on the real axis and continues along the
// damped ray k_max + s e^{-i pi/4}, where the Gaussian phase factor decays;
// both pieces carry doubling self-checks and throw QuadratureError on
// disagreement above opts.tol.
ComplexAmplitude k_spectral(const RobinParameter& eta, const KernelQuery& q,
                            const SpectralOptions& opts = {});

}  // namespace escape

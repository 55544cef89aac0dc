#pragma once

// Closed-form single-particle propagators on the half line x >= 0 with a
// reflecting wall at the origin: free space, Neumann and Dirichlet images,
// the general Robin kernel, and its asymptotic expansions.
//
// Branch convention: sqrt(2it) is taken on the principal branch, so for
// t > 0 it equals sqrt(t) (1 + i).

#include "escape/types.hpp"

namespace escape {

// (2 pi i t)^{-1/2} exp(-(x-x')^2 / (2 i t)).
ComplexAmplitude k_free(const KernelQuery& q);

// K_free(x, x', t) + K_free(x, -x', t); derivative vanishes at x = 0.
ComplexAmplitude k_neumann(const KernelQuery& q);

// K_free(x, x', t) - K_free(x, -x', t); exactly zero at x = 0.
ComplexAmplitude k_dirichlet(const KernelQuery& q);

// General Robin kernel
//   K_eta = K_0(x,x',t) - eta erfc[(x+x'+i eta t)/sqrt(2it)]
//                             exp(eta (x+x') + i t eta^2/2),
// evaluated through the overflow-free scaled form
//   K_eta = K_0 - eta exp(i (x+x')^2 / (2t)) erfcx(z),
//   z = ((x+x'+eta t) + i (eta t - x-x')) / (2 sqrt(t)).
// The Dirichlet limit dispatches to k_dirichlet, eta = 0 to k_neumann.
ComplexAmplitude k_robin(const RobinParameter& eta, const KernelQuery& q);

// Large-t expansion: (|eta|-eta) exp(eta(x+x') + i t eta^2/2)
//   - (1+i)(1+x eta)(1+x' eta) / (sqrt(pi) eta^2 t^{3/2});
// the first term vanishes identically for eta > 0. Requires finite
// eta != 0 (the expansion has no eta = 0 limit at fixed large t).
ComplexAmplitude k_robin_large_t(const RobinParameter& eta, const KernelQuery& q);

// Expansion around the Neumann kernel, error O(eta^2):
//   order 0:  K_0
//   order 1:  K_0 - eta erfc(e^{-i pi/4} (x+x')/sqrt(2t))
ComplexAmplitude k_robin_small_eta(double eta, const KernelQuery& q, int order = 1);

// Expansion around the Dirichlet kernel.
//   eta -> +inf (error O(eta^-2)):  K_inf - (2i(x+x')/(eta t)) K_free(x,-x',t)
//   eta -> -inf (error O(eta^-1)):  K_inf + 2|eta| exp(-|eta|(x+x') + i t eta^2/2)
// order 0 drops the correction term in both cases.
ComplexAmplitude k_robin_large_eta(double eta, const KernelQuery& q, int order = 1);

}  // namespace escape

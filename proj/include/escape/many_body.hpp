#pragma once

// Bosonic/fermionic symmetrization and N-particle survival probabilities.
// Non-interacting particles factorize: the N-particle survival reduces to a
// permanent (bosons) or determinant (fermions) of single-particle overlap
// integrals, with the direct two-particle grid integration kept as an
// independent oracle for that factorization.

#include <span>
#include <vector>

#include "escape/state.hpp"
#include "escape/types.hpp"

namespace escape {

enum class Statistics { kBoson, kFermion };

struct OrbitalSet {
  std::vector<GaussianPacket> packets;
  Statistics statistics = Statistics::kBoson;
};

// N x N Hermitian matrix M_ij(t) = integral over (0,1) of
// psi_i*(x,t) psi_j(x,t), where psi_i evolves packet i under K_eta.
struct OverlapMatrix {
  int n = 0;
  std::vector<ComplexAmplitude> entries;  // row-major
  ComplexAmplitude& at(int i, int j) { return entries[i * n + j]; }
  const ComplexAmplitude& at(int i, int j) const { return entries[i * n + j]; }
};

// Permanent (bosons) or determinant (fermions) by explicit permutation sum;
// sized for N <= 6.
ComplexAmplitude permanent_or_determinant(const OverlapMatrix& m, Statistics stats);

// Symmetrized N-particle kernel, (1/sqrt(N!)) sum over permutations of the
// product of single-particle kernels, signed for fermions. Throws
// std::domain_error on mismatched lengths.
ComplexAmplitude symmetrized_kernel(const RobinParameter& eta, Statistics stats,
                                    std::span<const double> xs,
                                    std::span<const double> xs_prime, double t);

// Single-particle survival probability: integral of |Psi(x,t)|^2 over (0,1).
double survival_1(const GaussianPacket& psi0, const RobinParameter& eta, double t,
                  double tol = 1e-9);

// Full-line norm of the symmetrized initial state under the 1/sqrt(N!)
// convention: permanent/determinant of the analytic Gaussian overlaps. The
// paper-style 1/sqrt(2) normalization assumes this equals 1; the departure
// is the orbital-overlap correction and is reported, not hidden.
double symmetrized_initial_norm(const OrbitalSet& orbitals);

// 1 - per/det(M(0))/per/det(S): the initial probability mass already
// outside the unit interval (containment deficit of the symmetrized state).
double initial_containment_deficit(const OrbitalSet& orbitals,
                                   const RobinParameter& eta, double tol = 1e-9);

OverlapMatrix overlap_matrix(const OrbitalSet& orbitals, const RobinParameter& eta,
                             double t, double tol = 1e-9);

// P^(N)(t) via the overlap matrix, normalized by the symmetrized initial
// norm. Guards: N <= 6, and fermionic orbitals must be pairwise distinct.
double survival_N_overlap(const OrbitalSet& orbitals, const RobinParameter& eta,
                          double t, double tol = 1e-9);

// Direct two-particle oracle: builds Psi(x1, x2, t) from two single-particle
// evolutions and integrates |Psi|^2 over the unit square on a tensor
// quadrature grid. panels_per_axis = 0 picks a phase-based default.
double survival_2_grid(const OrbitalSet& orbitals, const RobinParameter& eta,
                       double t, int panels_per_axis = 0);

}  // namespace escape

#include "escape/many_body.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "escape/propagator.hpp"
#include "escape/quadrature.hpp"

namespace escape {
namespace {

constexpr int kMaxParticles = 6;

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Full-line overlap of two real Gaussian packets, in closed form.
double gaussian_overlap(const GaussianPacket& a, const GaussianPacket& b) {
  const double s2 = a.sigma * a.sigma + b.sigma * b.sigma;
  const double dq = a.q - b.q;
  return std::sqrt(2.0 * a.sigma * b.sigma / s2) * std::exp(-dq * dq / (2.0 * s2));
}

void validate_orbitals(const OrbitalSet& orbitals) {
  const int n = static_cast<int>(orbitals.packets.size());
  if (n < 1) throw std::domain_error("orbitals: at least one packet required");
  if (n > kMaxParticles) {
    throw std::invalid_argument("orbitals: N > 6 exceeds the cost guard");
  }
  for (const auto& p : orbitals.packets) validate_packet(p);
  if (orbitals.statistics == Statistics::kFermion) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (orbitals.packets[i].q == orbitals.packets[j].q &&
            orbitals.packets[i].sigma == orbitals.packets[j].sigma) {
          throw std::domain_error(
              "orbitals: identical fermionic orbitals (symmetrized state vanishes)");
        }
      }
    }
  }
}

struct UnitGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Quadrature nodes over (0,1) resolving the evolved states' oscillations:
// direct/image phases ~ (x+q)^2/(2t), the Robin wavenumber, and the packet
// width.
UnitGrid build_grid(const OrbitalSet& orbitals, const RobinParameter& eta, double t,
                    double budget) {
  double sigma_min = 1.0;
  double q_max = 0.0;
  for (const auto& p : orbitals.packets) {
    sigma_min = std::min(sigma_min, p.sigma);
    q_max = std::max(q_max, p.q);
  }
  const double abs_eta = eta.is_finite() ? std::abs(eta.eta()) : 0.0;
  const auto cumulative = [&](double x) {
    return (x + q_max) * (x + q_max) / (2.0 * t) + (abs_eta + 1.0 / sigma_min) * x;
  };
  const auto edges = quad::panels_from_cumulative(0.0, 1.0, cumulative, budget, 6);
  UnitGrid g;
  quad::gauss15_nodes_weights(edges, g.nodes, g.weights);
  return g;
}

UnitGrid uniform_grid(int panels) {
  std::vector<double> edges(panels + 1);
  for (int i = 0; i <= panels; ++i) edges[i] = static_cast<double>(i) / panels;
  UnitGrid g;
  quad::gauss15_nodes_weights(edges, g.nodes, g.weights);
  return g;
}

OverlapMatrix overlap_matrix_at(const OrbitalSet& orbitals,
                                const RobinParameter& eta, double t, double tol,
                                double budget) {
  const UnitGrid g = build_grid(orbitals, eta, t, budget);
  const int n = static_cast<int>(orbitals.packets.size());
  std::vector<std::vector<ComplexAmplitude>> psi(n);
  for (int i = 0; i < n; ++i) {
    psi[i] = evolve_at(orbitals.packets[i], eta, t, g.nodes, tol);
  }
  OverlapMatrix m{n, std::vector<ComplexAmplitude>(n * n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      ComplexAmplitude acc = 0.0;
      for (std::size_t p = 0; p < g.nodes.size(); ++p) {
        acc += g.weights[p] * std::conj(psi[i][p]) * psi[j][p];
      }
      if (i == j) acc = acc.real();  // diagonal entries are norms
      m.at(i, j) = acc;
      m.at(j, i) = std::conj(acc);
    }
  }
  return m;
}

}  // namespace

ComplexAmplitude permanent_or_determinant(const OverlapMatrix& m, Statistics stats) {
  const int n = m.n;
  if (n < 1 || n > kMaxParticles) {
    throw std::invalid_argument("permanent_or_determinant: N must be in [1, 6]");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ComplexAmplitude sum = 0.0;
  do {
    ComplexAmplitude prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
    if (stats == Statistics::kFermion) prod *= permutation_sign(perm);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

ComplexAmplitude symmetrized_kernel(const RobinParameter& eta, Statistics stats,
                                    std::span<const double> xs,
                                    std::span<const double> xs_prime, double t) {
  if (xs.size() != xs_prime.size()) {
    throw std::domain_error("symmetrized_kernel: mismatched coordinate counts");
  }
  const int n = static_cast<int>(xs.size());
  if (n < 1 || n > kMaxParticles) {
    throw std::invalid_argument("symmetrized_kernel: N must be in [1, 6]");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ComplexAmplitude sum = 0.0;
  do {
    ComplexAmplitude prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= k_robin(eta, {xs[i], xs_prime[perm[i]], t});
    if (stats == Statistics::kFermion) prod *= permutation_sign(perm);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / std::sqrt(factorial(n));
}

double symmetrized_initial_norm(const OrbitalSet& orbitals) {
  validate_orbitals(orbitals);
  const int n = static_cast<int>(orbitals.packets.size());
  OverlapMatrix s{n, std::vector<ComplexAmplitude>(n * n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s.at(i, j) = gaussian_overlap(orbitals.packets[i], orbitals.packets[j]);
    }
  }
  return permanent_or_determinant(s, orbitals.statistics).real();
}

OverlapMatrix overlap_matrix(const OrbitalSet& orbitals, const RobinParameter& eta,
                             double t, double tol) {
  validate_orbitals(orbitals);
  if (!(t > 0.0)) throw std::domain_error("overlap_matrix: t must be positive");
  OverlapMatrix coarse = overlap_matrix_at(orbitals, eta, t, tol, 3.0);
  OverlapMatrix fine = overlap_matrix_at(orbitals, eta, t, tol, 1.5);
  double delta = 0.0;
  for (std::size_t k = 0; k < fine.entries.size(); ++k) {
    delta = std::max(delta, std::abs(fine.entries[k] - coarse.entries[k]));
  }
  if (delta > 10.0 * tol) {
    coarse = std::move(fine);
    fine = overlap_matrix_at(orbitals, eta, t, tol, 0.75);
    delta = 0.0;
    for (std::size_t k = 0; k < fine.entries.size(); ++k) {
      delta = std::max(delta, std::abs(fine.entries[k] - coarse.entries[k]));
    }
    if (delta > 10.0 * tol) {
      throw QuadratureError("overlap_matrix: doubling check failed", t, delta);
    }
  }
  return fine;
}

double survival_1(const GaussianPacket& psi0, const RobinParameter& eta, double t,
                  double tol) {
  OrbitalSet one{{psi0}, Statistics::kBoson};
  const OverlapMatrix m = overlap_matrix(one, eta, t, tol);
  return m.at(0, 0).real();
}

double initial_containment_deficit(const OrbitalSet& orbitals,
                                   const RobinParameter& eta, double tol) {
  validate_orbitals(orbitals);
  (void)eta;
  const int n = static_cast<int>(orbitals.packets.size());
  OverlapMatrix m0{n, std::vector<ComplexAmplitude>(n * n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto& a = orbitals.packets[i];
      const auto& b = orbitals.packets[j];
      const auto integrand = [&](double x) {
        return ComplexAmplitude(packet_value(a, x) * packet_value(b, x), 0.0);
      };
      const double v =
          quad::integrate_smooth(integrand, 0.0, 1.0, tol, 16, 6, "containment")
              .value.real();
      m0.at(i, j) = v;
      m0.at(j, i) = v;
    }
  }
  const double p0 = permanent_or_determinant(m0, orbitals.statistics).real() /
                    symmetrized_initial_norm(orbitals);
  return 1.0 - p0;
}

double survival_N_overlap(const OrbitalSet& orbitals, const RobinParameter& eta,
                          double t, double tol) {
  const OverlapMatrix m = overlap_matrix(orbitals, eta, t, tol);
  const double norm0 = symmetrized_initial_norm(orbitals);
  const double p = permanent_or_determinant(m, orbitals.statistics).real() / norm0;
  if (p < -1e-6 || p > 1.0 + 1e-6) {
    throw QuadratureError("survival_N_overlap: probability outside [0, 1]", t,
                          std::abs(p - std::clamp(p, 0.0, 1.0)));
  }
  return p;
}

double survival_2_grid(const OrbitalSet& orbitals, const RobinParameter& eta,
                       double t, int panels_per_axis) {
  validate_orbitals(orbitals);
  if (orbitals.packets.size() != 2) {
    throw std::domain_error("survival_2_grid: exactly two orbitals required");
  }
  if (!(t > 0.0)) throw std::domain_error("survival_2_grid: t must be positive");
  const double sign = orbitals.statistics == Statistics::kFermion ? -1.0 : 1.0;
  const double norm0 = symmetrized_initial_norm(orbitals);

  const auto evaluate = [&](const UnitGrid& g) {
    const auto psi1 = evolve_at(orbitals.packets[0], eta, t, g.nodes, 1e-10);
    const auto psi2 = evolve_at(orbitals.packets[1], eta, t, g.nodes, 1e-10);
    double acc = 0.0;
    const std::size_t m = g.nodes.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const ComplexAmplitude amp = psi1[i] * psi2[j] + sign * psi1[j] * psi2[i];
        acc += g.weights[i] * g.weights[j] * 0.5 * std::norm(amp);
      }
    }
    return acc / norm0;
  };

  if (panels_per_axis > 0) {
    return evaluate(uniform_grid(panels_per_axis));
  }
  const double coarse = evaluate(build_grid(orbitals, eta, t, 3.0));
  const double fine = evaluate(build_grid(orbitals, eta, t, 1.5));
  if (std::abs(fine - coarse) > 1e-7) {
    throw QuadratureError("survival_2_grid: doubling check failed", t,
                          std::abs(fine - coarse));
  }
  return fine;
}

}  // namespace escape

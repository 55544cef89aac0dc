#pragma once

// Gaussian initial states and single-particle evolution by exact-kernel
// quadrature, plus the closed-form densities available for the Neumann and
// Dirichlet walls and the characteristic time scales of the escape problem.

#include <span>
#include <vector>

#include "escape/types.hpp"

namespace escape {

// Initial wave packet (pi sigma^2)^{-1/4} exp(-(x-q)^2 / (2 sigma^2)).
// Contained in the unit interval when q in (3 sigma, 1 - 3 sigma).
struct GaussianPacket {
  double q;
  double sigma;
};

struct SpatialGrid {
  double x_max = 0.0;
  int n_points = 0;
  double spacing() const { return x_max / (n_points - 1); }
  double node(int i) const { return x_max * i / (n_points - 1); }
  static SpatialGrid uniform(double x_max, double points_per_unit);
};

struct EvolvedState {
  SpatialGrid grid;
  std::vector<ComplexAmplitude> values;
  double t = 0.0;
  RobinParameter eta = RobinParameter::finite(0.0);
};

struct TimeScales {
  double t_w;  // wall-interaction onset, q sigma / 3
  double t_a;  // asymptotic-regime onset, q / pi
  double t_d;  // decay onset, (1 - q) sigma / 3
};

enum class MirrorBC { kNeumann, kDirichlet };

double packet_value(const GaussianPacket& psi0, double x);

// Throws std::domain_error unless sigma > 0 and q in (3 sigma, 1 - 3 sigma).
void validate_packet(const GaussianPacket& psi0);

// Psi(x, t) = integral of K_eta(x, x', t) Psi(x', 0) over the packet's
// support on the half line, evaluated at each requested x. Each node carries
// a quadrature doubling check at tolerance tol; failure throws
// QuadratureError with the offending t.
std::vector<ComplexAmplitude> evolve_at(const GaussianPacket& psi0,
                                        const RobinParameter& eta, double t,
                                        std::span<const double> xs,
                                        double tol = 1e-9);

EvolvedState evolve(const GaussianPacket& psi0, const RobinParameter& eta, double t,
                    const SpatialGrid& grid, double tol = 1e-9);

// |Psi(x,t)|^2 in closed form for the Neumann ("+") and Dirichlet ("-")
// walls, in the scaled variables tau = t/sigma^2, xi = x/sigma,
// theta = q/sigma.
double density_closed_form(const GaussianPacket& psi0, MirrorBC bc, double x,
                           double t);

TimeScales time_scales(const GaussianPacket& psi0);

// Estimated number of survival-probability oscillations, 3/(pi sigma) - 1.
double oscillation_count_estimate(const GaussianPacket& psi0);

// Integral of |Psi|^2 over the grid by composite Simpson.
double norm(const EvolvedState& state);

// Large-t closed-form survival for the two image walls:
//   P(t) ~ (2 sigma / (sqrt(pi) t)) [1 -/+ (t/(2q)) sin(2q/t)],
// "-" for Dirichlet (the 1/t order cancels, leaving t^-3), "+" for Neumann.
double survival_large_t_closed_form(const GaussianPacket& psi0, MirrorBC bc,
                                    double t);

}  // namespace escape

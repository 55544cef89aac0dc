#include "escape/state.hpp"

#include <algorithm>
#include <cmath>

#include "escape/parallel.hpp"
#include "escape/propagator.hpp"
#include "escape/quadrature.hpp"

namespace escape {
namespace {

constexpr double kPi = 3.14159265358979323846;
// Source support half width in units of sigma; the packet amplitude at the
// cut is exp(-36) of the peak, below every tolerance used downstream.
constexpr double kSupportSigmas = 8.5;

}  // namespace

SpatialGrid SpatialGrid::uniform(double x_max, double points_per_unit) {
  SpatialGrid g;
  g.x_max = x_max;
  g.n_points = std::max(9, static_cast<int>(std::ceil(x_max * points_per_unit)) + 1);
  return g;
}

double packet_value(const GaussianPacket& psi0, double x) {
  const double u = (x - psi0.q) / psi0.sigma;
  return std::pow(kPi * psi0.sigma * psi0.sigma, -0.25) * std::exp(-0.5 * u * u);
}

void validate_packet(const GaussianPacket& psi0) {
  if (!(psi0.sigma > 0.0)) throw std::domain_error("packet: sigma must be positive");
  if (!(psi0.q > 3.0 * psi0.sigma) || !(psi0.q < 1.0 - 3.0 * psi0.sigma)) {
    throw std::domain_error("packet: q must lie in (3 sigma, 1 - 3 sigma)");
  }
}

std::vector<ComplexAmplitude> evolve_at(const GaussianPacket& psi0,
                                        const RobinParameter& eta, double t,
                                        std::span<const double> xs, double tol) {
  validate_packet(psi0);
  if (!(t > 0.0)) throw std::domain_error("evolve: t must be positive");

  const double a = std::max(0.0, psi0.q - kSupportSigmas * psi0.sigma);
  const double b = psi0.q + kSupportSigmas * psi0.sigma;
  const double abs_eta = eta.is_finite() ? std::abs(eta.eta()) : 0.0;

  std::vector<ComplexAmplitude> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    const auto integrand = [&](double xp) {
      return k_robin(eta, {x, xp, t}) * packet_value(psi0, xp);
    };
    // Oscillation budget: direct phase (x'-x)^2/(2t), image phase
    // (x'+x)^2/(2t), the Robin term's wavenumber ~eta, and the packet scale.
    const auto cumulative = [&](double xp) {
      const double d = xp - x;
      const double signed_sq = d * std::abs(d);
      return (signed_sq + (xp + x) * (xp + x)) / (2.0 * t) +
             (abs_eta + 1.5 / psi0.sigma) * xp;
    };
    out[i] = quad::integrate(integrand, a, b, cumulative, tol, 3.0, 4, "evolve", t)
                 .value;
  });
  return out;
}

EvolvedState evolve(const GaussianPacket& psi0, const RobinParameter& eta, double t,
                    const SpatialGrid& grid, double tol) {
  std::vector<double> xs(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) xs[i] = grid.node(i);
  EvolvedState state{grid, evolve_at(psi0, eta, t, xs, tol), t, eta};
  return state;
}

double density_closed_form(const GaussianPacket& psi0, MirrorBC bc, double x,
                           double t) {
  validate_packet(psi0);
  if (!(t >= 0.0)) throw std::domain_error("density_closed_form: t must be >= 0");
  const double sigma = psi0.sigma;
  const double tau = t / (sigma * sigma);
  const double xi = x / sigma;
  const double theta = psi0.q / sigma;
  const double d = 1.0 + tau * tau;
  // Every exponent below is <= 0, so the hyperbolic-cosine term can be
  // assembled overflow-free as a pair of plain exponentials.
  const double c = (xi * xi + theta * theta) / d;
  const double a = 2.0 * xi * theta / d;
  const double b = 2.0 * tau * xi * theta / d;
  const double cosh_part = 0.5 * (std::exp(a - c) + std::exp(-a - c));
  const double cos_part = std::exp(-c) * std::cos(b);
  const double sign = bc == MirrorBC::kDirichlet ? -1.0 : 1.0;
  return 2.0 / (sigma * std::sqrt(kPi * d)) * (cosh_part + sign * cos_part);
}

TimeScales time_scales(const GaussianPacket& psi0) {
  validate_packet(psi0);
  return {psi0.q * psi0.sigma / 3.0, psi0.q / kPi, (1.0 - psi0.q) * psi0.sigma / 3.0};
}

double oscillation_count_estimate(const GaussianPacket& psi0) {
  return 3.0 / (kPi * psi0.sigma) - 1.0;
}

double norm(const EvolvedState& state) {
  const int n = state.grid.n_points;
  const double h = state.grid.spacing();
  std::vector<double> density(n);
  for (int i = 0; i < n; ++i) density[i] = std::norm(state.values[i]);
  // Composite Simpson; a trailing 3/8 block absorbs an odd interval count.
  double sum = 0.0;
  int limit = n - 1;
  if ((n - 1) % 2 != 0) limit = n - 4;
  for (int i = 0; i + 2 <= limit; i += 2) {
    sum += h / 3.0 * (density[i] + 4.0 * density[i + 1] + density[i + 2]);
  }
  if (limit != n - 1) {
    sum += 3.0 * h / 8.0 *
           (density[n - 4] + 3.0 * density[n - 3] + 3.0 * density[n - 2] +
            density[n - 1]);
  }
  return sum;
}

double survival_large_t_closed_form(const GaussianPacket& psi0, MirrorBC bc,
                                    double t) {
  validate_packet(psi0);
  if (!(t > 0.0)) throw std::domain_error("survival_large_t: t must be positive");
  const double q = psi0.q;
  const double sign = bc == MirrorBC::kDirichlet ? -1.0 : 1.0;
  const double bracket = 1.0 + sign * (t / (2.0 * q)) * std::sin(2.0 * q / t);
  return 2.0 * psi0.sigma / (std::sqrt(kPi) * t) * bracket;
}

}  // namespace escape

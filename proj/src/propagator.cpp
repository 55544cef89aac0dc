#include "escape/propagator.hpp"

#include <cmath>

#include "escape/cerf.hpp"

namespace escape {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kQuarterPi = 0.78539816339744830961;
constexpr double kInvSqrtPi = 0.56418958354775628695;

void validate(const KernelQuery& q) {
  if (!(q.t > 0.0) || !std::isfinite(q.t)) {
    throw std::domain_error("kernel: t must be positive");
  }
  if (!(q.x >= 0.0) || !(q.x_prime >= 0.0) || !std::isfinite(q.x) ||
      !std::isfinite(q.x_prime)) {
    throw std::domain_error("kernel: x, x' must be finite and >= 0");
  }
}

// Free kernel as a function of the displacement dx = x - x'.
ComplexAmplitude free_displaced(double dx, double t) {
  const double amplitude = 1.0 / std::sqrt(2.0 * kPi * t);
  const double phase = dx * dx / (2.0 * t) - kQuarterPi;
  return amplitude * ComplexAmplitude(std::cos(phase), std::sin(phase));
}

}  // namespace

ComplexAmplitude k_free(const KernelQuery& q) {
  validate(q);
  return free_displaced(q.x - q.x_prime, q.t);
}

ComplexAmplitude k_neumann(const KernelQuery& q) {
  validate(q);
  return free_displaced(q.x - q.x_prime, q.t) + free_displaced(q.x + q.x_prime, q.t);
}

ComplexAmplitude k_dirichlet(const KernelQuery& q) {
  validate(q);
  return free_displaced(q.x - q.x_prime, q.t) - free_displaced(q.x + q.x_prime, q.t);
}

ComplexAmplitude k_robin(const RobinParameter& eta, const KernelQuery& q) {
  if (eta.is_dirichlet_limit()) return k_dirichlet(q);
  const double e = eta.eta();
  if (e == 0.0) return k_neumann(q);
  validate(q);

  const double xs = q.x + q.x_prime;
  const double t = q.t;
  // z = (xs + i eta t)/sqrt(2it) with sqrt(2it) = sqrt(t)(1+i).
  const double half_inv_sqrt_t = 0.5 / std::sqrt(t);
  const ComplexAmplitude z((xs + e * t) * half_inv_sqrt_t,
                           (e * t - xs) * half_inv_sqrt_t);
  // The prefactor exp(eta xs + i t eta^2/2) combines with erfc's exponential
  // into a pure phase: eta xs + i t eta^2/2 = z^2 + i xs^2/(2t).
  const double phase = xs * xs / (2.0 * t);
  const ComplexAmplitude correction =
      e * ComplexAmplitude(std::cos(phase), std::sin(phase)) * erfcx_scaled(z);
  return k_neumann(q) - correction;
}

ComplexAmplitude k_robin_large_t(const RobinParameter& eta, const KernelQuery& q) {
  if (eta.is_dirichlet_limit() || eta.eta() == 0.0) {
    throw std::domain_error("k_robin_large_t: requires finite eta != 0");
  }
  validate(q);
  const double e = eta.eta();
  const double t = q.t;
  const double xs = q.x + q.x_prime;

  ComplexAmplitude bound = 0.0;
  if (e < 0.0) {
    const ComplexAmplitude expo(e * xs, 0.5 * t * e * e);
    bound = (std::abs(e) - e) * std::exp(expo);
  }
  const double c = (1.0 + q.x * e) * (1.0 + q.x_prime * e) /
                   (e * e * t * std::sqrt(t)) * kInvSqrtPi;
  return bound - ComplexAmplitude(c, c);
}

ComplexAmplitude k_robin_small_eta(double eta, const KernelQuery& q, int order) {
  validate(q);
  if (order < 0 || order > 1) {
    throw std::invalid_argument("k_robin_small_eta: order must be 0 or 1");
  }
  if (order == 0) return k_neumann(q);
  const double xs = q.x + q.x_prime;
  const double r = xs / std::sqrt(2.0 * q.t);
  // erfc(e^{-i pi/4} xs / sqrt(2t))
  const double c = std::sqrt(0.5);
  const ComplexAmplitude arg(r * c, -r * c);
  return k_neumann(q) - eta * erfc_complex(arg);
}

ComplexAmplitude k_robin_large_eta(double eta, const KernelQuery& q, int order) {
  validate(q);
  if (eta == 0.0) throw std::domain_error("k_robin_large_eta: eta must be nonzero");
  if (order < 0 || order > 1) {
    throw std::invalid_argument("k_robin_large_eta: order must be 0 or 1");
  }
  const ComplexAmplitude kd = k_dirichlet(q);
  if (order == 0) return kd;
  const double xs = q.x + q.x_prime;
  if (eta > 0.0) {
    const ComplexAmplitude image = free_displaced(xs, q.t);
    return kd - ComplexAmplitude(0.0, 2.0 * xs / (eta * q.t)) * image;
  }
  // eta -> -inf: the bound-state channel enters with a positive sign, as in
  // the large-t expansion's (|eta|-eta) factor and the spectral bound term.
  const double a = std::abs(eta);
  const ComplexAmplitude expo(-a * xs, 0.5 * q.t * eta * eta);
  return kd + 2.0 * a * std::exp(expo);
}

}  // namespace escape

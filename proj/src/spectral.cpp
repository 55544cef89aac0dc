#include "escape/spectral.hpp"

#include <cmath>

#include "escape/quadrature.hpp"

namespace escape {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoOverPi = 0.63661977236758134308;

void validate(const KernelQuery& q) {
  if (!(q.t > 0.0)) throw std::domain_error("k_spectral: t must be positive");
  if (!(q.x >= 0.0) || !(q.x_prime >= 0.0)) {
    throw std::domain_error("k_spectral: x, x' must be >= 0");
  }
}

}  // namespace

double phi(double k, double eta, double x) {
  if (!(k > 0.0)) throw std::domain_error("phi: k must be positive");
  if (!(x >= 0.0)) throw std::domain_error("phi: x must be >= 0");
  if (eta == 0.0) return std::sqrt(kTwoOverPi) * std::cos(k * x);
  const double ratio = k / eta;
  const double norm = std::sqrt(kTwoOverPi / (1.0 + ratio * ratio));
  return norm * (std::sin(k * x) + ratio * std::cos(k * x));
}

double phi(double k, const RobinParameter& eta, double x) {
  if (eta.is_dirichlet_limit()) {
    if (!(k > 0.0)) throw std::domain_error("phi: k must be positive");
    return std::sqrt(kTwoOverPi) * std::sin(k * x);
  }
  return phi(k, eta.eta(), x);
}

double chi(double eta, double x) {
  if (!(eta < 0.0)) throw std::domain_error("chi: eta must be negative");
  const double a = -eta;
  return std::sqrt(2.0 * a) * std::exp(-a * x);
}

ComplexAmplitude k_spectral(const RobinParameter& eta, const KernelQuery& q,
                            const SpectralOptions& opts) {
  validate(q);
  const double t = q.t;
  const double xs = q.x + q.x_prime;
  const double xm = q.x - q.x_prime;
  const double kc = opts.k_max > 0.0 ? opts.k_max : std::max(40.0, 20.0 / std::sqrt(t));

  // --- real-axis piece: phi_k(x) phi_k(x') e^{-i k^2 t/2} on [0, kc].
  const auto integrand = [&](double k) {
    const double amp = phi(k, eta, q.x) * phi(k, eta, q.x_prime);
    const double ph = -0.5 * k * k * t;
    return amp * ComplexAmplitude(std::cos(ph), std::sin(ph));
  };
  // Cumulative oscillation budget: Gaussian phase + trig wavenumber, plus a
  // Lorentzian term concentrating panels near k ~ |eta| where the
  // normalization factor varies on scale |eta|.
  const double abs_eta =
      (eta.is_finite() && eta.eta() != 0.0) ? std::abs(eta.eta()) : 0.0;
  const auto cumulative = [&](double k) {
    double c = 0.5 * t * k * k + (xs + 1.0) * k;
    if (abs_eta > 0.0) c += 6.0 * std::atan(k / abs_eta);
    return c;
  };
  const auto axis = quad::integrate(integrand, 0.0, kc, cumulative, 0.5 * opts.tol,
                                    opts.phase_budget, 5, "k_spectral axis", t);

  // --- damped tail: k = kc + s e^{-i pi/4}, where exp(-i k^2 t/2) decays as
  // exp(-t kc s/sqrt(2) - t s^2/2). The eigenfunction product is continued
  // through its exponential split
  //   phi phi' = [A e^{i xs k} + 1/A e^{-i xs k} + 2 cos(xm k)] / (2 pi),
  //   A = (k - i eta)/(k + i eta)   (A = 1 for eta = 0, A = -1 Dirichlet),
  // with each term assembled as exp(<combined exponent>) so intermediates
  // stay representable.
  const ComplexAmplitude rot(std::sqrt(0.5), -std::sqrt(0.5));  // e^{-i pi/4}
  const double beta = (t * kc - xs) / std::sqrt(2.0);
  double s_max = (-beta + std::sqrt(beta * beta + 84.0 * t)) / t;
  s_max = std::max(s_max, 1e-3);

  const auto tail_integrand = [&](double s) -> ComplexAmplitude {
    const ComplexAmplitude k = kc + s * rot;
    const ComplexAmplitude ik(-k.imag(), k.real());
    const ComplexAmplitude gauss = -0.5 * t * ik * k;  // -i k^2 t / 2
    ComplexAmplitude a_coef = 1.0;
    if (eta.is_dirichlet_limit()) {
      a_coef = -1.0;
    } else if (eta.eta() != 0.0) {
      const ComplexAmplitude ie(0.0, eta.eta());
      a_coef = (k - ie) / (k + ie);
    }
    const ComplexAmplitude plus = a_coef * std::exp(gauss + xs * ik);
    const ComplexAmplitude minus = std::exp(gauss - xs * ik) / a_coef;
    const ComplexAmplitude c1 = std::exp(gauss + xm * ik);
    const ComplexAmplitude c2 = std::exp(gauss - xm * ik);
    return (plus + minus + c1 + c2) / (2.0 * kPi);
  };
  const auto tail_cumulative = [&](double s) {
    return (xs + t * kc) * s + 0.5 * t * s * s;
  };
  auto tail = quad::integrate(tail_integrand, 0.0, s_max, tail_cumulative,
                              0.5 * opts.tol, opts.phase_budget, 5,
                              "k_spectral tail", t);

  ComplexAmplitude result = axis.value + rot * tail.value;

  if (eta.is_finite() && eta.eta() < 0.0) {
    const double e2t = 0.5 * eta.eta() * eta.eta() * t;
    result += chi(eta.eta(), q.x) * chi(eta.eta(), q.x_prime) *
              ComplexAmplitude(std::cos(e2t), std::sin(e2t));
  }
  return result;
}

}  // namespace escape

#include "escape/cerf.hpp"

#include <array>
#include <cmath>

namespace escape {
namespace {

#include "weideman48.inc"

constexpr double kInvSqrtPi = 0.56418958354775628695;

// exp(z^2) with the real part of z^2 formed as (x-y)(x+y); the factored form
// keeps the exponent accurate on the near-diagonal arguments produced by the
// propagator at large t, where x^2 - y^2 suffers catastrophic cancellation.
ComplexAmplitude exp_square(ComplexAmplitude z) {
  const double re = (z.real() - z.imag()) * (z.real() + z.imag());
  const double im = 2.0 * z.real() * z.imag();
  return std::exp(ComplexAmplitude(re, im));
}

// exp(-z^2), same cancellation-safe exponent.
ComplexAmplitude exp_msquare(ComplexAmplitude z) {
  const double re = (z.imag() - z.real()) * (z.imag() + z.real());
  const double im = -2.0 * z.real() * z.imag();
  return std::exp(ComplexAmplitude(re, im));
}

// 1/Gamma(n/2 + 1) for the Maclaurin series of w(z).
constexpr int kSeriesTerms = 48;
const std::array<double, kSeriesTerms>& inv_gamma_half() {
  static const std::array<double, kSeriesTerms> table = [] {
    std::array<double, kSeriesTerms> g{};
    for (int n = 0; n < kSeriesTerms; ++n) g[n] = 1.0 / std::tgamma(0.5 * n + 1.0);
    return g;
  }();
  return table;
}

// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im(z) >= 0.
// Region split: Maclaurin series near the origin, Weideman's rational
// approximation on the mid range, Laplace continued fraction outside.
ComplexAmplitude faddeeva_upper(ComplexAmplitude z) {
  const double r2 = z.real() * z.real() + z.imag() * z.imag();

  if (r2 <= 1.0) {
    const ComplexAmplitude iz(-z.imag(), z.real());
    const auto& g = inv_gamma_half();
    ComplexAmplitude sum = g[0];
    ComplexAmplitude izn = 1.0;
    for (int n = 1; n < kSeriesTerms; ++n) {
      izn *= iz;
      const ComplexAmplitude term = izn * g[n];
      sum += term;
      if (std::norm(term) < 1e-36 * std::norm(sum)) break;
    }
    return sum;
  }

  if (r2 < 7.5 * 7.5) {
    const ComplexAmplitude iz(-z.imag(), z.real());
    const ComplexAmplitude lmiz = kWeidemanL - iz;
    const ComplexAmplitude big_z = (kWeidemanL + iz) / lmiz;
    ComplexAmplitude p = kWeidemanCoeff[0];
    for (int j = 1; j < 48; ++j) p = p * big_z + kWeidemanCoeff[j];
    return 2.0 * p / (lmiz * lmiz) + kInvSqrtPi / lmiz;
  }

  const int depth = r2 < 900.0 ? 28 : (r2 < 22500.0 ? 14 : 8);
  ComplexAmplitude r = 0.0;
  for (int n = depth; n >= 1; --n) r = (0.5 * n) / (z - r);
  const ComplexAmplitude d = z - r;
  return ComplexAmplitude(0.0, kInvSqrtPi) / d;
}

bool finite(ComplexAmplitude z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

ComplexAmplitude erfcx_scaled(ComplexAmplitude z) {
  if (!finite(z)) throw std::domain_error("erfcx_scaled: non-finite argument");
  if (z.imag() < 0.0) return std::conj(erfcx_scaled(std::conj(z)));
  if (z.real() >= 0.0) {
    // erfcx(z) = w(iz); iz lands in the upper half plane.
    return faddeeva_upper(ComplexAmplitude(-z.imag(), z.real()));
  }
  // Left half plane: erfcx(z) = 2 exp(z^2) - erfcx(-z). exp(z^2) may
  // genuinely overflow when Re(z^2) is large; that overflow is the value's.
  return 2.0 * exp_square(z) - erfcx_scaled(-z);
}

ComplexAmplitude erfc_complex(ComplexAmplitude z) {
  if (!finite(z)) throw std::domain_error("erfc_complex: non-finite argument");
  if (z.imag() < 0.0) return std::conj(erfc_complex(std::conj(z)));
  if (z.real() < 0.0) return 2.0 - erfc_complex(-z);
  // First quadrant: erfc(z) = exp(-z^2) w(iz), no cancellation.
  const ComplexAmplitude w = faddeeva_upper(ComplexAmplitude(-z.imag(), z.real()));
  return exp_msquare(z) * w;
}

}  // namespace escape

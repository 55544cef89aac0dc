#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace escape {

// All quantities are in natural units (hbar = m = 1).
using ComplexAmplitude = std::complex<double>;

// Boundary-condition selector for the wall at x = 0: a finite Robin
// parameter eta, or the Dirichlet limit eta = +/-inf. The limit is kept as
// a distinct state rather than a large float so that exp(eta*(x+x')) never
// overflows and the eta = +/-inf table rows stay exact.
class RobinParameter {
 public:
  RobinParameter(double eta);  // implicit: finite eta  NOLINT
  static RobinParameter finite(double eta) { return RobinParameter(eta); }
  static RobinParameter dirichlet_limit();

  bool is_dirichlet_limit() const { return dirichlet_; }
  bool is_finite() const { return !dirichlet_; }
  // Finite value; throws std::logic_error when this is the Dirichlet limit.
  double eta() const;

  std::string label() const;  // "inf", "0", "2", "-2", ...

 private:
  RobinParameter() = default;
  double eta_ = 0.0;
  bool dirichlet_ = false;
};

// Evaluation point of a kernel K(x, x', t); x, x' >= 0 and t > 0.
struct KernelQuery {
  double x;
  double x_prime;
  double t;
};

// Thrown when an iterated quadrature fails its doubling self-check.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double t, double achieved)
      : std::runtime_error(what), t_(t), achieved_(achieved) {}
  double offending_t() const { return t_; }
  double achieved_error() const { return achieved_; }

 private:
  double t_;
  double achieved_;
};

}  // namespace escape

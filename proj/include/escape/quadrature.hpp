#pragma once

// Panel-based Gauss-Legendre quadrature for oscillatory complex integrands.
// Panels are placed from a caller-supplied cumulative phase function so that
// each panel carries a bounded amount of oscillation; convergence is
// established by doubling the panel count and comparing.

#include <functional>
#include <vector>

#include "escape/types.hpp"

namespace escape {
namespace quad {

struct Result {
  ComplexAmplitude value{};
  double error = 0.0;  // |last doubling difference|
  std::size_t evals = 0;
};

using Integrand = std::function<ComplexAmplitude(double)>;
// Nondecreasing function whose growth measures local oscillation + structure
// (radians-like units). Panels are spaced at equal increments of it.
using Cumulative = std::function<double(double)>;

// Breakpoints of [a, b] at equal increments of the cumulative function; at
// least min_panels panels, each panel holding <= budget units.
std::vector<double> panels_from_cumulative(double a, double b, const Cumulative& cum,
                                           double budget, int min_panels = 4);

// 15-point Gauss-Legendre sum over consecutive panels.
ComplexAmplitude gauss15_panels(const Integrand& f, const std::vector<double>& edges,
                                std::size_t* evals = nullptr);

// Explicit nodes and weights of the panelized 15-point rule, for callers
// that reuse one node set across several integrands.
void gauss15_nodes_weights(const std::vector<double>& edges,
                           std::vector<double>& nodes, std::vector<double>& weights);

// Panelized integral with doubling verification. Starts from panels built
// with the given budget, halves the budget until two successive levels agree
// within tol (absolute) or max_levels is exhausted; throws QuadratureError
// in the latter case. `context_t` only labels the error message.
Result integrate(const Integrand& f, double a, double b, const Cumulative& cum,
                 double tol, double budget = 3.0, int max_levels = 4,
                 const char* what = "quadrature", double context_t = 0.0);

// Convenience: smooth (non-oscillatory) integrand, uniform panels.
Result integrate_smooth(const Integrand& f, double a, double b, double tol,
                        int initial_panels = 8, int max_levels = 8,
                        const char* what = "quadrature", double context_t = 0.0);

}  // namespace quad
}  // namespace escape

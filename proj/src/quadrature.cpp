#include "escape/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace escape {
namespace quad {
namespace {

#include "gauss15.inc"

double bisect_cumulative(const Cumulative& cum, double lo, double hi, double target) {
  // cum is nondecreasing; plain bisection is plenty (panel edges need not be
  // placed precisely, only consistently).
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cum(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> panels_from_cumulative(double a, double b, const Cumulative& cum,
                                           double budget, int min_panels) {
  const double ca = cum(a);
  const double cb = cum(b);
  const double total = std::max(0.0, cb - ca);
  const int n = std::max(min_panels, static_cast<int>(std::ceil(total / budget)));
  std::vector<double> edges(n + 1);
  edges[0] = a;
  edges[n] = b;
  for (int j = 1; j < n; ++j) {
    edges[j] = bisect_cumulative(cum, edges[j - 1], b, ca + total * j / n);
  }
  return edges;
}

ComplexAmplitude gauss15_panels(const Integrand& f, const std::vector<double>& edges,
                                std::size_t* evals) {
  ComplexAmplitude acc = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    ComplexAmplitude panel = 0.0;
    for (int i = 0; i < 15; ++i) {
      panel += kGauss15Weight[i] * f(mid + half * kGauss15Node[i]);
    }
    acc += half * panel;
  }
  if (evals) *evals += 15 * (edges.size() - 1);
  return acc;
}

void gauss15_nodes_weights(const std::vector<double>& edges,
                           std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.clear();
  weights.clear();
  nodes.reserve(15 * (edges.size() - 1));
  weights.reserve(15 * (edges.size() - 1));
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    for (int i = 0; i < 15; ++i) {
      nodes.push_back(mid + half * kGauss15Node[i]);
      weights.push_back(half * kGauss15Weight[i]);
    }
  }
}

Result integrate(const Integrand& f, double a, double b, const Cumulative& cum,
                 double tol, double budget, int max_levels, const char* what,
                 double context_t) {
  Result res;
  std::vector<double> edges = panels_from_cumulative(a, b, cum, budget);
  ComplexAmplitude prev = gauss15_panels(f, edges, &res.evals);
  for (int level = 0; level < max_levels; ++level) {
    budget *= 0.5;
    edges = panels_from_cumulative(a, b, cum, budget);
    const ComplexAmplitude cur = gauss15_panels(f, edges, &res.evals);
    res.error = std::abs(cur - prev);
    res.value = cur;
    if (res.error <= tol) return res;
    prev = cur;
  }
  throw QuadratureError(std::string(what) + ": doubling check failed", context_t,
                        res.error);
}

Result integrate_smooth(const Integrand& f, double a, double b, double tol,
                        int initial_panels, int max_levels, const char* what,
                        double context_t) {
  Result res;
  int n = initial_panels;
  auto uniform = [&](int count) {
    std::vector<double> edges(count + 1);
    for (int j = 0; j <= count; ++j) edges[j] = a + (b - a) * j / count;
    return edges;
  };
  ComplexAmplitude prev = gauss15_panels(f, uniform(n), &res.evals);
  for (int level = 0; level < max_levels; ++level) {
    n *= 2;
    const ComplexAmplitude cur = gauss15_panels(f, uniform(n), &res.evals);
    res.error = std::abs(cur - prev);
    res.value = cur;
    if (res.error <= tol) return res;
    prev = cur;
  }
  throw QuadratureError(std::string(what) + ": doubling check failed", context_t,
                        res.error);
}

}  // namespace quad
}  // namespace escape

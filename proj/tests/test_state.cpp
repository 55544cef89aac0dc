#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "escape/quadrature.hpp"
#include "escape/state.hpp"

using escape::ComplexAmplitude;
using escape::GaussianPacket;
using escape::MirrorBC;
using escape::RobinParameter;
using escape::SpatialGrid;

namespace {

const GaussianPacket kPacket{0.6, 0.1};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}

}  // namespace

TEST_CASE("packet validation") {
  CHECK_THROWS_AS(escape::validate_packet({0.6, -0.1}), std::domain_error);
  CHECK_THROWS_AS(escape::validate_packet({0.2, 0.1}), std::domain_error);  // q < 3s
  CHECK_THROWS_AS(escape::validate_packet({0.8, 0.1}), std::domain_error);
  CHECK_NOTHROW(escape::validate_packet(kPacket));
}

TEST_CASE("time scales and oscillation estimate") {
  const auto ts = escape::time_scales(kPacket);
  CHECK(ts.t_w == doctest::Approx(0.02).epsilon(1e-14));
  CHECK(ts.t_a == doctest::Approx(0.1909859317).epsilon(1e-9));
  CHECK(ts.t_d == doctest::Approx(0.04 / 3.0).epsilon(1e-12));  // ~0.01333

  CHECK(escape::oscillation_count_estimate(kPacket) ==
        doctest::Approx(8.5493).epsilon(1e-4));
  CHECK(escape::oscillation_count_estimate({0.6, 0.05}) ==
        doctest::Approx(18.0986).epsilon(1e-4));
}

TEST_CASE("closed-form density boundary behavior") {
  // Dirichlet density vanishes at the wall; Neumann has zero slope there.
  for (double t : {0.01, 0.1, 1.0}) {
    CHECK(escape::density_closed_form(kPacket, MirrorBC::kDirichlet, 0.0, t) ==
          doctest::Approx(0.0).epsilon(1e-300));
    const double h = 1e-5;
    const auto rho = [&](double x) {
      return escape::density_closed_form(kPacket, MirrorBC::kNeumann, x, t);
    };
    const double slope = (-25.0 / 12.0 * rho(0.0) + 4.0 * rho(h) - 3.0 * rho(2 * h) +
                          4.0 / 3.0 * rho(3 * h) - 0.25 * rho(4 * h)) /
                         h;
    CHECK(std::abs(slope) < 1e-6 * std::max(1.0, rho(0.0)));
  }
  // t = 0 reduces to |psi0|^2 plus an exponentially small image
  const double rho0 = escape::density_closed_form(kPacket, MirrorBC::kNeumann, 0.6, 0.0);
  const double psi = escape::packet_value(kPacket, 0.6);
  CHECK(rho0 == doctest::Approx(psi * psi).epsilon(1e-12));
}

TEST_CASE("quadrature evolution matches the closed-form density") {
  const double t = 0.1;
  const auto xs = linspace(0.0, 1.6, 81);
  for (auto bc : {MirrorBC::kNeumann, MirrorBC::kDirichlet}) {
    const RobinParameter eta = bc == MirrorBC::kNeumann
                                   ? RobinParameter::finite(0.0)
                                   : RobinParameter::dirichlet_limit();
    const auto psi = escape::evolve_at(kPacket, eta, t, xs);
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double got = std::norm(psi[i]);
      const double want = escape::density_closed_form(kPacket, bc, xs[i], t);
      worst = std::max(worst, std::abs(got - want));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("short-time delta property of evolution") {
  // the physical distance to the initial state scales like t/sigma^2:
  // ~1.2e-3 at t = 1e-5 and ~1.2e-4 at t = 1e-6 for sigma = 0.1
  const double t = 1e-6;
  const auto xs = linspace(0.45, 0.75, 3);
  const auto psi = escape::evolve_at(kPacket, 0.0, t, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(std::abs(psi[i] - escape::packet_value(kPacket, xs[i])) < 1e-3);
  }
}

TEST_CASE("free-spreading regime: all boundary conditions coincide") {
  const double t = 0.8 * escape::time_scales(kPacket).t_w;
  const auto xs = linspace(0.05, 1.2, 24);
  const auto a = escape::evolve_at(kPacket, RobinParameter::dirichlet_limit(), t, xs);
  const auto b = escape::evolve_at(kPacket, 0.0, t, xs);
  const auto c = escape::evolve_at(kPacket, 2.0, t, xs);
  const auto d = escape::evolve_at(kPacket, -2.0, t, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(std::abs(std::norm(a[i]) - std::norm(b[i])) < 1e-3);
    CHECK(std::abs(std::norm(c[i]) - std::norm(d[i])) < 1e-3);
    CHECK(std::abs(std::norm(a[i]) - std::norm(c[i])) < 1e-3);
  }
}

TEST_CASE("interference regime has oscillations; asymptotic regime does not") {
  const auto count_maxima = [&](double t) {
    const auto xs = linspace(0.01, 0.99, 197);
    const auto psi =
        escape::evolve_at(kPacket, RobinParameter::dirichlet_limit(), t, xs);
    std::vector<double> rho(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) rho[i] = std::norm(psi[i]);
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < rho.size(); ++i) {
      if (rho[i] > rho[i - 1] && rho[i] > rho[i + 1]) ++maxima;
    }
    return maxima;
  };
  // wall-interference wavelength: the density's cosine argument spans
  // ~2 tau xi theta/(1+tau^2) ~ 23x rad at t = 0.05, ~12x rad at t = 0.1
  CHECK(count_maxima(0.05) >= 3);
  CHECK(count_maxima(0.1) >= 2);                  // t_w < t < t_a
  CHECK(count_maxima(2.0 * 0.1909859) <= 1);      // t > t_a
}

TEST_CASE("norm: containment at t = 0 and unitarity under evolution") {
  // t = 0: assemble the state directly from the packet
  SpatialGrid grid = SpatialGrid::uniform(2.0, 2000.0);
  escape::EvolvedState initial{grid, {}, 0.0, RobinParameter::finite(0.0)};
  initial.values.resize(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    initial.values[i] = escape::packet_value(kPacket, grid.node(i));
  }
  const double n0 = escape::norm(initial);
  CHECK(n0 > 0.997);
  CHECK(n0 < 1.0 + 1e-9);

  // t > 0: norm on a domain sized for the free spread
  const double t = 0.3;
  for (double eta : {2.0, -2.0}) {
    const double x_max = 1.0 + 5.0 * kPacket.sigma + 4.0 * t / kPacket.sigma;
    SpatialGrid g = SpatialGrid::uniform(x_max, 200.0);
    const auto state = escape::evolve(kPacket, eta, t, g, 1e-8);
    CHECK(std::abs(escape::norm(state) - 1.0) < 1e-3);
  }
}

TEST_CASE("eta < 0: the density sticks to the wall as a bound-state residue") {
  const double eta = -2.0;
  const double t = 5.0;
  // amplitude <chi|psi0> of the bound channel
  const auto chi = [&](double x) { return std::sqrt(2.0 * 2.0) * std::exp(-2.0 * x); };
  const auto inner = [&](double xp) {
    return ComplexAmplitude(chi(xp) * escape::packet_value(kPacket, xp), 0.0);
  };
  const double a = escape::quad::integrate_smooth(inner, 0.0, 1.4, 1e-11).value.real();
  const auto xs = std::vector<double>{0.05, 0.2};
  const auto psi = escape::evolve_at(kPacket, eta, t, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double residue = a * a * chi(xs[i]) * chi(xs[i]);
    CHECK(std::norm(psi[i]) == doctest::Approx(residue).epsilon(0.2));
  }
}

TEST_CASE("grid helpers") {
  const SpatialGrid g = SpatialGrid::uniform(2.0, 1000.0);
  CHECK(g.n_points >= 2001);
  CHECK(g.node(0) == 0.0);
  CHECK(g.node(g.n_points - 1) == doctest::Approx(2.0).epsilon(1e-15));
}

#include <doctest.h>

#include "mslit/fourier.hpp"
#include "mslit/validate.hpp"

using namespace mslit;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("grid coordinate mapping") {
  Grid g = make_grid(10.0, 4);
  CHECK(g.spacing() == doctest::Approx(2.5));
  CHECK(g.coord(0) == doctest::Approx(-5.0));
  CHECK(g.coord(1) == doctest::Approx(-2.5));
  CHECK(g.coord(2) == doctest::Approx(0.0));
  CHECK(g.coord(3) == doctest::Approx(2.5));

  Grid f = make_grid(2.0 * kPi, 1 << 10);
  CHECK(f.conjugate_spacing() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f.conjugate().conjugate() == f);

  CHECK_THROWS_AS(make_grid(0.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(-1.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1.0, 1), std::invalid_argument);
}

TEST_CASE("norm_sq") {
  Grid g{1 << 12, 64.0};
  Wavefunction zero = make_wavefunction(g);
  CHECK(norm_sq(zero) == 0.0);

  Wavefunction rect = make_wavefunction(g);
  for (int j = 0; j < g.n_points; ++j)
    if (std::abs(g.coord(j)) < 0.5) rect.values[j] = 1.0;
  CHECK(norm_sq(rect) == doctest::Approx(1.0).epsilon(2.0 * g.spacing()));
}

TEST_CASE("fourier maps a Gaussian to itself") {
  Grid g{1 << 12, 64.0};
  Wavefunction psi = make_wavefunction(g);
  for (int j = 0; j < g.n_points; ++j) {
    const double x = g.coord(j);
    psi.values[j] = std::exp(-0.5 * x * x);
  }
  Wavefunction tilde = fourier(psi);
  CHECK(tilde.space == Space::Momentum);
  double worst = 0.0;
  for (int m = 0; m < g.n_points; ++m) {
    const double k = tilde.grid.coord(m);
    worst = std::max(worst,
                     std::abs(tilde.values[m] - Complex{std::exp(-0.5 * k * k),
                                                        0.0}));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("fourier of a rect has the sinc modulus") {
  Grid g{1 << 18, 64.0};
  const double a = 1.0;
  Wavefunction psi = make_wavefunction(g);
  for (int j = 0; j < g.n_points; ++j)
    if (g.coord(j) >= -0.5 * a && g.coord(j) < 0.5 * a) psi.values[j] = 1.0;
  Wavefunction tilde = fourier(psi);
  const double peak = std::abs(tilde.values[g.n_points / 2]);
  double worst = 0.0;
  for (int m = 0; m < g.n_points; ++m) {
    const double k = tilde.grid.coord(m);
    if (std::abs(k) > 10.0) continue;
    const double u = 0.5 * a * k;
    const double ref = std::abs(u) < 1e-12 ? 1.0 : std::sin(u) / u;
    worst = std::max(worst, std::abs(std::abs(tilde.values[m]) / peak -
                                     std::abs(ref)));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("finite spike comb transforms to a comb spaced 2 pi / T") {
  Grid g{1 << 14, 64.0};
  const double T = 1.0;
  Wavefunction psi = make_wavefunction(g);
  for (int n = -4; n < 4; ++n) {
    const int j =
        static_cast<int>(std::lround((n * T - g.coord(0)) / g.spacing()));
    psi.values[j] = 1.0;
  }
  Wavefunction tilde = fourier(psi);
  // collect local maxima of the momentum density above half the peak
  std::vector<double> centers;
  double peak = 0.0;
  for (const Complex& v : tilde.values) peak = std::max(peak, std::norm(v));
  for (int m = 1; m + 1 < g.n_points; ++m) {
    const double d = std::norm(tilde.values[m]);
    if (d > 0.5 * peak && d >= std::norm(tilde.values[m - 1]) &&
        d > std::norm(tilde.values[m + 1]))
      centers.push_back(tilde.grid.coord(m));
  }
  REQUIRE(centers.size() > 3);
  for (size_t i = 1; i < centers.size(); ++i)
    CHECK(centers[i] - centers[i - 1] ==
          doctest::Approx(2.0 * kPi / T).epsilon(1e-6));
}

TEST_CASE("inverse_fourier") {
  Grid g{1 << 12, 64.0};
  Wavefunction psi = random_state(g, 42);
  CHECK(distance(inverse_fourier(fourier(psi)), psi) < 1e-12);

  Wavefunction gauss = make_wavefunction(g.conjugate(), Space::Momentum);
  for (int m = 0; m < g.n_points; ++m) {
    const double k = gauss.grid.coord(m);
    gauss.values[m] = std::exp(-0.5 * k * k);
  }
  Wavefunction back = inverse_fourier(gauss);
  CHECK(back.space == Space::Position);
  double worst = 0.0;
  for (int j = 0; j < g.n_points; ++j)
    worst = std::max(worst, std::abs(back.values[j] -
                                     Complex{std::exp(-0.5 * std::pow(
                                                 g.coord(j), 2)),
                                             0.0}));
  CHECK(worst < 1e-10);

  CHECK_THROWS_AS(fourier(gauss), std::invalid_argument);
  CHECK_THROWS_AS(inverse_fourier(psi), std::invalid_argument);
}

TEST_CASE("inverse of an analytic sinc profile recovers the rect") {
  Grid g{1 << 20, 16.0};
  const double a = 1.0;
  Grid k = g.conjugate();
  Wavefunction sinc_profile = make_wavefunction(k, Space::Momentum);
  for (int m = 0; m < k.n_points; ++m) {
    const double km = k.coord(m);
    const double u = 0.5 * a * km;
    const double s = std::abs(u) < 1e-12 ? 1.0 : std::sin(u) / u;
    // half-open sampling of the rect shifts its center by -dx/2
    sinc_profile.values[m] = a / std::sqrt(2.0 * kPi) * s *
                             std::polar(1.0, -0.5 * km * g.spacing());
  }
  Wavefunction back = inverse_fourier(sinc_profile);
  Wavefunction rect = make_wavefunction(g);
  for (int j = 0; j < g.n_points; ++j)
    if (g.coord(j) >= -0.5 * a && g.coord(j) < 0.5 * a) rect.values[j] = 1.0;
  CHECK(distance(back, rect) < 1e-3);
}

TEST_CASE("parity") {
  Grid g{1 << 12, 64.0};
  Wavefunction even = make_wavefunction(g);
  for (int j = 0; j < g.n_points; ++j)
    even.values[j] = std::exp(-std::pow(g.coord(j), 2));
  CHECK(distance(parity(even), even) < 1e-12);

  const double c = 2.0, a = 0.5;
  Wavefunction rect = make_wavefunction(g);
  for (int j = 0; j < g.n_points; ++j)
    if (std::abs(g.coord(j) - c) < 0.5 * a) rect.values[j] = 1.0;
  Wavefunction mirrored = parity(rect);
  for (int j = 0; j < g.n_points; ++j) {
    const bool inside = std::abs(g.coord(j) + c) < 0.5 * a;
    CHECK(mirrored.values[j] == Complex{inside ? 1.0 : 0.0, 0.0});
  }

  Wavefunction psi = random_state(g, 7);
  Wavefunction tilde = fourier(psi);
  tilde.space = Space::Position;  // F is grid-shape independent; apply twice
  Wavefunction twice = fourier(tilde);
  twice.grid = g;  // doubly conjugated extent can differ in the last bit
  twice.space = Space::Position;
  CHECK(distance(twice, parity(psi)) < 1e-10);
}

TEST_CASE("fidelity") {
  Grid g{1 << 10, 32.0};
  Wavefunction psi = random_state(g, 3);
  Fidelity self = fidelity(psi, psi);
  CHECK(self.l2_distance == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(self.overlap_sq == doctest::Approx(1.0).epsilon(1e-12));

  Wavefunction a = make_wavefunction(g), b = make_wavefunction(g);
  a.values[10] = 1.0;
  b.values[20] = 1.0;
  a = normalized(a);
  b = normalized(b);
  Fidelity f = fidelity(a, b);
  CHECK(f.l2_distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(f.overlap_sq == doctest::Approx(0.0).epsilon(1e-14));

  Wavefunction other = random_state(Grid{1 << 10, 16.0}, 3);
  CHECK_THROWS_AS(fidelity(psi, other), std::invalid_argument);
}

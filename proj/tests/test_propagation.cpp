#include <doctest.h>

#include "mslit/pipeline.hpp"
#include "mslit/projectors.hpp"
#include "mslit/propagation.hpp"

using namespace mslit;

namespace {

constexpr double kPi = std::numbers::pi;

// Standard bench geometry: 0.25 mm slit period, 1.3 mm wire spacing at
// L = 0.55 m, wavelength from the consistency condition.
struct Bench {
  double T = 0.25e-3;
  double spacing = 1.3e-3;
  double L = 0.55;
  double lambda = infer_wavelength(0.55, 0.25e-3, 1.3e-3);
  OpticalGeometry geo{L, lambda};
};

Wavefunction two_slit_state(const Grid& g, double T, double a) {
  Wavefunction psi = make_wavefunction(g);
  for (int j = 0; j < g.n_points; ++j) {
    const double x = g.coord(j);
    if ((x >= 0.5 * T - 0.5 * a && x < 0.5 * T + 0.5 * a) ||
        (x >= -0.5 * T - 0.5 * a && x < -0.5 * T + 0.5 * a))
      psi.values[j] = 1.0;
  }
  return normalized(psi);
}

double aligned_deviation(const Wavefunction& a, const Wavefunction& b) {
  const Complex ov = inner(a, b) / std::sqrt(norm_sq(a) * norm_sq(b));
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(ov)));
}

}  // namespace

TEST_CASE("wavelength inference") {
  Bench b;
  CHECK(b.lambda == doctest::Approx(5.909e-7).epsilon(1e-3));
  CHECK(infer_wavelength(2.0 * b.L, b.T, b.spacing) ==
        doctest::Approx(0.5 * b.lambda));
  CHECK(infer_wavelength(1.0, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(infer_wavelength(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("screen and momentum coordinate maps") {
  Bench b;
  // wire spacing maps to the momentum-cell spacing 2 pi / T
  IntervalSet spacing = IntervalSet::single(0.0, b.spacing);
  IntervalSet cell = screen_to_momentum(spacing, b.geo);
  CHECK(cell.measure() == doctest::Approx(2.0 * kPi / b.T).epsilon(1e-12));

  CHECK(screen_to_momentum(IntervalSet(), b.geo).empty());

  IntervalSet s({{-1.0e-3, 2.0e-3}, {3.0e-3, 4.0e-3}});
  IntervalSet round = momentum_to_screen(screen_to_momentum(s, b.geo), b.geo);
  for (size_t i = 0; i < round.intervals().size(); ++i) {
    CHECK(round.intervals()[i].lo ==
          doctest::Approx(s.intervals()[i].lo).epsilon(1e-12));
    CHECK(round.intervals()[i].hi ==
          doctest::Approx(s.intervals()[i].hi).epsilon(1e-12));
  }
}

TEST_CASE("fraunhofer far field of the double slit") {
  Bench b;
  const double a = 0.23 * b.T;
  Grid g{1 << 14, 64.0 * b.T};
  Wavefunction psi = two_slit_state(g, b.T, a);
  Wavefunction screen = fraunhofer(psi, b.geo);

  CHECK(norm_sq(screen) == doctest::Approx(1.0).epsilon(1e-6));

  // first intensity zero at x = L lambda / (2T), half the wire spacing
  const double x_zero = b.L * b.lambda / (2.0 * b.T);
  CHECK(x_zero == doctest::Approx(0.65e-3).epsilon(1e-6));
  const int m_zero = static_cast<int>(
      std::lround((x_zero - screen.grid.coord(0)) / screen.grid.spacing()));
  double peak = 0.0;
  for (const Complex& v : screen.values) peak = std::max(peak, std::norm(v));
  CHECK(std::norm(screen.values[m_zero]) < 1e-6 * peak);

  // screen-region probability equals the momentum-set probability
  IntervalSet Z = IntervalSet::single(0.0, 2.0 * kPi / b.T);
  Wavefunction tilde = fourier(psi);
  std::vector<double> zmask = realize(Z, tilde.grid);
  double mom_mass = 0.0;
  for (int m = 0; m < g.n_points; ++m)
    mom_mass += zmask[m] * std::norm(tilde.values[m]);
  mom_mass *= tilde.grid.spacing();
  std::vector<double> smask =
      realize(momentum_to_screen(Z, b.geo), screen.grid);
  double screen_mass = 0.0;
  for (int m = 0; m < g.n_points; ++m)
    screen_mass += smask[m] * std::norm(screen.values[m]);
  screen_mass *= screen.grid.spacing();
  CHECK(screen_mass == doctest::Approx(mom_mass).epsilon(1e-3));
}

TEST_CASE("fresnel oracle vs fraunhofer") {
  Bench b;
  const double a = 0.23 * b.T;
  Grid g{1 << 14, 48.0 * b.T};
  Wavefunction psi = two_slit_state(g, b.T, a);

  Wavefunction exact = fresnel(psi, b.geo);
  CHECK(norm_sq(exact) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(distance(exact, fresnel_serial(psi, b.geo)) == 0.0);

  Wavefunction far = fraunhofer(psi, b.geo);
  const double dev_bench = aligned_deviation(exact, far);
  CHECK(dev_bench < 0.05);

  OpticalGeometry near{b.L / 100.0, b.lambda};
  const double dev_near = aligned_deviation(fresnel(psi, near),
                                            fraunhofer(psi, near));
  CHECK(dev_near > 10.0 * dev_bench);
}

TEST_CASE("grating at the fresnel screen matches the momentum projector") {
  Bench b;
  const double a = 0.23 * b.T;
  Grid g{1 << 14, 48.0 * b.T};
  Wavefunction psi = two_slit_state(g, b.T, a);
  GratingSpec wires{6, 0.127e-3, b.spacing, 0.0};

  Wavefunction screen = fresnel(psi, b.geo);
  std::vector<double> blocked = realize(grating_wires(wires), screen.grid);
  double masked = 0.0;
  for (int m = 0; m < g.n_points; ++m)
    if (blocked[m] == 0.0) masked += std::norm(screen.values[m]);
  masked *= screen.grid.spacing();
  const double physical = masked / norm_sq(screen);

  Wavefunction projected = project_momentum(
      psi, [&] {
        std::vector<double> mask(g.n_points, 1.0);
        std::vector<double> bm = realize(
            screen_to_momentum(grating_wires(wires), b.geo), g.conjugate());
        for (int m = 0; m < g.n_points; ++m) mask[m] = 1.0 - bm[m];
        return mask;
      }());
  CHECK(physical == doctest::Approx(norm_sq(projected)).epsilon(0.01));
}

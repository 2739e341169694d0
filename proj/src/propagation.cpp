#include "mslit/propagation.hpp"

namespace mslit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_geo(const OpticalGeometry& geo) {
  if (!(geo.L > 0.0) || !(geo.lambda > 0.0))
    throw std::invalid_argument("optical geometry needs positive L and lambda");
}

// Shared Fresnel quadrature body. Each screen point is an independent sum
// over the support samples of psi0, accumulated in ascending index order so
// the parallel and serial versions produce identical bits.
Wavefunction fresnel_impl(const Wavefunction& psi0, const OpticalGeometry& geo,
                          bool parallel) {
  if (psi0.space != Space::Position)
    throw std::invalid_argument("fresnel: need a position-space input");
  check_geo(geo);
  const double s = geo.scale();
  const int n = psi0.grid.n_points;
  const double dx = psi0.grid.spacing();

  std::vector<double> xs;     // support sample coordinates
  std::vector<Complex> vals;  // support sample values
  xs.reserve(n);
  vals.reserve(n);
  for (int j = 0; j < n; ++j) {
    if (psi0.values[j] != Complex{0.0, 0.0}) {
      xs.push_back(psi0.grid.coord(j));
      vals.push_back(psi0.values[j]);
    }
  }

  Wavefunction out = make_wavefunction(natural_screen_grid(psi0.grid, geo));
  const Complex front =
      std::sqrt(s / (2.0 * kPi)) * std::polar(1.0, -kPi / 4.0) * dx;
  const int m_support = static_cast<int>(xs.size());

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < n; ++i) {
    const double x = out.grid.coord(i);
    Complex acc{0.0, 0.0};
    for (int j = 0; j < m_support; ++j) {
      const double d = x - xs[j];
      acc += vals[j] * std::polar(1.0, 0.5 * s * d * d);
    }
    out.values[i] = front * acc;
  }
  return out;
}

}  // namespace

double infer_wavelength(double L, double period, double wire_spacing) {
  if (!(L > 0.0) || !(period > 0.0) || !(wire_spacing > 0.0))
    throw std::invalid_argument("infer_wavelength: lengths must be positive");
  return wire_spacing * period / L;
}

double fraunhofer_indicator(double half_span, const OpticalGeometry& geo) {
  check_geo(geo);
  return half_span * half_span * kPi / (geo.L * geo.lambda);
}

IntervalSet screen_to_momentum(const IntervalSet& s,
                               const OpticalGeometry& geo) {
  check_geo(geo);
  return s.scaled(geo.scale());
}

IntervalSet momentum_to_screen(const IntervalSet& s,
                               const OpticalGeometry& geo) {
  check_geo(geo);
  return s.scaled(1.0 / geo.scale());
}

Grid natural_screen_grid(const Grid& aperture_grid, const OpticalGeometry& geo) {
  Grid k = aperture_grid.conjugate();
  return Grid{k.n_points, k.extent / geo.scale()};
}

Wavefunction fraunhofer(const Wavefunction& psi0, const OpticalGeometry& geo) {
  if (psi0.space != Space::Position)
    throw std::invalid_argument("fraunhofer: need a position-space input");
  check_geo(geo);
  const double s = geo.scale();
  Wavefunction tilde = fourier(psi0);
  Wavefunction out = make_wavefunction(natural_screen_grid(psi0.grid, geo));
  const Complex corner = std::sqrt(s) * std::polar(1.0, -kPi / 4.0);
  for (int m = 0; m < out.grid.n_points; ++m) {
    const double x = out.grid.coord(m);  // x_m = k_m / s
    out.values[m] =
        corner * std::polar(1.0, 0.5 * s * x * x) * tilde.values[m];
  }
  return out;
}

Wavefunction fresnel(const Wavefunction& psi0, const OpticalGeometry& geo) {
  return fresnel_impl(psi0, geo, true);
}

Wavefunction fresnel_serial(const Wavefunction& psi0,
                            const OpticalGeometry& geo) {
  return fresnel_impl(psi0, geo, false);
}

}  // namespace mslit

#pragma once

#include "mslit/fourier.hpp"
#include "mslit/sets.hpp"

namespace mslit {

/// Aperture-to-lens geometry. The screen coordinate x at the lens plane maps
/// to momentum k = s x with s = 2 pi / (L lambda).
struct OpticalGeometry {
  double L = 1.0;       // aperture-to-lens distance
  double lambda = 1.0;  // mean wavelength
  double scale() const { return 2.0 * std::numbers::pi / (L * lambda); }
};

/// Consistency wavelength from the reciprocal correspondence between slit
/// period and wire spacing: lambda = wire_spacing * period / L.
double infer_wavelength(double L, double period, double wire_spacing);

/// Validity indicator rho = (aperture half-span)^2 pi / (L lambda); small
/// rho means the far-field form is accurate.
double fraunhofer_indicator(double half_span, const OpticalGeometry& geo);

IntervalSet screen_to_momentum(const IntervalSet& s, const OpticalGeometry& geo);
IntervalSet momentum_to_screen(const IntervalSet& s, const OpticalGeometry& geo);

/// Screen grid on which the far-field form is a pure rescaling of the
/// momentum grid: x_m = k_m / s.
Grid natural_screen_grid(const Grid& aperture_grid, const OpticalGeometry& geo);

/// Far-field propagation: psi_t(x) = sqrt(s) e^{-i pi/4} e^{i s x^2/2}
/// psi~0(s x), evaluated on the natural screen grid. Norm-preserving.
Wavefunction fraunhofer(const Wavefunction& psi0, const OpticalGeometry& geo);

/// Exact free-evolution quadrature with the full quadratic-phase kernel,
/// summed over the support of psi0. O(N * support) reference for
/// fraunhofer(); parallel over screen points with a fixed inner summation
/// order, so the result is identical to fresnel_serial().
Wavefunction fresnel(const Wavefunction& psi0, const OpticalGeometry& geo);

/// Single-threaded reference implementation of the same quadrature.
Wavefunction fresnel_serial(const Wavefunction& psi0,
                            const OpticalGeometry& geo);

}  // namespace mslit

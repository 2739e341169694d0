#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mslit {

using Complex = std::complex<double>;

/// Uniform 1-D sample grid spanning [-extent/2, extent/2).
///
/// Sample j sits at x_j = -extent/2 + j*spacing. The conjugate grid (the one
/// a Fourier transform lands on) has spacing 2*pi/extent and the same number
/// of points.
struct Grid {
  int n_points = 0;
  double extent = 0.0;

  double spacing() const { return extent / n_points; }
  double conjugate_spacing() const { return 2.0 * std::numbers::pi / extent; }
  double coord(int j) const { return -0.5 * extent + j * spacing(); }

  Grid conjugate() const {
    return Grid{n_points, n_points * conjugate_spacing()};
  }

  std::vector<double> coords() const {
    std::vector<double> xs(n_points);
    for (int j = 0; j < n_points; ++j) xs[j] = coord(j);
    return xs;
  }

  bool operator==(const Grid&) const = default;
};

inline Grid make_grid(double extent, int n_points) {
  if (!(extent > 0.0)) throw std::invalid_argument("grid extent must be positive");
  if (n_points < 2) throw std::invalid_argument("grid needs at least 2 points");
  return Grid{n_points, extent};
}

enum class Space { Position, Momentum };

/// Complex amplitudes sampled on a grid, tagged with the space they live in.
/// Values are treated as immutable once constructed; all operations return
/// new wavefunctions.
struct Wavefunction {
  Grid grid;
  Space space = Space::Position;
  std::vector<Complex> values;
};

inline Wavefunction make_wavefunction(const Grid& g, Space s = Space::Position) {
  return Wavefunction{g, s, std::vector<Complex>(g.n_points)};
}

inline double norm_sq(const Wavefunction& psi) {
  double acc = 0.0;
  for (const Complex& v : psi.values) acc += std::norm(v);
  return acc * psi.grid.spacing();
}

/// <psi|phi> with the Riemann-sum measure.
inline Complex inner(const Wavefunction& psi, const Wavefunction& phi) {
  if (psi.grid != phi.grid || psi.space != phi.space)
    throw std::invalid_argument("inner: grid or space mismatch");
  Complex acc{0.0, 0.0};
  for (int j = 0; j < psi.grid.n_points; ++j)
    acc += std::conj(psi.values[j]) * phi.values[j];
  return acc * psi.grid.spacing();
}

inline Wavefunction scaled(const Wavefunction& psi, Complex c) {
  Wavefunction out = psi;
  for (Complex& v : out.values) v *= c;
  return out;
}

inline Wavefunction normalized(const Wavefunction& psi) {
  double n2 = norm_sq(psi);
  if (!(n2 > 0.0)) throw std::invalid_argument("cannot normalize the zero state");
  return scaled(psi, 1.0 / std::sqrt(n2));
}

/// L2 distance ||psi - phi||.
inline double distance(const Wavefunction& psi, const Wavefunction& phi) {
  if (psi.grid != phi.grid || psi.space != phi.space)
    throw std::invalid_argument("distance: grid or space mismatch");
  double acc = 0.0;
  for (int j = 0; j < psi.grid.n_points; ++j)
    acc += std::norm(psi.values[j] - phi.values[j]);
  return std::sqrt(acc * psi.grid.spacing());
}

struct Fidelity {
  double l2_distance;  // ||psi - phi||
  double overlap_sq;   // |<psi|phi>|^2
};

inline Fidelity fidelity(const Wavefunction& psi, const Wavefunction& phi) {
  return Fidelity{distance(psi, phi), std::norm(inner(psi, phi))};
}

}  // namespace mslit

#include "mslit/fourier.hpp"

#include <fftw3.h>

#include <mutex>

namespace mslit {

namespace {

std::mutex fftw_plan_mutex;  // FFTW planning is not thread-safe

// In-place unnormalized DFT, sign = FFTW_FORWARD (-1) or FFTW_BACKWARD (+1).
void run_dft(std::vector<Complex>& data, int sign) {
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, sign,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fftw_destroy_plan(plan);
  }
}

// i^r for r in 0..3, exact.
Complex unit_quarter_turn(int r) {
  switch (r & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

// With x_j = -X/2 + j dx and k_m = -K/2 + m dk (dk dx = 2pi/N) the continuum
// phases collapse to exact signs:
//   e^{i k_m x_j} = i^N (-1)^j (-1)^m e^{+2pi i mj/N},
// so the whole transform is a sign-modulated FFT. No trigonometric phase
// evaluation is needed, which keeps the operator unitary to machine precision.
Wavefunction fourier(const Wavefunction& psi) {
  if (psi.space != Space::Position)
    throw std::invalid_argument("fourier: expected a position-space wavefunction");
  const int n = psi.grid.n_points;
  Wavefunction out;
  out.grid = psi.grid.conjugate();
  out.space = Space::Momentum;
  out.values.resize(n);
  for (int j = 0; j < n; ++j)
    out.values[j] = (j & 1) ? -psi.values[j] : psi.values[j];
  run_dft(out.values, FFTW_BACKWARD);  // sign +1 matches the +ikx convention
  const double scale = psi.grid.spacing() / std::sqrt(2.0 * std::numbers::pi);
  const Complex corner = unit_quarter_turn(n);
  for (int m = 0; m < n; ++m) {
    Complex ph = (m & 1) ? -corner : corner;
    out.values[m] *= scale * ph;
  }
  return out;
}

Wavefunction inverse_fourier(const Wavefunction& psi_tilde) {
  if (psi_tilde.space != Space::Momentum)
    throw std::invalid_argument(
        "inverse_fourier: expected a momentum-space wavefunction");
  const int n = psi_tilde.grid.n_points;
  Wavefunction out;
  out.grid = psi_tilde.grid.conjugate();
  out.space = Space::Position;
  out.values.resize(n);
  for (int m = 0; m < n; ++m)
    out.values[m] = (m & 1) ? -psi_tilde.values[m] : psi_tilde.values[m];
  run_dft(out.values, FFTW_FORWARD);
  const double scale =
      psi_tilde.grid.spacing() / std::sqrt(2.0 * std::numbers::pi);
  const Complex corner = std::conj(unit_quarter_turn(n));
  for (int j = 0; j < n; ++j) {
    Complex ph = (j & 1) ? -corner : corner;
    out.values[j] *= scale * ph;
  }
  return out;
}

Wavefunction parity(const Wavefunction& psi) {
  const int n = psi.grid.n_points;
  Wavefunction out = psi;
  for (int j = 0; j < n; ++j) out.values[j] = psi.values[(n - j) % n];
  return out;
}

}  // namespace mslit

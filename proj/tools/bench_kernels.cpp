// Timing harness for the O(N * support) free-evolution quadrature (parallel
// vs serial reference) and the transform fast path.

#include <chrono>
#include <cstdio>

#include "mslit/fourier.hpp"
#include "mslit/propagation.hpp"
#include "mslit/validate.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  using namespace mslit;

  const int n = 1 << 12;
  Grid grid{n, 64.0};
  // dense-support input so the quadrature cost is the full O(N^2)
  Wavefunction psi = make_wavefunction(grid);
  for (int j = 0; j < n; ++j) {
    const double x = grid.coord(j);
    psi.values[j] = std::exp(-0.5 * x * x / 16.0);
  }
  psi = normalized(psi);
  OpticalGeometry geo{1.0, 2.0 * std::numbers::pi};

  auto t0 = Clock::now();
  Wavefunction serial = fresnel_serial(psi, geo);
  const double t_serial = seconds_since(t0);

  t0 = Clock::now();
  Wavefunction parallel = fresnel(psi, geo);
  const double t_parallel = seconds_since(t0);

  std::printf("fresnel quadrature, n=%d dense support\n", n);
  std::printf("  serial reference: %8.3f s\n", t_serial);
  std::printf("  parallel:         %8.3f s  (speedup %.2fx)\n", t_parallel,
              t_serial / t_parallel);
  std::printf("  max |delta|:      %8.2e (must be 0: fixed summation order)\n",
              distance(serial, parallel));

  const int nf = 1 << 20;
  Wavefunction big = random_state(Grid{nf, 1024.0}, 7);
  t0 = Clock::now();
  Wavefunction tilde = fourier(big);
  const double t_fft = seconds_since(t0);
  std::printf("fourier fast path, n=%d: %.3f s (norm drift %.2e)\n", nf, t_fft,
              std::abs(norm_sq(tilde) - 1.0));
  return 0;
}

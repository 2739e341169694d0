#include "mslit/eigenstate.hpp"

#include "mslit/fourier.hpp"
#include "mslit/projectors.hpp"

namespace mslit {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double u) {
  if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

// Shared assembly: psi(x) = sum_n coeff_n W(x - center_n), replicas dropped
// when they do not fit on the grid.
JointEigenstate assemble(const EnvelopeSpec& spec,
                         const std::vector<Complex>& all_coeffs, int n_terms,
                         const Grid& grid) {
  const double dx = grid.spacing();
  if (spec.W.support.length() < 2.0 * dx)
    throw std::invalid_argument("grid does not resolve the position window");

  JointEigenstate out;
  out.psi = make_wavefunction(grid);
  const double x0 = grid.coord(0);
  for (int n = -n_terms; n <= n_terms; ++n) {
    const Complex coeff = all_coeffs[n + n_terms];
    const double center = n * spec.period + spec.shift;
    const double lo = center + spec.W.support.lo;
    const double hi = center + spec.W.support.hi;
    if (lo < x0 || hi > x0 + grid.extent) continue;  // no wrap-around
    int j_lo = static_cast<int>(std::ceil((lo - x0) / dx - 1e-9));
    int j_hi = static_cast<int>(std::ceil((hi - x0) / dx - 1e-9));  // excl.
    if (j_hi > grid.n_points) j_hi = grid.n_points;
    for (int j = j_lo; j < j_hi; ++j)
      out.psi.values[j] += coeff * spec.W.profile(grid.coord(j) - center);
    out.centers.push_back(center);
    out.coefficients.push_back(coeff);
  }
  out.raw_norm_sq = norm_sq(out.psi);
  out.psi = normalized(out.psi);
  out.X = PeriodicSet{spec.period,
                      IntervalSet::single(spec.shift + spec.W.support.lo,
                                          spec.shift + spec.W.support.hi)};
  out.Y = PeriodicSet{2.0 * kPi / spec.period,
                      IntervalSet::single(spec.M_tilde.support.lo,
                                          spec.M_tilde.support.hi)};
  return out;
}

}  // namespace

PositionWindow rect_window(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("rect window width must be > 0");
  return PositionWindow{
      [a](double x) { return (x >= -0.5 * a && x < 0.5 * a) ? 1.0 : 0.0; },
      Interval{-0.5 * a, 0.5 * a}};
}

MomentumWindow cosine_momentum_window(double Tprime, double T) {
  if (!(T > 0.0) || !(Tprime > T))
    throw std::invalid_argument("cosine momentum window requires T' > T > 0");
  const double d = kPi / Tprime;
  return MomentumWindow{
      [Tprime, d](double k) {
        return (k >= -d && k <= d) ? std::cos(0.5 * Tprime * k) : 0.0;
      },
      Interval{-d, d}};
}

double cosine_envelope(double Tprime, double x) {
  const double c = 0.5 * Tprime;
  const double scale = 1.0 / std::sqrt(2.0 * kPi);
  if (std::abs(c - std::abs(x)) < 1e-9 * c)
    return scale * kPi / Tprime;  // removable singularity at |x| = T'/2
  return scale * std::cos(kPi * x / Tprime) * 2.0 * c / (c * c - x * x);
}

void validate(const EnvelopeSpec& spec) {
  if (!(spec.period > 0.0))
    throw std::invalid_argument("envelope period must be positive");
  if (!(spec.W.support.length() > 0.0) ||
      spec.W.support.length() >= spec.period)
    throw std::invalid_argument(
        "position window support must be shorter than one period");
  const double d = kPi / spec.period;
  if (!(spec.M_tilde.support.length() > 0.0) ||
      spec.M_tilde.support.lo <= -d || spec.M_tilde.support.hi >= d)
    throw std::invalid_argument(
        "momentum window support must lie strictly inside one momentum cell");
}

std::vector<Complex> envelope_samples(const EnvelopeSpec& spec, int n_terms) {
  validate(spec);
  if (n_terms < 0) throw std::invalid_argument("n_terms must be >= 0");
  // Fine conjugate grid whose position samples land exactly on the comb:
  // spacing = period, so one inverse transform yields every M(nT + shift).
  constexpr int kFine = 1 << 20;
  if (2 * n_terms + 1 > kFine / 2)
    throw std::invalid_argument("n_terms too large for the quadrature grid");
  Grid fine_x{kFine, kFine * spec.period};
  Grid fine_k = fine_x.conjugate();
  Wavefunction mom = make_wavefunction(fine_k, Space::Momentum);
  for (int m = 0; m < kFine; ++m) {
    const double k = fine_k.coord(m);
    const double v = spec.M_tilde.profile(k);
    if (v != 0.0)
      mom.values[m] =
          v * std::polar(1.0, -k * spec.shift);  // translate by the shift
  }
  Wavefunction env = inverse_fourier(mom);
  std::vector<Complex> out(2 * n_terms + 1);
  for (int n = -n_terms; n <= n_terms; ++n)
    out[n + n_terms] = env.values[kFine / 2 + n];
  return out;
}

JointEigenstate comb_construct(const EnvelopeSpec& spec, int n_terms,
                               const Grid& grid) {
  return assemble(spec, envelope_samples(spec, n_terms), n_terms, grid);
}

JointEigenstate fourier_series_construct(const EnvelopeSpec& spec,
                                         int n_coeffs, const Grid& grid) {
  validate(spec);
  if (n_coeffs < 0) throw std::invalid_argument("n_coeffs must be >= 0");
  // Fourier coefficients of the periodized momentum window, evaluated as
  // c_n = (2 pi)^{-1/2} \int M~(k) e^{-ik(nT+shift)} dk by composite Simpson
  // over the support. The phase advances by a fixed rotation per node, so
  // the oscillatory factor is tracked by recurrence instead of per-term
  // trigonometric calls.
  const Interval sup = spec.M_tilde.support;
  const int panels = 1 << 18;  // Simpson error << 1e-12 up to |n| ~ 10^4
  const double h = sup.length() / panels;
  std::vector<Complex> coeffs(2 * n_coeffs + 1, Complex{0.0, 0.0});
  for (int j = 0; j <= panels; ++j) {
    const double k = sup.lo + j * h;
    double w = (j == 0 || j == panels) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    const double v = spec.M_tilde.profile(k);
    if (v == 0.0) continue;
    const Complex base = w * v *
        std::polar(1.0, -k * (-n_coeffs * spec.period + spec.shift));
    const Complex rot = std::polar(1.0, -k * spec.period);
    Complex phase{1.0, 0.0};
    for (int n = 0; n < 2 * n_coeffs + 1; ++n) {
      coeffs[n] += base * phase;
      phase *= rot;
    }
  }
  const double scale = h / 3.0 / std::sqrt(2.0 * kPi);
  for (Complex& c : coeffs) c *= scale;
  return assemble(spec, coeffs, n_coeffs, grid);
}

double momentum_density_closed_form(double k, double a, double T,
                                    double Tprime) {
  const double cell = 2.0 * kPi / T;
  double kf = std::fmod(k + kPi / T, cell);
  if (kf < 0.0) kf += cell;
  kf -= kPi / T;  // folded into [-pi/T, pi/T)
  if (std::abs(kf) > kPi / Tprime) return 0.0;
  const double env = sinc(0.5 * a * k);
  const double mod = std::cos(0.5 * Tprime * kf);
  return env * env * mod * mod;
}

double double_slit_reference(double a, double T, double k) {
  const double env = sinc(0.5 * a * k);
  const double mod = std::cos(0.5 * T * k);
  return env * env * mod * mod;
}

Residuals residuals(const JointEigenstate& state) {
  const Wavefunction& psi = state.psi;
  Wavefunction px = project_position(psi, realize(state.X, psi.grid));
  Wavefunction py = project_momentum(psi, realize(state.Y, psi.grid.conjugate()));
  return Residuals{distance(px, psi), distance(py, psi)};
}

}  // namespace mslit

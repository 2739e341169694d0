#include "mslit/validate.hpp"

#include <random>

#include "mslit/eigenstate.hpp"
#include "mslit/pipeline.hpp"
#include "mslit/projectors.hpp"
#include "mslit/propagation.hpp"

namespace mslit {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform in (0, 1], from the top 53 bits. The std distributions are
// implementation-defined, which would break cross-platform determinism.
double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

Complex gaussian_pair(std::mt19937_64& rng) {
  const double r = std::sqrt(-2.0 * std::log(uniform01(rng)));
  const double phi = 2.0 * kPi * uniform01(rng);
  return Complex{r * std::cos(phi), r * std::sin(phi)};
}

struct Suite {
  std::vector<Check> checks;

  void below(const std::string& name, double value, double threshold) {
    checks.push_back(Check{name, value, threshold, true, value < threshold});
  }
  void above(const std::string& name, double value, double threshold) {
    checks.push_back(Check{name, value, threshold, false, value > threshold});
  }
};

// Wrong-sign continuum transform (the -ikx convention), used to prove the
// parity identity check can detect a convention mistake.
Wavefunction wrong_sign_fourier(const Wavefunction& psi) {
  Wavefunction flipped = psi;
  for (Complex& v : flipped.values) v = std::conj(v);
  Wavefunction out = fourier(flipped);
  for (Complex& v : out.values) v = std::conj(v);
  return out;
}

Wavefunction as_position(const Wavefunction& tilde) {
  Wavefunction out = tilde;
  out.space = Space::Position;
  return out;
}

// Momentum-side transmission mask of the commutation-test sets: period p,
// base [-p/4, p/4).
std::vector<double> half_cell_mask(const Grid& conjugate_grid, double p) {
  return realize(PeriodicSet{p, IntervalSet::single(-0.25 * p, 0.25 * p)},
                 conjugate_grid);
}

ExperimentConfig bench_config() {
  ExperimentConfig cfg;
  cfg.aperture = ApertureSpec{ApertureSpec::Mode::Double, 0.0625e-3, 0.25e-3,
                              0.125e-3};
  cfg.grating = GratingSpec{6, 0.127e-3, 1.3e-3, 0.0};
  cfg.geometry.L = 0.55;
  cfg.geometry.lambda = infer_wavelength(0.55, 0.25e-3, 1.3e-3);
  return cfg;
}

double aligned_deviation(const Wavefunction& a, const Wavefunction& b) {
  const Complex ov =
      inner(a, b) / std::sqrt(norm_sq(a) * norm_sq(b));
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(ov)));
}

}  // namespace

Wavefunction random_state(const Grid& grid, unsigned seed) {
  std::mt19937_64 rng(seed);
  Wavefunction psi = make_wavefunction(grid);
  for (Complex& v : psi.values) v = gaussian_pair(rng);
  return normalized(psi);
}

bool all_pass(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<Check> run_validation_suite(const ValidationOptions& options) {
  Suite s;
  const unsigned seed = options.seed;

  // --- transform algebra ---
  {
    Grid g{1 << 12, 64.0};
    Wavefunction psi = random_state(g, seed);
    Wavefunction phi = random_state(g, seed + 1);

    Wavefunction tilde = fourier(psi);
    s.below("fourier_unitarity", std::abs(norm_sq(tilde) - norm_sq(psi)),
            1e-12);
    s.below("fourier_roundtrip", distance(inverse_fourier(tilde), psi), 1e-12);

    Wavefunction first =
        options.flip_ft_sign ? wrong_sign_fourier(psi) : fourier(psi);
    Wavefunction twice = fourier(as_position(first));
    // the doubly conjugated grid extent may differ in the last bit; the
    // samples live on the original grid
    twice.grid = g;
    twice.space = Space::Position;
    s.below("parity_is_double_fourier", distance(twice, parity(psi)), 1e-10);

    const Complex a{0.6, -0.3}, b{-0.2, 0.9};
    Wavefunction combo = make_wavefunction(g);
    for (int j = 0; j < g.n_points; ++j)
      combo.values[j] = a * psi.values[j] + b * phi.values[j];
    Wavefunction lhs = fourier(combo);
    Wavefunction rhs = fourier(psi);
    Wavefunction ft_phi = fourier(phi);
    for (int j = 0; j < g.n_points; ++j)
      rhs.values[j] = a * rhs.values[j] + b * ft_phi.values[j];
    s.below("fourier_linearity", distance(lhs, rhs), 1e-12);

    Wavefunction shifted = make_wavefunction(g);
    const int by = 37;
    for (int j = 0; j < g.n_points; ++j)
      shifted.values[j] = psi.values[(j + by) % g.n_points];
    Wavefunction st = fourier(shifted);
    double worst = 0.0;
    for (int m = 0; m < g.n_points; ++m)
      worst = std::max(worst, std::abs(std::abs(st.values[m]) -
                                       std::abs(tilde.values[m])));
    s.below("shift_leaves_momentum_modulus", worst, 1e-10);
  }

  // --- projector algebra ---
  {
    Grid g{1 << 12, 64.0};
    Wavefunction psi = random_state(g, seed + 2);
    Wavefunction phi = random_state(g, seed + 3);
    IntervalSet slits({{-0.75, -0.25}, {0.25, 0.75}});
    std::vector<double> xm = realize(slits, g);
    std::vector<double> ym = half_cell_mask(g.conjugate(), 2.0 * kPi);

    Wavefunction p1 = project_position(psi, xm);
    s.below("idempotence_position", distance(project_position(p1, xm), p1),
            1e-12);
    Wavefunction q1 = project_momentum(psi, ym);
    s.below("idempotence_momentum", distance(project_momentum(q1, ym), q1),
            1e-12);
    s.below("hermiticity_momentum_projector",
            std::abs(inner(phi, q1) - inner(project_momentum(phi, ym), psi)),
            1e-12);
    s.below("contraction", std::max(0.0, norm_sq(q1) - norm_sq(psi)), 1e-12);

    IntervalSet rest = complement(slits, Interval{-32.0, 32.0});
    Wavefunction p2 = project_position(psi, realize(rest, g));
    double worst = 0.0;
    for (int j = 0; j < g.n_points; ++j)
      worst = std::max(worst, std::abs(p1.values[j] + p2.values[j] -
                                       psi.values[j]));
    s.below("complementation_exact", worst, 1e-15);
  }

  // --- commutation, commensurate and not ---
  for (int n : {1, 2, 3, 4}) {
    const double extent = (n == 3) ? 48.0 : 64.0;  // keeps 2*pi/n on samples
    Grid g{1 << 14, extent};
    Wavefunction psi = random_state(g, seed + 10 + n);
    std::vector<double> xm =
        realize(PeriodicSet{1.0, IntervalSet::single(0.0, 0.5)}, g);
    std::vector<double> ym = half_cell_mask(g.conjugate(), 2.0 * kPi / n);
    s.below("commutator_commensurate_n" + std::to_string(n),
            commutator_norm(psi, xm, ym), 1e-8);
  }
  {
    Grid g{1 << 12, 64.0};
    Wavefunction psi = random_state(g, seed + 20);
    std::vector<double> xm =
        realize(PeriodicSet{1.0, IntervalSet::single(0.0, 0.5)}, g);
    std::vector<double> ym = half_cell_mask(g.conjugate(), 1.9 * kPi);
    s.above("commutator_incommensurate", commutator_norm(psi, xm, ym), 1e-3);
  }

  // --- eigenstate identities ---
  EnvelopeSpec spec{rect_window(0.23), cosine_momentum_window(1.1, 1.0), 1.0,
                    0.5};
  {
    JointEigenstate state = comb_construct(spec, 4095, Grid{1 << 18, 8192.0});
    Residuals r = residuals(state);
    s.below("eigenstate_residual_position", r.position, 1e-6);
    s.below("eigenstate_residual_momentum", r.momentum, 1e-6);
  }
  {
    EnvelopeSpec wide{rect_window(0.25), cosine_momentum_window(1.1, 1.0), 1.0,
                      0.5};
    Grid g{1 << 14, 64.0};
    JointEigenstate state = comb_construct(wide, 31, g);
    std::vector<double> w = realize(IntervalSet::single(-0.125, 0.125), g);
    double w_norm_sq = 0.0;
    for (double v : w) w_norm_sq += v;
    w_norm_sq *= g.spacing();
    double coeff_sum = 0.0;
    for (const Complex& c : state.coefficients) coeff_sum += std::norm(c);
    const double predicted = w_norm_sq * coeff_sum;
    s.below("norm_identity",
            std::abs(state.raw_norm_sq - predicted) / predicted, 1e-10);
  }
  {
    Grid g{1 << 14, 256.0};
    JointEigenstate comb = comb_construct(spec, 64, g);
    JointEigenstate series = fourier_series_construct(spec, 64, g);
    s.below("construction_equivalence", distance(comb.psi, series.psi), 1e-6);
  }
  {
    EnvelopeSpec wide{rect_window(0.25), cosine_momentum_window(1.1, 1.0), 1.0,
                      0.5};
    Grid g{1 << 18, 256.0};
    JointEigenstate state = comb_construct(wide, 127, g);
    Wavefunction tilde = fourier(state.psi);
    std::vector<double> ym = realize(state.Y, tilde.grid);
    double outside = 0.0;
    for (int m = 0; m < tilde.grid.n_points; ++m)
      if (ym[m] == 0.0) outside += std::norm(tilde.values[m]);
    outside *= tilde.grid.spacing();
    s.below("momentum_mass_outside_Y", outside / norm_sq(tilde), 1e-6);
  }

  // --- pipeline bookkeeping and far-field oracle ---
  {
    ExperimentConfig cfg = bench_config();
    Wavefunction psi = prepare(cfg);
    Wavefunction tilde = fourier(psi);
    std::vector<double> mask = grating_momentum_mask(cfg, tilde.grid);
    Wavefunction after = apply_grating(psi, cfg);
    double blocked = 0.0;
    for (int m = 0; m < tilde.grid.n_points; ++m)
      blocked += (1.0 - mask[m]) * std::norm(tilde.values[m]);
    blocked *= tilde.grid.spacing();
    s.below("probability_bookkeeping",
            std::abs(norm_sq(after) + blocked - 1.0), 1e-9);
  }
  {
    ExperimentConfig cfg = bench_config();
    cfg.aperture.slit_width = 0.23 * cfg.aperture.separation;
    cfg.numerics.n_points = 1 << 14;
    cfg.numerics.extent_over_separation = 48.0;
    Wavefunction psi = prepare(cfg);
    Wavefunction exact = fresnel(psi, cfg.geometry);
    s.below("fresnel_vs_fraunhofer",
            aligned_deviation(exact, fraunhofer(psi, cfg.geometry)), 0.05);
    s.below("fresnel_parallel_matches_serial",
            distance(exact, fresnel_serial(psi, cfg.geometry)), 1e-12);
  }

  return s.checks;
}

}  // namespace mslit

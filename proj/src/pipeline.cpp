#include "mslit/pipeline.hpp"

#include "mslit/projectors.hpp"

namespace mslit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_config(const ExperimentConfig& c) {
  const ApertureSpec& a = c.aperture;
  if (!(a.slit_width > 0.0) || !(a.separation > 0.0))
    throw std::invalid_argument("aperture lengths must be positive");
  if (!(a.slit_width < a.separation))
    throw std::invalid_argument("slit width must be smaller than the period");
  if (c.numerics.n_points < 2 || !(c.numerics.extent_over_separation > 0.0))
    throw std::invalid_argument("invalid numerics block");
  if (!(c.geometry.L > 0.0) || !(c.geometry.lambda > 0.0))
    throw std::invalid_argument("geometry lengths must be positive");
  if (const auto* ideal = std::get_if<IdealGrating>(&c.grating)) {
    if (!(ideal->Tprime > a.separation))
      throw std::invalid_argument(
          "ideal grating requires Tprime > slit period");
  }
}

// Mass captured by a 0/1 target mask, for a position-space state.
double mass_in(const Wavefunction& psi, const std::vector<double>& target) {
  double acc = 0.0;
  for (int j = 0; j < psi.grid.n_points; ++j)
    if (target[j] != 0.0) acc += std::norm(psi.values[j]);
  return acc * psi.grid.spacing();
}

StageReport report_stage(Stage stage, const Wavefunction& state,
                         const Wavefunction& input,
                         const std::vector<double>& target,
                         double peak_threshold) {
  StageReport r;
  r.stage = stage;
  r.probability = norm_sq(state);
  Wavefunction unit = normalized(state);
  r.l2_to_input = distance(unit, input);
  r.overlap_sq = std::norm(inner(input, unit));
  r.peaks = peak_inventory(state, peak_threshold);
  const double captured = mass_in(state, target);
  r.leakage_transmitted =
      r.probability > 0.0 ? (r.probability - captured) / r.probability : 0.0;
  r.leakage_total = 1.0 - captured;
  return r;
}

}  // namespace

double derived_Tprime(double separation, double wire_width,
                      const OpticalGeometry& geo) {
  if (!(separation > 0.0) || !(wire_width > 0.0))
    throw std::invalid_argument("derived_Tprime: lengths must be positive");
  const double inv = 1.0 / separation - wire_width / (geo.L * geo.lambda);
  if (!(inv > 0.0))
    throw std::invalid_argument("wire width too large for this geometry");
  return 1.0 / inv;
}

IntervalSet aperture_set(const ApertureSpec& aperture) {
  const double half = 0.5 * aperture.slit_width;
  if (aperture.mode == ApertureSpec::Mode::Single) {
    return IntervalSet::single(aperture.single_center - half,
                               aperture.single_center + half);
  }
  const double c = 0.5 * aperture.separation;
  return IntervalSet(
      {{-c - half, -c + half}, {c - half, c + half}});
}

Grid experiment_grid(const ExperimentConfig& config) {
  return make_grid(
      config.numerics.extent_over_separation * config.aperture.separation,
      config.numerics.n_points);
}

std::vector<double> grating_momentum_mask(const ExperimentConfig& config,
                                          const Grid& conjugate_grid) {
  if (const auto* wires = std::get_if<GratingSpec>(&config.grating)) {
    std::vector<double> mask(conjugate_grid.n_points, 1.0);
    if (wires->n_wires == 0) return mask;
    IntervalSet blocked =
        screen_to_momentum(grating_wires(*wires), config.geometry);
    std::vector<double> blocked_mask = realize(blocked, conjugate_grid);
    for (int m = 0; m < conjugate_grid.n_points; ++m)
      mask[m] = 1.0 - blocked_mask[m];
    return mask;
  }
  const auto& ideal = std::get<IdealGrating>(config.grating);
  PeriodicSet Y{2.0 * kPi / config.aperture.separation,
                IntervalSet::single(-kPi / ideal.Tprime, kPi / ideal.Tprime)};
  return realize(Y, conjugate_grid);
}

Wavefunction prepare(const ExperimentConfig& config) {
  check_config(config);
  Grid grid = experiment_grid(config);
  std::vector<double> mask = realize(aperture_set(config.aperture), grid);
  Wavefunction psi = make_wavefunction(grid);
  for (int j = 0; j < grid.n_points; ++j) psi.values[j] = mask[j];
  if (!(norm_sq(psi) > 0.0))
    throw std::invalid_argument("aperture not resolved by the grid");
  return normalized(psi);
}

Wavefunction apply_grating(const Wavefunction& psi,
                           const ExperimentConfig& config) {
  return project_momentum(
      psi, grating_momentum_mask(config, psi.grid.conjugate()));
}

Wavefunction image(const Wavefunction& psi_after) {
  return parity(psi_after);
}

std::vector<Peak> peak_inventory(const Wavefunction& psi,
                                 double relative_threshold) {
  const int n = psi.grid.n_points;
  const double dx = psi.grid.spacing();
  double peak = 0.0;
  for (const Complex& v : psi.values) peak = std::max(peak, std::norm(v));
  const double threshold = relative_threshold * peak;
  std::vector<Peak> out;
  int j = 0;
  while (j < n) {
    if (std::norm(psi.values[j]) <= threshold) {
      ++j;
      continue;
    }
    double mass = 0.0, moment = 0.0;
    while (j < n && std::norm(psi.values[j]) > threshold) {
      const double d = std::norm(psi.values[j]);
      mass += d;
      moment += d * psi.grid.coord(j);
      ++j;
    }
    out.push_back(Peak{moment / mass, mass * dx});
  }
  return out;
}

RunResult run(const ExperimentConfig& config) {
  RunResult result;
  result.prepared = prepare(config);
  result.after_grating = apply_grating(result.prepared, config);
  result.imaged = image(result.after_grating);

  Grid grid = result.prepared.grid;
  std::vector<double> aperture_mask =
      realize(aperture_set(config.aperture), grid);
  // The detection target is the lens image of the aperture; on the grid that
  // is the circular reversal of the aperture mask.
  std::vector<double> image_mask(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j)
    image_mask[j] = aperture_mask[(grid.n_points - j) % grid.n_points];

  const double thr = config.numerics.peak_threshold;
  result.reports.push_back(report_stage(
      Stage::Prepared, result.prepared, result.prepared, aperture_mask, thr));
  result.reports.push_back(report_stage(Stage::AfterGrating,
                                        result.after_grating, result.prepared,
                                        aperture_mask, thr));
  result.reports.push_back(report_stage(Stage::Imaged, result.imaged,
                                        result.prepared, image_mask, thr));
  return result;
}

std::vector<SweepRow> sweep(const ExperimentConfig& config,
                            const std::string& parameter,
                            const std::vector<double>& values) {
  if (values.empty())
    throw std::invalid_argument("sweep: empty value list");
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (double value : values) {
    ExperimentConfig c = config;
    if (parameter == "n_wires") {
      auto* wires = std::get_if<GratingSpec>(&c.grating);
      if (!wires)
        throw std::invalid_argument("n_wires sweep needs a wire grating");
      wires->n_wires = static_cast<int>(std::lround(value));
    } else if (parameter == "wire_width") {
      auto* wires = std::get_if<GratingSpec>(&c.grating);
      if (!wires)
        throw std::invalid_argument("wire_width sweep needs a wire grating");
      wires->wire_width = value;
    } else if (parameter == "L") {
      c.geometry.L = value;
    } else if (parameter == "Tprime") {
      // value is Tprime as a multiple of the slit period
      c.grating = IdealGrating{value * c.aperture.separation};
    } else if (parameter == "n_points") {
      c.numerics.n_points = static_cast<int>(std::lround(value));
    } else {
      throw std::invalid_argument("unknown sweep parameter: " + parameter);
    }
    RunResult r = run(c);
    rows.push_back(SweepRow{value, r.reports[1].probability,
                            r.reports[2].leakage_transmitted,
                            r.reports[2].l2_to_input});
  }
  return rows;
}

}  // namespace mslit

#pragma once

#include <string>
#include <variant>

#include "mslit/eigenstate.hpp"
#include "mslit/propagation.hpp"

namespace mslit {

struct ApertureSpec {
  enum class Mode { Single, Double };
  Mode mode = Mode::Double;
  double slit_width = 0.0;     // a
  double separation = 0.0;     // T (slit period)
  double single_center = 0.0;  // slit center in single mode
};

/// Idealized grating: the full periodic momentum set with period 2 pi / T
/// and half-gap pi / Tprime, instead of a finite wire count.
struct IdealGrating {
  double Tprime = 0.0;  // same length unit as the slit period; > separation
};

using GratingChoice = std::variant<GratingSpec, IdealGrating>;

struct NumericsSpec {
  int n_points = 1 << 16;
  double extent_over_separation = 64.0;
  double peak_threshold = 1e-4;  // run detection, relative to peak density
};

struct ExperimentConfig {
  ApertureSpec aperture;
  GratingChoice grating;
  OpticalGeometry geometry;
  NumericsSpec numerics;
};

struct Peak {
  double center;  // density centroid of one connected run
  double mass;    // integrated probability of the run
};

enum class Stage { Prepared, AfterGrating, Imaged };

struct StageReport {
  Stage stage = Stage::Prepared;
  double probability = 0.0;           // norm^2 (input is normalized to 1)
  double l2_to_input = 0.0;           // distance of renormalized state to psi0
  double overlap_sq = 0.0;            // |<psi0 | renormalized state>|^2
  std::vector<Peak> peaks;
  double leakage_transmitted = 0.0;   // mass off target / transmitted mass
  double leakage_total = 0.0;         // mass off target, relative to input
};

struct RunResult {
  std::vector<StageReport> reports;  // one per stage, pipeline order
  Wavefunction prepared;
  Wavefunction after_grating;  // sub-normalized
  Wavefunction imaged;         // sub-normalized
};

/// Wire width mapped to the ideal-grating parameter: the momentum gap per
/// cell equals the blocked width s * wire_width, giving
/// 1/Tprime = 1/T - wire_width / (L lambda).
double derived_Tprime(double separation, double wire_width,
                      const OpticalGeometry& geo);

IntervalSet aperture_set(const ApertureSpec& aperture);
Grid experiment_grid(const ExperimentConfig& config);

/// Momentum-side transmission mask of the configured grating on the
/// conjugate grid: wires are mapped through k = s x; ideal gratings realize
/// the periodic set directly.
std::vector<double> grating_momentum_mask(const ExperimentConfig& config,
                                          const Grid& conjugate_grid);

Wavefunction prepare(const ExperimentConfig& config);
Wavefunction apply_grating(const Wavefunction& psi,
                           const ExperimentConfig& config);
/// Lens imaging onto the detection plane: spatial inversion.
Wavefunction image(const Wavefunction& psi_after);

std::vector<Peak> peak_inventory(const Wavefunction& psi,
                                 double relative_threshold);

RunResult run(const ExperimentConfig& config);

struct SweepRow {
  double value;
  double transmitted;         // probability after the grating
  double leakage;             // transmitted-normalized leakage at the image
  double fidelity_distance;   // image vs prepared state
};

/// One run per value of the named parameter. Supported names: n_wires,
/// wire_width, L, Tprime (as a multiple of the slit period), n_points.
std::vector<SweepRow> sweep(const ExperimentConfig& config,
                            const std::string& parameter,
                            const std::vector<double>& values);

}  // namespace mslit

#pragma once

#include <functional>

#include "mslit/sets.hpp"

namespace mslit {

/// Position-space window W: a profile together with its compact support.
/// The profile must evaluate to 0 outside the support.
struct PositionWindow {
  std::function<double(double)> profile;
  Interval support;
};

/// Momentum-space window M~ with compact support, same contract.
struct MomentumWindow {
  std::function<double(double)> profile;
  Interval support;
};

/// chi_[-a/2, a/2].
PositionWindow rect_window(double a);

/// cos(T'k/2) restricted to [-pi/T', pi/T']; requires T' > T so the support
/// sits strictly inside one momentum cell [-pi/T, pi/T].
MomentumWindow cosine_momentum_window(double Tprime, double T);

/// Closed-form envelope M(x) for the cosine momentum window (inverse
/// transform of cos(T'k/2) chi_[-pi/T',pi/T']). Used as a quadrature oracle.
double cosine_envelope(double Tprime, double x);

/// The window pair defining a joint eigenstate: psi is W replicated on the
/// comb n*period + shift with envelope weights M(n*period + shift).
struct EnvelopeSpec {
  PositionWindow W;
  MomentumWindow M_tilde;
  double period = 1.0;
  double shift = 0.0;
};

/// Throws invalid_argument when the support constraints are violated
/// (supp W not shorter than one period, supp M~ not strictly inside
/// [-pi/period, pi/period], non-positive period).
void validate(const EnvelopeSpec& spec);

struct JointEigenstate {
  Wavefunction psi;  // normalized, position space
  PeriodicSet X;     // position set, period = spec.period
  PeriodicSet Y;     // momentum set, period = 2 pi / spec.period
  std::vector<double> centers;        // replica centers kept on the grid
  std::vector<Complex> coefficients;  // envelope value at each kept center
  double raw_norm_sq = 0.0;           // norm^2 before normalization
};

/// Envelope values M(n*period + shift), n = -n_terms..n_terms, computed by
/// inverse-transform quadrature of M~ on a fine conjugate grid (one FFT for
/// the whole batch).
std::vector<Complex> envelope_samples(const EnvelopeSpec& spec, int n_terms);

/// Comb construction: psi(x) = sum_n M(nT+shift) W(x - nT - shift),
/// normalized, with the periodic sets attached. Replicas that do not fit on
/// the grid are dropped (no wrap-around).
JointEigenstate comb_construct(const EnvelopeSpec& spec, int n_terms,
                               const Grid& grid);

/// Same state assembled from Fourier-series coefficients of the periodized
/// momentum window, computed by an independent quadrature (composite Simpson
/// over supp M~). Cross-check path for comb_construct.
JointEigenstate fourier_series_construct(const EnvelopeSpec& spec,
                                         int n_coeffs, const Grid& grid);

/// |psi~(k)|^2 up to scale for the rect(a) + cosine(T') windows:
/// sinc^2(ak/2) cos^2(T' k_fold / 2) on the momentum set, 0 in the gaps,
/// where k_fold folds k into [-pi/T, pi/T).
double momentum_density_closed_form(double k, double a, double T,
                                    double Tprime);

/// Textbook two-slit intensity sinc^2(ak/2) cos^2(Tk/2), up to scale.
double double_slit_reference(double a, double T, double k);

struct Residuals {
  double position;  // || chi_X psi - psi ||
  double momentum;  // || chi_Y(P) psi - psi ||
};
Residuals residuals(const JointEigenstate& state);

}  // namespace mslit

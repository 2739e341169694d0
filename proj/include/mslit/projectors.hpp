#pragma once

#include "mslit/fourier.hpp"
#include "mslit/sets.hpp"

namespace mslit {

/// chi_X(Q): multiply a position-space state by the indicator of X.
Wavefunction project_position(const Wavefunction& psi,
                              const std::vector<double>& mask);
Wavefunction project_position(const Wavefunction& psi, const IntervalSet& X);
Wavefunction project_position(const Wavefunction& psi, const PeriodicSet& X);

/// chi_Y(P): conjugate the momentum-side indicator back to position space,
/// F^{-1} chi_Y F. Input and output are position-space.
Wavefunction project_momentum(const Wavefunction& psi,
                              const std::vector<double>& mask);
Wavefunction project_momentum(const Wavefunction& psi, const IntervalSet& Y);
Wavefunction project_momentum(const Wavefunction& psi, const PeriodicSet& Y);

/// ||psi_projected||^2 / ||psi||^2 for a position-side projection.
double transmitted_fraction(const Wavefunction& psi,
                            const std::vector<double>& mask);

/// || chi_X(Q) chi_Y(P) psi - chi_Y(P) chi_X(Q) psi ||.
/// Zero (to rounding) exactly when the two projectors commute on the grid.
double commutator_norm(const Wavefunction& psi,
                       const std::vector<double>& x_mask,
                       const std::vector<double>& y_mask);

/// chi_Y(P) chi_X(Q) psi: the joint filtering both projectors perform on a
/// state (order is immaterial exactly when they commute).
Wavefunction joint_project(const Wavefunction& psi,
                           const std::vector<double>& x_mask,
                           const std::vector<double>& y_mask);

}  // namespace mslit

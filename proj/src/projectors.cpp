#include "mslit/projectors.hpp"

namespace mslit {

namespace {

void check_mask(const Wavefunction& psi, const std::vector<double>& mask) {
  if (static_cast<int>(mask.size()) != psi.grid.n_points)
    throw std::invalid_argument("projector mask size does not match the grid");
}

}  // namespace

Wavefunction project_position(const Wavefunction& psi,
                              const std::vector<double>& mask) {
  if (psi.space != Space::Position)
    throw std::invalid_argument("project_position: need a position-space state");
  check_mask(psi, mask);
  Wavefunction out = psi;
  for (int j = 0; j < psi.grid.n_points; ++j) out.values[j] *= mask[j];
  return out;
}

Wavefunction project_position(const Wavefunction& psi, const IntervalSet& X) {
  return project_position(psi, realize(X, psi.grid));
}

Wavefunction project_position(const Wavefunction& psi, const PeriodicSet& X) {
  return project_position(psi, realize(X, psi.grid));
}

Wavefunction project_momentum(const Wavefunction& psi,
                              const std::vector<double>& mask) {
  if (psi.space != Space::Position)
    throw std::invalid_argument("project_momentum: need a position-space state");
  check_mask(psi, mask);
  Wavefunction tilde = fourier(psi);
  for (int m = 0; m < psi.grid.n_points; ++m) tilde.values[m] *= mask[m];
  return inverse_fourier(tilde);
}

Wavefunction project_momentum(const Wavefunction& psi, const IntervalSet& Y) {
  return project_momentum(psi, realize(Y, psi.grid.conjugate()));
}

Wavefunction project_momentum(const Wavefunction& psi, const PeriodicSet& Y) {
  return project_momentum(psi, realize(Y, psi.grid.conjugate()));
}

double transmitted_fraction(const Wavefunction& psi,
                            const std::vector<double>& mask) {
  double total = norm_sq(psi);
  if (!(total > 0.0)) throw std::invalid_argument("zero state");
  return norm_sq(project_position(psi, mask)) / total;
}

Wavefunction joint_project(const Wavefunction& psi,
                           const std::vector<double>& x_mask,
                           const std::vector<double>& y_mask) {
  return project_momentum(project_position(psi, x_mask), y_mask);
}

double commutator_norm(const Wavefunction& psi,
                       const std::vector<double>& x_mask,
                       const std::vector<double>& y_mask) {
  Wavefunction a = project_position(project_momentum(psi, y_mask), x_mask);
  Wavefunction b = project_momentum(project_position(psi, x_mask), y_mask);
  return distance(a, b);
}

}  // namespace mslit

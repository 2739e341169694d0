#pragma once

#include <string>
#include <vector>

#include "mslit/grid.hpp"

namespace mslit {

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool require_below = true;  // false: value must exceed the threshold
  bool pass = false;
};

struct ValidationOptions {
  unsigned seed = 1;
  /// Test hook: run the parity identity with a wrong-sign transform, which
  /// must make that check fail (mutation detection).
  bool flip_ft_sign = false;
};

/// Deterministic complex Gaussian state, normalized. Shared by the suite and
/// the tests.
Wavefunction random_state(const Grid& grid, unsigned seed);

/// Cross-module invariant suite: transform algebra, projector algebra,
/// commutation, eigenstate identities, pipeline bookkeeping, and the
/// far-field oracle comparison.
std::vector<Check> run_validation_suite(const ValidationOptions& options);

bool all_pass(const std::vector<Check>& checks);

}  // namespace mslit

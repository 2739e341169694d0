#pragma once

#include "mslit/grid.hpp"

namespace mslit {

/// Unitary Fourier transform in the f~(k) = (2pi)^{-1/2} \int f(x) e^{+ikx} dx
/// convention. Input must be position-space; the result lives on the
/// conjugate grid and is tagged momentum-space. Exactly unitary on the grid.
Wavefunction fourier(const Wavefunction& psi);

/// Inverse of fourier(); input must be momentum-space.
Wavefunction inverse_fourier(const Wavefunction& psi_tilde);

/// Spatial inversion x -> -x (circular reversal about the origin sample).
/// Coincides with the square of the Fourier transform.
Wavefunction parity(const Wavefunction& psi);

}  // namespace mslit

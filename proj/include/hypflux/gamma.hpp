#pragma once

#include <complex>

namespace hypflux {

/// Gamma function for complex argument, via a Lanczos series for
/// Re z >= 1/2 and the reflection formula elsewhere.  Relative accuracy is
/// better than 1e-13 on the strip |Im z| <= 50.  Throws DomainError at the
/// poles (non-positive integers).
std::complex<double> gamma_complex(std::complex<double> z);

} // namespace hypflux

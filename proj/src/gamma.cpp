#include "hypflux/gamma.hpp"

#include <cmath>

#include "hypflux/errors.hpp"

namespace hypflux {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set), good to about
// fifteen significant digits in double precision.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

std::complex<double> lanczos_gamma(std::complex<double> z) {
    // Valid for Re z >= 0.5.
    z -= 1.0;
    std::complex<double> series = kLanczos[0];
    for (int i = 1; i < 9; ++i) series += kLanczos[i] / (z + double(i));
    const std::complex<double> t = z + (kLanczosG + 0.5);
    const double sqrt_two_pi = 2.5066282746310002;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

} // namespace

std::complex<double> gamma_complex(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 &&
        z.real() == std::floor(z.real()))
        throw DomainError("gamma_complex: pole at non-positive integer");

    if (z.real() >= 0.5) return lanczos_gamma(z);

    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
    const double pi = M_PI;
    const std::complex<double> sin_piz = std::sin(pi * z);
    return pi / (sin_piz * lanczos_gamma(1.0 - z));
}

} // namespace hypflux

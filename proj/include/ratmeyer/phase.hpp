#pragma once

#include <complex>

#include "ratmeyer/rational.hpp"

namespace ratmeyer {

// e^{2 pi i r} with the argument reduced mod 1 exactly before going to
// floating point.
inline std::complex<double> unit_phase(const Rational& r) {
    Rational f = r - Rational(r.floor());
    return std::polar(1.0, 6.28318530717958647692 * f.to_double());
}

} // namespace ratmeyer

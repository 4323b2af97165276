#ifndef SIGMA_TEST_UTIL_HPP
#define SIGMA_TEST_UTIL_HPP

#include <cmath>

#include "sigma/enclosure.hpp"

// Containment of a double literal up to double-rounding slack. Certified
// enclosures are often tighter than one double ulp, so exact containment of
// a rounded literal is too strict a test.
inline bool contains_d(const sigma::Enclosure& e, double x, double slack = 1e-15) {
    double pad = slack * (1.0 + std::fabs(x));
    return e.lo_d() <= x + pad && e.hi_d() >= x - pad;
}

#endif

#pragma once

#include <cmath>
#include <complex>

#include <doctest.h>

#include "poly.hpp"

namespace bnineq::testing {

inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

inline bool close(cplx a, cplx b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

inline void check_poly_close(const Poly& got, const Poly& want, double tol = 1e-12) {
    REQUIRE(got.degree() == want.degree());
    for (int j = 0; j <= want.degree(); ++j) {
        INFO("coefficient ", j);
        CHECK(close(got.coeff(j), want.coeff(j), tol));
    }
}

// power-sum evaluation, the independent route against Horner
inline cplx naive_eval(const Poly& p, cplx z) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j <= p.degree(); ++j) {
        cplx term = p.coeff(j);
        for (int i = 0; i < j; ++i) term *= z;
        acc += term;
    }
    return acc;
}

} // namespace bnineq::testing

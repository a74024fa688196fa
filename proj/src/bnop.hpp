#pragma once

#include <vector>

#include "poly.hpp"

namespace bnineq {

/// The three-term differential operator
///
///   B[P](z) = lambda0*P(z) + lambda1*(n z / 2)*P'(z)
///           + lambda2*(n z / 2)^2 * P''(z) / 2
///
/// acting on polynomials of degree at most n. A coefficient triple is
/// admissible when every zero u of
///
///   U(z) = lambda0 + n*lambda1*z + (n(n-1)/2)*lambda2*z^2
///
/// lies in the closed half plane |u| <= |u - n/2|. Construction goes
/// through validate() only, so every live instance is admissible.
class BnOperator {
public:
    /// Certifies the admissibility condition (boundary admitted with a
    /// 1e-12 absolute tolerance on |u| - |u - n/2|) and returns the
    /// operator. Throws InvalidArgument with the offending zero and its
    /// margin otherwise. A nonzero constant U is vacuously admissible;
    /// U identically zero is rejected.
    static BnOperator validate(cplx lambda0, cplx lambda1, cplx lambda2, int n);

    /// B[p]; requires degree(p) <= n. Diagonal in the monomial basis:
    /// the z^j coefficient is multiplied by
    /// lambda0 + lambda1*n*j/2 + lambda2*n^2*j(j-1)/8.
    Poly apply(const Poly& p) const;

    /// m with B[z^n] = m * z^n, i.e. lambda0 + lambda1*n^2/2
    /// + lambda2*n^3(n-1)/8. Nonzero for every admissible operator
    /// (it equals U(n/2), and n/2 is excluded from the half plane).
    cplx monomial_image() const;

    int n() const { return n_; }
    cplx lambda0() const { return lambda0_; }
    cplx lambda1() const { return lambda1_; }
    cplx lambda2() const { return lambda2_; }

    /// Zeros of U(z) for the given triple (0, 1 or 2 entries; the actual
    /// degree of U depends on n as well as on the lambdas). Throws
    /// InvalidArgument when U vanishes identically.
    static std::vector<cplx> admissibility_zeros(cplx lambda0, cplx lambda1, cplx lambda2, int n);

    bool operator==(const BnOperator& other) const = default;

private:
    BnOperator(cplx l0, cplx l1, cplx l2, int n)
        : lambda0_(l0), lambda1_(l1), lambda2_(l2), n_(n) {}

    cplx lambda0_, lambda1_, lambda2_;
    int n_;
};

} // namespace bnineq

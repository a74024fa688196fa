#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bnineq {

using cplx = std::complex<double>;

/// Complex polynomial a0 + a1*z + ... + an*z^n, coefficients stored in
/// ascending degree. The zero polynomial is represented as degree 0 with
/// coefficient list {0}; any other polynomial has a nonzero leading
/// coefficient. Instances are immutable after construction.
class Poly {
public:
    /// The zero polynomial.
    Poly() : coeffs_{cplx{0.0, 0.0}} {}

    /// Takes ownership of an ascending coefficient list. Trailing
    /// coefficients below 1e-14 * max|a_j| are trimmed so that cancellation
    /// (e.g. from linear_combine) cannot leave a spurious degree.
    explicit Poly(std::vector<cplx> coeffs);

    static Poly constant(cplx c);
    /// scale * z^degree
    static Poly monomial(int degree, cplx scale = cplx{1.0, 0.0});
    /// leading * prod_j (z - roots[j]); throws InvalidArgument on leading == 0.
    static Poly from_roots(cplx leading, std::span<const cplx> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx{0.0, 0.0}; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    /// Coefficient of z^j, zero outside the stored range.
    cplx coeff(int j) const;
    cplx leading() const { return coeffs_.back(); }
    double max_abs_coeff() const;

    /// Horner evaluation of p(z).
    cplx eval(cplx z) const;

    /// Formal derivative; derivative of a constant is the zero polynomial.
    Poly derivative() const;

    /// q(z) = z^n * conj(p(1 / conj(z))), i.e. coefficients reversed within
    /// the ambient space of degree-at-most-n polynomials and conjugated:
    /// b_j = conj(a_{n-j}). Requires ambient_degree >= degree().
    /// |q(z)| = |p(z)| on the unit circle.
    Poly conj_reciprocal(int ambient_degree) const;

    /// p(c*z): coefficient j scaled by c^j.
    Poly scale_compose(cplx c) const;

    bool operator==(const Poly& other) const = default;

private:
    std::vector<cplx> coeffs_; // never empty
};

/// Coefficientwise a*p + b*q with trailing-zero trimming.
Poly linear_combine(cplx a, const Poly& p, cplx b, const Poly& q);

/// x^n by repeated multiplication (n >= 0). Used instead of std::pow so
/// that every module computes the k^n / R^n / r^n factors identically.
double ipow(double x, int n);
cplx ipow(cplx x, int n);

} // namespace bnineq

#include "bnop.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace bnineq {

std::vector<cplx> BnOperator::admissibility_zeros(cplx lambda0, cplx lambda1, cplx lambda2, int n) {
    const cplx c0 = lambda0;
    const cplx c1 = static_cast<double>(n) * lambda1;
    const cplx c2 = (static_cast<double>(n) * (n - 1) / 2.0) * lambda2;
    const cplx zero{0.0, 0.0};

    if (c2 != zero) {
        // Stable quadratic: pick the sign that avoids cancellation in
        // -c1 -/+ sqrt(disc), then use the root product c0/c2.
        const cplx disc = c1 * c1 - 4.0 * c0 * c2;
        cplx sq = std::sqrt(disc);
        if (std::real(std::conj(c1) * sq) < 0.0) sq = -sq;
        const cplx q = -0.5 * (c1 + sq);
        if (q == zero) return {zero, zero}; // c1 = 0 and disc = 0 => U = c2 z^2
        return {q / c2, c0 / q};
    }
    if (c1 != zero) return {-c0 / c1};
    if (c0 != zero) return {};
    throw InvalidArgument("operator: U(z) vanishes identically; no admissibility condition to satisfy");
}

BnOperator BnOperator::validate(cplx lambda0, cplx lambda1, cplx lambda2, int n) {
    if (n < 1) throw InvalidArgument("operator: n must be >= 1");
    const double half_n = static_cast<double>(n) / 2.0;
    for (const cplx& u : admissibility_zeros(lambda0, lambda1, lambda2, n)) {
        const double margin = std::abs(u) - std::abs(u - half_n);
        if (margin > 1e-12) {
            std::ostringstream msg;
            msg << "operator: zero u = (" << u.real() << ", " << u.imag()
                << ") of U(z) lies outside the half plane |z| <= |z - n/2|; margin " << margin;
            throw InvalidArgument(msg.str());
        }
    }
    return BnOperator(lambda0, lambda1, lambda2, n);
}

Poly BnOperator::apply(const Poly& p) const {
    if (p.degree() > n_)
        throw InvalidArgument("operator: polynomial degree " + std::to_string(p.degree()) +
                              " exceeds operator n = " + std::to_string(n_));
    const double nd = static_cast<double>(n_);
    std::vector<cplx> out(p.coeffs().size());
    for (size_t j = 0; j < out.size(); ++j) {
        const double jd = static_cast<double>(j);
        out[j] = p.coeffs()[j] *
                 (lambda0_ + lambda1_ * (nd * jd / 2.0) + lambda2_ * (nd * nd * jd * (jd - 1.0) / 8.0));
    }
    return Poly(std::move(out));
}

cplx BnOperator::monomial_image() const {
    const double nd = static_cast<double>(n_);
    return lambda0_ + lambda1_ * (nd * nd / 2.0) + lambda2_ * (nd * nd * nd * (nd - 1.0) / 8.0);
}

} // namespace bnineq

#include "poly.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace bnineq {

namespace {

void trim_trailing(std::vector<cplx>& c) {
    double top = 0.0;
    for (const cplx& a : c) top = std::max(top, std::abs(a));
    if (top == 0.0) {
        c.assign(1, cplx{0.0, 0.0});
        return;
    }
    const double cutoff = 1e-14 * top;
    while (c.size() > 1 && std::abs(c.back()) <= cutoff) c.pop_back();
    if (c.size() == 1 && std::abs(c[0]) <= cutoff) c[0] = cplx{0.0, 0.0};
}

} // namespace

Poly::Poly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, cplx{0.0, 0.0});
    trim_trailing(coeffs_);
}

Poly Poly::constant(cplx c) {
    Poly p;
    p.coeffs_.assign(1, c);
    return p;
}

Poly Poly::monomial(int degree, cplx scale) {
    if (degree < 0) throw InvalidArgument("monomial: negative degree");
    if (scale == cplx{0.0, 0.0}) return Poly{};
    Poly p;
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, cplx{0.0, 0.0});
    p.coeffs_.back() = scale;
    return p;
}

Poly Poly::from_roots(cplx leading, std::span<const cplx> roots) {
    if (leading == cplx{0.0, 0.0})
        throw InvalidArgument("from_roots: leading coefficient must be nonzero");
    std::vector<cplx> c{leading};
    for (const cplx& root : roots) {
        c.push_back(c.back());
        for (size_t j = c.size() - 2; j > 0; --j) c[j] = c[j - 1] - root * c[j];
        c[0] = -root * c[0];
    }
    Poly p;
    p.coeffs_ = std::move(c); // leading is exact; skip trimming
    return p;
}

cplx Poly::coeff(int j) const {
    if (j < 0 || j > degree()) return cplx{0.0, 0.0};
    return coeffs_[static_cast<size_t>(j)];
}

double Poly::max_abs_coeff() const {
    double top = 0.0;
    for (const cplx& a : coeffs_) top = std::max(top, std::abs(a));
    return top;
}

cplx Poly::eval(cplx z) const {
    cplx acc = coeffs_.back();
    for (size_t j = coeffs_.size() - 1; j > 0; --j) acc = acc * z + coeffs_[j - 1];
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() == 1) return Poly{};
    std::vector<cplx> c(coeffs_.size() - 1);
    for (size_t j = 1; j < coeffs_.size(); ++j) c[j - 1] = static_cast<double>(j) * coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::conj_reciprocal(int ambient_degree) const {
    if (ambient_degree < degree())
        throw InvalidArgument("conj_reciprocal: ambient degree " + std::to_string(ambient_degree) +
                              " below polynomial degree " + std::to_string(degree()));
    std::vector<cplx> c(static_cast<size_t>(ambient_degree) + 1);
    for (int j = 0; j <= ambient_degree; ++j) c[static_cast<size_t>(j)] = std::conj(coeff(ambient_degree - j));
    return Poly(std::move(c));
}

Poly Poly::scale_compose(cplx c) const {
    std::vector<cplx> out(coeffs_.size());
    cplx power{1.0, 0.0};
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        out[j] = coeffs_[j] * power;
        power *= c;
    }
    return Poly(std::move(out));
}

Poly linear_combine(cplx a, const Poly& p, cplx b, const Poly& q) {
    const size_t len = std::max(p.coeffs().size(), q.coeffs().size());
    std::vector<cplx> c(len);
    for (size_t j = 0; j < len; ++j)
        c[j] = a * p.coeff(static_cast<int>(j)) + b * q.coeff(static_cast<int>(j));
    return Poly(std::move(c));
}

double ipow(double x, int n) {
    double acc = 1.0;
    for (int i = 0; i < n; ++i) acc *= x;
    return acc;
}

cplx ipow(cplx x, int n) {
    cplx acc{1.0, 0.0};
    for (int i = 0; i < n; ++i) acc *= x;
    return acc;
}

} // namespace bnineq

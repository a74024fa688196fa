#include "circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "errors.hpp"

namespace bnineq {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double abs2_at(const Poly& p, double k, double theta) {
    const cplx v = p.eval(std::polar(k, theta));
    return std::norm(v);
}

// Golden-section search for an extremum of |p|^2 on [lo, hi].
// maximize=true looks for a maximum. Returns (theta, |p|^2).
std::pair<double, double> golden_refine(const Poly& p, double k, double lo, double hi,
                                        bool maximize) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = abs2_at(p, k, x1);
    double f2 = abs2_at(p, k, x2);
    for (int it = 0; it < 90 && hi - lo > 1e-14; ++it) {
        const bool keep_left = maximize ? (f1 > f2) : (f1 < f2);
        if (keep_left) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = abs2_at(p, k, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = abs2_at(p, k, x2);
        }
    }
    const bool pick1 = maximize ? (f1 > f2) : (f1 < f2);
    return pick1 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

CircleExtremum circle_extremum(const Poly& p, double k, double tol, bool maximize) {
    if (k <= 0.0) throw InvalidArgument("circle extremum: radius k must be positive");
    if (tol <= 0.0) throw InvalidArgument("circle extremum: tol must be positive");

    CircleExtremum out;
    out.radius = k;
    out.kind = maximize ? CircleExtremum::Kind::Max : CircleExtremum::Kind::Min;

    if (p.degree() == 0) {
        out.value = std::abs(p.coeffs()[0]);
        out.theta = 0.0;
        return out;
    }

    const int grid = std::max(4096, 256 * p.degree());
    const double step = two_pi / grid;
    std::vector<double> f(static_cast<size_t>(grid));
    for (int i = 0; i < grid; ++i) f[static_cast<size_t>(i)] = abs2_at(p, k, i * step);

    // Rank the grid-local extrema; the winning lobe always contributes one.
    std::vector<int> locals;
    for (int i = 0; i < grid; ++i) {
        const double prev = f[static_cast<size_t>((i + grid - 1) % grid)];
        const double next = f[static_cast<size_t>((i + 1) % grid)];
        const bool is_local = maximize ? (f[static_cast<size_t>(i)] >= prev && f[static_cast<size_t>(i)] >= next)
                                       : (f[static_cast<size_t>(i)] <= prev && f[static_cast<size_t>(i)] <= next);
        if (is_local) locals.push_back(i);
    }
    auto better = [&](int a, int b) {
        return maximize ? f[static_cast<size_t>(a)] > f[static_cast<size_t>(b)]
                        : f[static_cast<size_t>(a)] < f[static_cast<size_t>(b)];
    };
    std::sort(locals.begin(), locals.end(), better);

    // Refine the leading brackets. A degree-n trigonometric polynomial has
    // at most n lobes of each kind, so the cap covers every genuine lobe;
    // the surplus grid-local extrema of near-flat moduli are value ties.
    const size_t refine_count =
        std::min(locals.size(), static_cast<size_t>(std::max(5, 4 * p.degree() + 8)));

    double best_theta = locals.front() * step;
    double best_f = f[static_cast<size_t>(locals.front())];
    for (size_t idx = 0; idx < refine_count; ++idx) {
        const double center = locals[idx] * step;
        auto [theta, fv] = golden_refine(p, k, center - step, center + step, maximize);
        const bool improves = maximize ? (fv > best_f) : (fv < best_f);
        if (improves) {
            best_f = fv;
            best_theta = theta;
        }
    }

    best_theta = std::fmod(best_theta, two_pi);
    if (best_theta < 0.0) best_theta += two_pi;
    out.value = std::sqrt(best_f);
    out.theta = best_theta;
    return out;
}

} // namespace

CircleExtremum max_modulus(const Poly& p, double k, double tol) {
    return circle_extremum(p, k, tol, true);
}

CircleExtremum min_modulus(const Poly& p, double k, double tol) {
    return circle_extremum(p, k, tol, false);
}

namespace {

// p(z) and p'(z) in one Horner sweep.
std::pair<cplx, cplx> eval_with_derivative(const std::vector<cplx>& c, cplx z) {
    cplx v = c.back();
    cplx d{0.0, 0.0};
    for (size_t j = c.size() - 1; j > 0; --j) {
        d = d * z + v;
        v = v * z + c[j - 1];
    }
    return {v, d};
}

double residual_scale(const std::vector<cplx>& c, double az) {
    double s = 0.0;
    double pw = 1.0;
    for (const cplx& a : c) {
        s += std::abs(a) * pw;
        pw *= az;
    }
    return s;
}

// Newton steps with long-double Horner. Double-precision Aberth stalls at
// eps * cond, which crosses the 1e-9*k disk-classification band once the
// degree grows; two polished steps push simple roots well back under it.
void polish_roots(const std::vector<cplx>& c, std::vector<cplx>& roots) {
    using lcplx = std::complex<long double>;
    std::vector<lcplx> cl(c.begin(), c.end());
    for (cplx& root : roots) {
        lcplx z{root.real(), root.imag()};
        for (int it = 0; it < 2; ++it) {
            lcplx v = cl.back();
            lcplx d{0.0L, 0.0L};
            for (size_t j = cl.size() - 1; j > 0; --j) {
                d = d * z + v;
                v = v * z + cl[j - 1];
            }
            if (d == lcplx{0.0L, 0.0L}) break;
            const lcplx step = v / d;
            // a large step means a multiple-root cluster; leave those alone
            if (std::abs(step) > 1e-6L * (1.0L + std::abs(z))) break;
            z -= step;
        }
        root = cplx{static_cast<double>(z.real()), static_cast<double>(z.imag())};
    }
}

} // namespace

std::vector<cplx> find_roots(const Poly& p) {
    if (p.degree() < 1) throw InvalidArgument("find_roots: degree must be >= 1");

    // Exact zeros at the origin come out as a factor of z^m.
    std::vector<cplx> c = p.coeffs();
    std::vector<cplx> roots;
    while (c.size() > 1 && c.front() == cplx{0.0, 0.0}) {
        roots.emplace_back(0.0, 0.0);
        c.erase(c.begin());
    }
    const int m = static_cast<int>(c.size()) - 1;
    if (m == 0) return roots;

    // Fujiwara's bound 2 max_j |a_{m-j}/a_m|^{1/j} tracks the outermost root
    // within a factor of 2. The looser 1 + max|a_j/a_m| Cauchy radius grows
    // like the root product, and from there the far-field contraction per
    // sweep is only (1 - 1/m): degree ~23 inputs already blow the sweep cap.
    const double log_lead = std::log(std::abs(c.back()));
    double log_bound = -std::numeric_limits<double>::infinity();
    for (size_t j = 0; j + 1 < c.size(); ++j) {
        if (c[j] == cplx{0.0, 0.0}) continue;
        const size_t depth = c.size() - 1 - j;
        log_bound = std::max(log_bound,
                             (std::log(std::abs(c[j])) - log_lead) / static_cast<double>(depth));
    }
    const double r0 = 0.9 * 2.0 * std::exp(log_bound);

    std::vector<cplx> z(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        z[static_cast<size_t>(i)] = std::polar(r0, two_pi * (i + 0.25) / m + 0.5378 / m);

    const double eps = std::numeric_limits<double>::epsilon();
    const double stop = 64.0 * static_cast<double>(m) * eps;

    for (int sweep = 0; sweep < 200; ++sweep) {
        bool all_done = true;
        double max_step = 0.0;
        for (int i = 0; i < m; ++i) {
            auto& zi = z[static_cast<size_t>(i)];
            const auto [pv, pd] = eval_with_derivative(c, zi);
            if (std::abs(pv) <= stop * residual_scale(c, std::abs(zi))) continue;
            all_done = false;

            cplx newton = (pd != cplx{0.0, 0.0}) ? pv / pd : cplx{0.0, 0.0};
            cplx repulsion{0.0, 0.0};
            for (int j = 0; j < m; ++j) {
                if (j == i) continue;
                cplx diff = zi - z[static_cast<size_t>(j)];
                if (diff == cplx{0.0, 0.0}) diff = cplx{1e-12 * (1.0 + std::abs(zi)), 0.0};
                repulsion += 1.0 / diff;
            }
            cplx step;
            if (pd == cplx{0.0, 0.0}) {
                // stationary point: nudge off it
                step = cplx{-1e-3 * (1.0 + std::abs(zi)), 1e-3};
            } else {
                const cplx denom = 1.0 - newton * repulsion;
                step = (denom == cplx{0.0, 0.0}) ? newton : newton / denom;
            }
            zi -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zi)));
        }
        if (all_done) {
            polish_roots(c, z);
            roots.insert(roots.end(), z.begin(), z.end());
            return roots;
        }
        // Stagnation at the rounding floor of a tight cluster counts as
        // converged: the residual criterion is rechecked below.
        if (sweep > 20 && max_step < 1e-15) break;
    }

    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        const auto [pv, pd] = eval_with_derivative(c, z[static_cast<size_t>(i)]);
        (void)pd;
        const double rel = std::abs(pv) / residual_scale(c, std::abs(z[static_cast<size_t>(i)]));
        worst = std::max(worst, rel);
    }
    if (worst <= 256.0 * static_cast<double>(m) * eps) {
        polish_roots(c, z);
        roots.insert(roots.end(), z.begin(), z.end());
        return roots;
    }
    std::ostringstream msg;
    msg << "find_roots: no convergence after 200 sweeps (degree " << p.degree()
        << ", worst relative residual " << worst << ")";
    throw ConvergenceError(msg.str());
}

bool all_zeros_in_closed_disk(const Poly& p, double k) {
    if (k <= 0.0) throw InvalidArgument("all_zeros_in_closed_disk: k must be positive");
    const double band = 1e-9 * k;
    for (const cplx& root : find_roots(p))
        if (std::abs(root) > k + band) return false;
    return true;
}

bool no_zeros_in_open_disk(const Poly& p, double k) {
    if (k <= 0.0) throw InvalidArgument("no_zeros_in_open_disk: k must be positive");
    const double band = 1e-9 * k;
    for (const cplx& root : find_roots(p))
        if (std::abs(root) < k - band) return false;
    return true;
}

} // namespace bnineq

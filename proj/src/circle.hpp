#pragma once

#include <vector>

#include "poly.hpp"

namespace bnineq {

/// Extremum of |p| over the circle |z| = radius.
struct CircleExtremum {
    enum class Kind { Max, Min };
    double value = 0.0;  // |p(radius * e^{i theta})|
    double theta = 0.0;  // in [0, 2*pi)
    double radius = 0.0;
    Kind kind = Kind::Max;
};

/// Global maximum of |p| on |z| = k to relative accuracy tol (value within
/// tol*(1+value) of the supremum). Uniform angular grid of
/// max(4096, 256*degree) points followed by golden-section refinement of
/// the leading local-maximum brackets; |p(k e^{i theta})|^2 is a
/// trigonometric polynomial of degree n, so the grid cannot skip a lobe.
CircleExtremum max_modulus(const Poly& p, double k, double tol = 1e-9);

/// Global minimum of |p| on |z| = k; same scheme on the local minima.
CircleExtremum min_modulus(const Poly& p, double k, double tol = 1e-9);

/// All degree-many roots (with multiplicity) by Aberth-Ehrlich simultaneous
/// iteration. Initial points sit on a circle at 0.9 times the Fujiwara root
/// bound 2*max_j |a_{n-j}/a_n|^{1/j} with an angular offset; exact zero
/// coefficients at the bottom are factored out first, and converged roots
/// get a long-double Newton polish. Residual target per root:
/// |p(root)| <= 64*n*eps * sum_j |a_j||root|^j.
/// Throws InvalidArgument for degree 0 and ConvergenceError (with the worst
/// residual) if the cap of 200 sweeps is reached.
std::vector<cplx> find_roots(const Poly& p);

/// True iff every root modulus is <= k + band with band = 1e-9*k; roots
/// inside the band count as lying on the circle.
bool all_zeros_in_closed_disk(const Poly& p, double k);

/// True iff every root modulus is >= k - band; boundary roots allowed.
bool no_zeros_in_open_disk(const Poly& p, double k);

} // namespace bnineq

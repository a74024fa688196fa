#include <doctest.h>

#include <vector>

#include "bnop.hpp"
#include "circle.hpp"
#include "errors.hpp"
#include "harness.hpp"
#include "test_util.hpp"

using namespace bnineq;
using namespace bnineq::testing;

namespace {
const cplx zero{0.0, 0.0};
const cplx one{1.0, 0.0};

BnOperator identity(int n) { return BnOperator::validate(one, zero, zero, n); }

// z * p'(z): coefficient j is j * p_j
Poly z_times_derivative(const Poly& p) {
    std::vector<cplx> c(p.coeffs().size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = static_cast<double>(j) * p.coeffs()[j];
    return Poly(c);
}
} // namespace

TEST_CASE("validate accepts the admissible triples") {
    CHECK_NOTHROW(BnOperator::validate(one, zero, zero, 3)); // U constant, vacuous
    CHECK_NOTHROW(BnOperator::validate(zero, one, zero, 2)); // U = 2z, zero at origin
    CHECK_NOTHROW(BnOperator::validate(zero, zero, one, 2)); // U = z^2
    CHECK_NOTHROW(BnOperator::validate(cplx{0.0, 0.7}, cplx{-0.2, 0.1}, cplx{0.3, 0.3}, 4));
}

TEST_CASE("validate rejects zeros outside the half plane") {
    // U = z - 1 has its zero at 1, and |1| > |1 - 1| = 0
    CHECK_THROWS_AS(BnOperator::validate(cplx{-1.0, 0.0}, cplx{0.5, 0.0}, zero, 2),
                    InvalidArgument);
    try {
        BnOperator::validate(cplx{-1.0, 0.0}, cplx{0.5, 0.0}, zero, 2);
        FAIL("expected a rejection");
    } catch (const InvalidArgument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("margin 1") != std::string::npos); // |u| - |u - n/2| = 1
        CHECK(msg.find("(1") != std::string::npos);       // the zero u = 1
    }
}

TEST_CASE("validate admits zeros exactly on the boundary |u| = |u - n/2|") {
    for (int n : {1, 2, 5}) {
        // U = lambda0 + z with lambda0 = -n/4 places the zero at n/4
        const cplx l0{-static_cast<double>(n) / 4.0, 0.0};
        const cplx l1{1.0 / n, 0.0};
        CHECK_NOTHROW(BnOperator::validate(l0, l1, zero, n));
    }
}

TEST_CASE("validate rejects degenerate triples") {
    CHECK_THROWS_AS(BnOperator::validate(zero, zero, zero, 3), InvalidArgument);
    // for n = 1 the quadratic coefficient of U vanishes, so U is identically 0
    CHECK_THROWS_AS(BnOperator::validate(zero, zero, one, 1), InvalidArgument);
    CHECK_THROWS_AS(BnOperator::validate(one, zero, zero, 0), InvalidArgument);
}

TEST_CASE("admissibility_zeros solves the stable quadratic") {
    // n = 2: U = lambda2 z^2 + 2 lambda1 z + lambda0; pick roots {1, 2}
    const auto zs = BnOperator::admissibility_zeros(cplx{2.0, 0.0}, cplx{-1.5, 0.0}, one, 2);
    REQUIRE(zs.size() == 2);
    const double to_one = std::min(std::abs(zs[0] - one), std::abs(zs[1] - one));
    const double to_two =
        std::min(std::abs(zs[0] - cplx{2.0, 0.0}), std::abs(zs[1] - cplx{2.0, 0.0}));
    CHECK(to_one <= 1e-14);
    CHECK(to_two <= 1e-14);

    // widely separated magnitudes must not lose the small root to cancellation
    const auto far = BnOperator::admissibility_zeros(cplx{1e-8, 0.0}, cplx{0.5, 0.0}, one, 2);
    REQUIRE(far.size() == 2);
    CHECK(close(std::min(std::abs(far[0]), std::abs(far[1])), 1e-8, 1e-10));
}

TEST_CASE("apply reproduces the hand expansions") {
    const Poly z2 = Poly::monomial(2);

    check_poly_close(identity(2).apply(z2), z2);
    const Poly p{std::vector<cplx>{cplx{2, 1}, cplx{0, -3}, cplx{4, 0}, cplx{1, 1}}};
    check_poly_close(identity(3).apply(p), p);

    // (1,1,0) on z^2 with n = 2: z^2 + (2z/2)(2z) = 3z^2
    check_poly_close(BnOperator::validate(one, one, zero, 2).apply(z2), Poly::monomial(2, 3.0));

    // (0,0,1) on z^2 with n = 2: (z)^2 * 2 / 2 = z^2
    check_poly_close(BnOperator::validate(zero, zero, one, 2).apply(z2), z2);

    CHECK(identity(2).apply(Poly{}).is_zero());
    CHECK_THROWS_AS(identity(2).apply(Poly::monomial(3)), InvalidArgument);
}

TEST_CASE("monomial_image") {
    CHECK(identity(5).monomial_image() == one);
    CHECK(BnOperator::validate(one, one, zero, 2).monomial_image() == cplx{3.0, 0.0});
    CHECK(BnOperator::validate(zero, zero, one, 2).monomial_image() == one);
}

TEST_CASE("apply on z^n has the single coefficient monomial_image") {
    Rng rng(201);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(8));
        const BnOperator b = gen_operator(n, rng);
        const Poly image = b.apply(Poly::monomial(n));
        REQUIRE(image.degree() == n);
        CHECK(close(image.coeff(n), b.monomial_image(), 1e-12));
        for (int j = 0; j < n; ++j) CHECK(image.coeff(j) == zero);
        CHECK(std::abs(b.monomial_image()) > 0.0); // never degenerate for admissible triples
    }
}

TEST_CASE("apply is linear") {
    Rng rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(8));
        const BnOperator b = gen_operator(n, rng);
        const Poly p = gen_poly_zeros_in_disk(n, 1.5, rng);
        const Poly q = gen_poly_zeros_in_disk(
            1 + static_cast<int>(rng.pick(static_cast<std::uint32_t>(n))), 1.5, rng);
        const cplx a = 2.0 * rng.unit_disk();
        const cplx c = 2.0 * rng.unit_disk();
        const Poly lhs = b.apply(linear_combine(a, p, c, q));
        const Poly rhs = linear_combine(a, b.apply(p), c, b.apply(q));
        REQUIRE(lhs.degree() == rhs.degree());
        for (int j = 0; j <= lhs.degree(); ++j) CHECK(close(lhs.coeff(j), rhs.coeff(j), 1e-12));
    }
}

TEST_CASE("the derivative-type triple recovers z P'(z)") {
    Rng rng(203);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(8));
        const BnOperator b = BnOperator::validate(zero, cplx{2.0 / n, 0.0}, zero, n);
        const Poly p = gen_poly_zeros_in_disk(n, 1.0, rng);
        check_poly_close(b.apply(p), z_times_derivative(p), 1e-13);
    }
}

TEST_CASE("operators preserve zero location in |z| <= k") {
    Rng rng(204);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(6));
        const double k = rng.uniform(0.4, 2.0);
        const BnOperator b = gen_operator(n, rng);
        const Poly p = gen_poly_zeros_in_disk(n, k, rng);
        for (const cplx& root : find_roots(b.apply(p))) CHECK(std::abs(root) <= k + 1e-7);
    }
}

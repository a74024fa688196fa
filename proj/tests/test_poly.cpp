#include <doctest.h>

#include <complex>
#include <vector>

#include "errors.hpp"
#include "harness.hpp"
#include "poly.hpp"
#include "test_util.hpp"

using namespace bnineq;
using namespace bnineq::testing;

namespace {
const cplx I{0.0, 1.0};

Poly make(std::vector<cplx> c) { return Poly(std::move(c)); }
} // namespace

TEST_CASE("eval matches hand values and the power-sum route") {
    CHECK(make({0, 0, 1}).eval(2.0 * I) == cplx{-4.0, 0.0}); // z^2 at 2i
    CHECK(make({1, 1}).eval(cplx{-1.0, 0.0}) == cplx{0.0, 0.0});

    const Poly p = make({I, 0, 2}); // 2z^2 + i
    const cplx at = p.eval(cplx{1.0, 1.0});
    CHECK(close(at, cplx{0.0, 5.0}, 1e-15));
    CHECK(close(at, naive_eval(p, cplx{1.0, 1.0}), 1e-14));

    CHECK(make({cplx{3.5, -2.0}}).eval(cplx{100.0, 7.0}) == cplx{3.5, -2.0}); // exact for degree 0
}

TEST_CASE("eval equals the power-sum route on random inputs") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(8));
        std::vector<cplx> c(static_cast<size_t>(n) + 1);
        for (cplx& a : c) a = 2.0 * rng.unit_disk();
        const Poly p(c);
        const cplx z = 2.5 * rng.unit_disk();
        CHECK(close(p.eval(z), naive_eval(p, z), 1e-12));
    }
}

TEST_CASE("derivative") {
    check_poly_close(make({0, 0, 1}).derivative(), make({0, 2}));
    CHECK(make({5}).derivative().is_zero());
    check_poly_close(make({0, I, 0, 2}).derivative(), make({I, 0, 6})); // 2z^3 + iz
}

TEST_CASE("derivative agrees with a central difference away from roots") {
    Rng rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(6));
        const Poly p = gen_poly_zeros_in_disk(n, 1.0, rng);
        const Poly dp = p.derivative();
        // evaluation point well outside the root disk
        const cplx z = std::polar(2.0 + rng.uniform(), 6.28 * rng.uniform());
        const cplx h = std::polar(1e-6, 6.28 * rng.uniform());
        const cplx fd = (p.eval(z + h) - p.eval(z - h)) / (2.0 * h);
        CHECK(close(dp.eval(z), fd, 1e-5));
    }
}

TEST_CASE("conj_reciprocal") {
    for (int n = 1; n <= 5; ++n) check_poly_close(Poly::monomial(n).conj_reciprocal(n), make({1}));

    const Poly p = make({I, 0, 2}); // 2z^2 + i
    check_poly_close(p.conj_reciprocal(2), make({2, 0, -I}));
    check_poly_close(p.conj_reciprocal(2).conj_reciprocal(2), p); // involution
    CHECK_THROWS_AS(p.conj_reciprocal(1), InvalidArgument);
}

TEST_CASE("conj_reciprocal preserves the modulus on the unit circle") {
    Rng rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(8));
        std::vector<cplx> c(static_cast<size_t>(n) + 1);
        for (cplx& a : c) a = rng.unit_disk();
        c[0] += cplx{1.5, 0.0}; // keep a0 != 0 so the ambient degree is attained
        const Poly p(c);
        const Poly q = p.conj_reciprocal(n);
        const cplx z = rng.unit_circle();
        CHECK(close(std::abs(q.eval(z)), std::abs(p.eval(z)), 1e-12));
        check_poly_close(q.conj_reciprocal(n), p, 1e-13);
    }
}

TEST_CASE("scale_compose") {
    check_poly_close(make({1, 0, 1}).scale_compose(cplx{2.0, 0.0}), make({1, 0, 4}));
    const Poly p = make({I, 3, 2});
    check_poly_close(p.scale_compose(cplx{1.0, 0.0}), p);
    // the R/k^2 map at R=2, k=1 doubles the slope of z + 2
    check_poly_close(make({2, 1}).scale_compose(cplx{2.0, 0.0}), make({2, 2}));
}

TEST_CASE("scale_compose evaluation identity on random inputs") {
    Rng rng(104);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(8));
        std::vector<cplx> c(static_cast<size_t>(n) + 1);
        for (cplx& a : c) a = 2.0 * rng.unit_disk();
        const Poly p(c);
        const cplx s = 2.0 * rng.unit_disk();
        const cplx z = 2.0 * rng.unit_disk();
        CHECK(close(p.scale_compose(s).eval(z), p.eval(s * z), 1e-12));
    }
}

TEST_CASE("from_roots") {
    const cplx r1[] = {cplx{1.0, 0.0}, cplx{-1.0, 0.0}};
    check_poly_close(Poly::from_roots(cplx{1.0, 0.0}, r1), make({-1, 0, 1}));

    check_poly_close(Poly::from_roots(cplx{3.0, 0.0}, {}), make({3}));

    const cplx r2[] = {I, I};
    check_poly_close(Poly::from_roots(cplx{1.0, 0.0}, r2), make({-1, -2.0 * I, 1}));

    CHECK_THROWS_AS(Poly::from_roots(cplx{0.0, 0.0}, r2), InvalidArgument);
}

TEST_CASE("from_roots vanishes at its construction roots") {
    Rng rng(105);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(7));
        std::vector<cplx> roots(static_cast<size_t>(n));
        for (cplx& root : roots) root = 2.0 * rng.unit_disk();
        const Poly p = Poly::from_roots(std::polar(rng.uniform(0.5, 2.0), rng.uniform()), roots);
        REQUIRE(p.degree() == n);
        for (const cplx& root : roots)
            CHECK(std::abs(p.eval(root)) <=
                  1e-10 * p.max_abs_coeff() * std::max(1.0, ipow(std::abs(root), n)));
    }
}

TEST_CASE("linear_combine") {
    const Poly p = make({1, 2, 3});
    CHECK(linear_combine(cplx{1, 0}, p, cplx{-1, 0}, p).is_zero());
    check_poly_close(linear_combine(cplx{1, 0}, p, cplx{0, 0}, make({9, 9, 9, 9})), p);
    // the t1-style combination of R- and r-scaled copies
    check_poly_close(linear_combine(cplx{1, 0}, make({0, 0, 1}), cplx{2, 0}, make({0, 0, 1})),
                     make({0, 0, 3}));
}

TEST_CASE("cancellation restores the leading-coefficient invariant") {
    const Poly p = make({1, 1}); // z + 1
    const Poly q = make({0, 1}); // z
    const Poly diff = linear_combine(cplx{1, 0}, p, cplx{-1, 0}, q);
    CHECK(diff.degree() == 0);
    CHECK(diff.coeff(0) == cplx{1.0, 0.0});

    CHECK(Poly(std::vector<cplx>{}).is_zero());
    CHECK(make({0, 0, 0}).is_zero());
    CHECK(make({0, 0, 0}).degree() == 0);
}

TEST_CASE("zero polynomial invariants") {
    const Poly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 0);
    CHECK(zero.coeffs().size() == 1);
    CHECK(zero.eval(cplx{3.0, 4.0}) == cplx{0.0, 0.0});
    CHECK(zero.derivative().is_zero());
    CHECK(zero.scale_compose(cplx{2.0, 1.0}).is_zero());
    CHECK(zero.conj_reciprocal(3).is_zero());
}

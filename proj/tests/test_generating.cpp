#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "qpos/errors.hpp"
#include "qpos/generating.hpp"
#include "qpos/qseries.hpp"

using namespace qpos;
using qpos_test::coeffs_are;
using qpos_test::poly_of;

namespace {

// Independent oracle: build each summand of F_{k,m} from scratch with full
// Pochhammer products and inversions, no incremental ratio updates.
TruncSeries f_naive(unsigned k, unsigned m, std::size_t order) {
    TruncSeries sum(order);
    for (std::size_t n = 0; m * (2 * n + 1) <= order; ++n) {
        TruncSeries t = poch({q_pow(2 * n + 2), 2, {}}, order);
        t = mul(t, poch({q_pow(2 * n + 2 * k), 2, {}}, order));
        const TruncSeries odd = poch({q_pow(2 * n + 1), 2, {}}, order);
        t = mul(t, invert(mul(odd, odd)));
        shift_up(t, m * (2 * n + 1));
        add_in_place(sum, t);
    }
    return sum;
}

} // namespace

TEST_CASE("ell: lcm of 1,3,...,2k-3") {
    const std::uint64_t expected[] = {1,    1,     3,     15,    105,
                                      315,  3465,  45045, 45045, 765765};
    for (unsigned k = 1; k <= 10; ++k) CHECK(ell(k) == expected[k - 1]);
    CHECK(ell(11) == 14549535);
    CHECK_THROWS_AS(ell(30), std::overflow_error);
}

TEST_CASE("h_degree = ell + (k-2)^2") {
    CHECK(h_degree(3) == 4);
    CHECK(h_degree(8) == 45081);
    CHECK(h_degree(10) == 765829);
    CHECK(h_degree(11) == 14549616);
    CHECK_THROWS_AS(h_degree(2), std::invalid_argument);
}

TEST_CASE("f_def pinned expansions") {
    CHECK(coeffs_are(f_def(10, 1, 3), {0, 1, 2, 3}));
    CHECK(coeffs_are(f_def(3, 1, 12),
                     {0, 1, 2, 3, 4, 6, 8, 9, 12, 15, 16, 20, 24}));
    CHECK(coeffs_are(f_def(2, 4, 12),
                     {0, 0, 0, 0, 1, 2, 2, 4, 4, 4, 7, 6, 8}));
    // Small (k, m) outside the conjectured range really do go non-positive.
    CHECK(coeffs_are(f_def(1, 2, 12),
                     {0, 0, 1, 2, 1, 2, 3, 0, 3, 4, -1, 4, 3}));
}

TEST_CASE("f_def matches the per-term oracle") {
    for (unsigned k : {1u, 2u, 3u, 5u, 9u}) {
        for (unsigned m : {1u, 2u, 4u}) {
            CHECK(f_def(k, m, 60) == f_naive(k, m, 60));
        }
    }
}

TEST_CASE("f_def validation") {
    CHECK_THROWS_AS(f_def(0, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(f_def(1, 0, 10), std::invalid_argument);
    CHECK(coeffs_are(f_def(3, 20, 10), {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("finite-sum forms agree with the defining sum") {
    for (unsigned k = 3; k <= 8; ++k) {
        const TruncSeries f = f_def(k, 1, 150);
        CHECK(f_sum31(k, 150) == f);
        CHECK(f_sum32(k, 150) == f);
    }
    for (unsigned k = 1; k <= 2; ++k) {
        CHECK(f_sum32(k, 150) == f_def(k, 1, 150));
    }
    CHECK_THROWS_AS(f_sum31(2, 50), std::invalid_argument);
    CHECK_THROWS_AS(f_sum32(0, 50), std::invalid_argument);
}

TEST_CASE("omega pinned expansion") {
    CHECK(coeffs_are(omega(12),
                     {1, 2, 3, 4, 6, 8, 10, 14, 18, 22, 29, 36, 44}));
}

TEST_CASE("f_def(k,1) approaches q*omega as k grows") {
    // The two agree through q^{2k}; with k = 25 the whole window matches.
    const TruncSeries lhs = f_def(25, 1, 40);
    const TruncSeries rhs = axpy_shift(TruncSeries(40), omega(39), 1, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("e_k pinned expansions") {
    CHECK(coeffs_are(e_k(1, 2), {1, 2, 3}));
    CHECK(coeffs_are(e_k(2, 10), {1, 2, 3, 6, 9, 12, 18, 24, 31, 42, 53}));
    CHECK_THROWS_AS(e_k(0, 10), std::invalid_argument);
}

TEST_CASE("g: Pochhammer form vs binomial-quotient form") {
    CHECK(coeffs_are(g_poch(4, 2, 12),
                     {1, 1, 1, 2, 2, 3, 4, 3, 4, 4, 4, 5, 4}));
    for (unsigned k = 1; k <= 6; ++k) {
        for (unsigned n = 0; n <= 5; ++n) {
            CHECK(g_binquot(k, n, 80) == g_poch(k, n, 80));
        }
    }
    CHECK_THROWS_AS(g_poch(0, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(g_binquot(0, 1, 10), std::invalid_argument);
}

TEST_CASE("f_sum32 partial sums recombine from g") {
    // Term n of the k-th sum is q^{n+1} G_{k,n}.
    const std::size_t order = 60;
    TruncSeries acc(order);
    for (std::size_t n = 0; n + 1 <= order; ++n) {
        acc = axpy_shift(acc, g_poch(3, static_cast<unsigned>(n), order), 1,
                         n + 1);
    }
    CHECK(acc == f_sum32(3, order));
}

TEST_CASE("h_poly pinned polynomials") {
    CHECK(h_poly(3) == poly_of({0, 1, 1, 1, -1}));
    CHECK(h_poly(4) == poly_of({0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 2, 0,
                                -1, 0, -1, 1}));
    CHECK(h_poly(3).degree() == h_degree(3));
    CHECK(h_poly(7).degree() == h_degree(7));
    // Top coefficient is the sign of the last comb.
    CHECK(h_poly(7).coeff(h_degree(7)) == (7 % 2 ? -1 : 1));
}

TEST_CASE("h_poly materialization cap") {
    CHECK_THROWS_AS(h_poly(2), std::invalid_argument);
    CHECK_THROWS_AS(h_poly(5, 4), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        h_poly(11),
        "h_poly: k = 11 exceeds the materialization cap (10); use "
        "verify_prefix_stream, which needs no materialization",
        std::invalid_argument);
}

TEST_CASE("h_poly factors as F * (q;q^2)_{k-1} * (1 - q^ell)") {
    for (unsigned k = 3; k <= 5; ++k) {
        const std::size_t deg = static_cast<std::size_t>(h_degree(k));
        TruncSeries prod = mul(f_sum31(k, deg),
                               poch({q_pow(1), 2, k - 1}, deg));
        mul_one_minus(prod, +1, static_cast<std::size_t>(ell(k)));
        CHECK(h_poly(k).to_series(deg) == prod);
    }
}

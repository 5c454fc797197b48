#include <doctest.h>

#include "helpers.hpp"
#include "qpos/errors.hpp"
#include "qpos/identities.hpp"

using namespace qpos;

namespace {

// Naive sum of the Heine left side: every term built from fresh Pochhammer
// products, no incremental updates. Only valid when all exponents stay
// non-negative, which holds for the instances below.
TruncSeries heine_lhs_naive(const HeineInstance& inst) {
    const std::size_t N = inst.order;
    TruncSeries sum(N);
    for (std::size_t n = 0; n * inst.t.exponent <= N || n == 0; ++n) {
        TruncSeries t = poch({inst.a, inst.step, n}, N);
        t = mul(t, poch({inst.b, inst.step, n}, N));
        t = mul(t, invert(poch({q_pow(inst.step), inst.step, n}, N)));
        t = mul(t, invert(poch({inst.c, inst.step, n}, N)));
        shift_up(t, n * inst.t.exponent);
        if (inst.t.sign < 0 && n % 2) negate(t);
        add_in_place(sum, t);
        if (n > 0 && n * inst.t.exponent > N) break;
    }
    return sum;
}

TruncSeries rf_lhs_naive(const RogersFineInstance& inst) {
    const std::size_t N = inst.order;
    TruncSeries sum(N);
    for (std::size_t n = 0; n * inst.w.exponent <= N || n == 0; ++n) {
        // alpha = 0 collapses (alpha;Q)_n to 1.
        TruncSeries t = inst.alpha ? poch({*inst.alpha, inst.step, n}, N)
                                   : TruncSeries::one(N);
        t = mul(t, invert(poch({inst.beta, inst.step, n}, N)));
        shift_up(t, n * inst.w.exponent);
        if (inst.w.sign < 0 && n % 2) negate(t);
        add_in_place(sum, t);
        if (n > 0 && n * inst.w.exponent > N) break;
    }
    return sum;
}

} // namespace

TEST_CASE("heine: instance with non-negative mixed-product exponent") {
    const HeineInstance inst{q_pow(1), q_pow(2), q_pow(3), q_pow(1), 1, 60};
    CHECK(heine_lhs(inst) == heine_lhs_naive(inst));
    CHECK(heine_check(inst));
}

TEST_CASE("heine: instances that fold negative exponents hold") {
    for (unsigned k = 3; k <= 8; ++k) {
        // abt/c = q^{4-2k} has negative exponent for every one of these.
        const HeineInstance inst{q_pow(1), q_pow(1), q_pow(2 * k), q_pow(2), 2,
                                 150};
        CHECK(heine_lhs(inst) == heine_lhs_naive(inst));
        CHECK(heine_check(inst));
    }
}

TEST_CASE("heine: negative controls") {
    const HeineInstance orig{q_pow(1), q_pow(1), q_pow(6), q_pow(2), 2, 120};
    // The identity holds at any valid parameter point, so a useful negative
    // control compares the left side at one point with the right side at
    // another.
    HeineInstance bad_c = orig;
    bad_c.c = q_pow(8);
    CHECK_FALSE(heine_lhs(orig) == heine_rhs(bad_c));
    HeineInstance bad_t = orig;
    bad_t.t = q_pow(4);
    CHECK_FALSE(heine_lhs(orig) == heine_rhs(bad_t));
}

TEST_CASE("heine: a vanishing t truncates the left side to 1") {
    const HeineInstance inst{q_pow(1), q_pow(2), q_pow(3), q_pow(41), 1, 40};
    CHECK(heine_lhs(inst) == TruncSeries::one(40));
    CHECK(heine_check(inst));
}

TEST_CASE("heine: precondition violations throw") {
    const HeineInstance base{q_pow(1), q_pow(1), q_pow(6), q_pow(2), 2, 50};
    HeineInstance x = base;
    x.c = q_pow(0);
    CHECK_THROWS_AS(heine_lhs(x), std::invalid_argument);
    x = base;
    x.t = q_pow(0);
    CHECK_THROWS_AS(heine_lhs(x), std::invalid_argument);
    x = base;
    x.b = q_pow(6); // c/b would be q^0
    CHECK_THROWS_AS(heine_rhs(x), std::invalid_argument);
    x = base;
    x.step = 0;
    CHECK_THROWS_AS(heine_lhs(x), std::invalid_argument);
}

TEST_CASE("rogers-fine holds and matches the naive sum") {
    const RogersFineInstance inst{std::nullopt, q_pow(3), q_pow(1), 2, 150};
    CHECK(rogers_fine_lhs(inst) == rf_lhs_naive(inst));
    CHECK(rogers_fine_check(inst));

    const RogersFineInstance with_alpha{neg_q_pow(2), q_pow(3), q_pow(2), 2,
                                        120};
    CHECK(rogers_fine_lhs(with_alpha) == rf_lhs_naive(with_alpha));
    CHECK(rogers_fine_check(with_alpha));
}

TEST_CASE("rogers-fine: negative control") {
    const RogersFineInstance orig{std::nullopt, q_pow(3), q_pow(1), 2, 100};
    RogersFineInstance bad = orig;
    bad.beta = q_pow(5);
    CHECK_FALSE(rogers_fine_lhs(orig) == rogers_fine_rhs(bad));
}

TEST_CASE("rogers-fine: precondition violations throw") {
    RogersFineInstance x{std::nullopt, q_pow(0), q_pow(1), 2, 50};
    CHECK_THROWS_AS(rogers_fine_lhs(x), std::invalid_argument);
    x = {std::nullopt, q_pow(3), q_pow(0), 2, 50};
    CHECK_THROWS_AS(rogers_fine_lhs(x), std::invalid_argument);
    x = {std::nullopt, q_pow(3), q_pow(1), 0, 50};
    CHECK_THROWS_AS(rogers_fine_lhs(x), std::invalid_argument);
}

TEST_CASE("gap between q*omega and F_{k,1}") {
    for (unsigned k = 1; k <= 4; ++k) CHECK(mock_theta_gap_check(k, 60));
    CHECK(mock_theta_gap_check(3, 80));
    CHECK_THROWS_AS(mock_theta_gap_check(1, 2), std::invalid_argument);
}

#include <doctest.h>

#include "helpers.hpp"
#include "qpos/errors.hpp"
#include "qpos/qseries.hpp"

using namespace qpos;
using qpos_test::coeffs_are;
using qpos_test::poly_of;

namespace {

// Independent construction through the additive recurrence
// [n m] = [n-1 m] + Q^{n-m} [n-1 m-1]; deliberately avoids the division
// route the library uses.
IntPolynomial pascal_gauss(unsigned n, unsigned m, unsigned r) {
    if (m > n) return {};
    if (m == 0) return IntPolynomial::one();
    if (n == 0) return {};
    return pascal_gauss(n - 1, m, r) +
           IntPolynomial::monomial(1, static_cast<std::size_t>(r) * (n - m)) *
               pascal_gauss(n - 1, m - 1, r);
}

} // namespace

TEST_CASE("poch finite products") {
    CHECK(coeffs_are(poch({q_pow(1), 2, 2}, 5), {1, -1, 0, -1, 1, 0}));
    CHECK(coeffs_are(poch({q_pow(1), 2, 0}, 3), {1, 0, 0, 0})); // empty product
    CHECK(coeffs_are(poch({neg_q_pow(1), 1, 2}, 3), {1, 1, 1, 1}));
    // (-1; q)_2 = (1+1)(1+q)
    CHECK(coeffs_are(poch({neg_q_pow(0), 1, 2}, 2), {2, 2, 0}));
}

TEST_CASE("poch infinite products") {
    CHECK(coeffs_are(poch({q_pow(2), 2, {}}, 4), {1, 0, -1, 0, -1}));
    // Euler: 1/(q;q)_inf is the partition generating function
    const TruncSeries inv = invert(poch({q_pow(1), 1, {}}, 10));
    CHECK(coeffs_are(inv, {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
}

TEST_CASE("degenerate Pochhammer") {
    CHECK(is_degenerate({q_pow(0), 2, {}}));
    CHECK(is_degenerate({q_pow(0), 1, 1}));
    CHECK_FALSE(is_degenerate({q_pow(0), 1, 0}));
    CHECK_FALSE(is_degenerate({neg_q_pow(0), 1, 3}));
    CHECK_FALSE(is_degenerate({q_pow(1), 1, {}}));
    CHECK(coeffs_are(poch({q_pow(0), 2, {}}, 3), {0, 0, 0, 0}));
    CHECK(coeffs_are(poch({q_pow(0), 2, 1}, 2), {0, 0, 0}));
}

TEST_CASE("poch validation") {
    CHECK_THROWS_AS(poch({q_pow(1), 0, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(poch({{3, 1}, 1, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(poch_poly(q_pow(1), 0, 2), std::invalid_argument);
}

TEST_CASE("poch_poly matches poch") {
    for (unsigned step : {1u, 2u, 3u}) {
        for (unsigned e = 0; e <= 3; ++e) {
            for (int sign : {1, -1}) {
                for (unsigned len = 0; len <= 5; ++len) {
                    const IntPolynomial p =
                        poch_poly({sign, e}, step, len);
                    const std::size_t order = p.is_zero() ? 8 : p.degree();
                    CHECK(p.to_series(order) ==
                          poch({{sign, e}, step, len}, order));
                }
            }
        }
    }
}

TEST_CASE("gauss pinned values") {
    CHECK(gauss(2, 1, 2) == poly_of({1, 0, 1}));
    CHECK(gauss(5, 2, 1) == poly_of({1, 1, 2, 2, 2, 1, 1}));
    CHECK(gauss(4, 2, 2) == poly_of({1, 0, 1, 0, 2, 0, 1, 0, 1}));
    CHECK(gauss(6, 3, 1) == poly_of({1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
    CHECK(gauss(5, 7, 1).is_zero());
    CHECK(gauss(5, -1, 1).is_zero());
    CHECK(gauss(9, 0, 1) == IntPolynomial::one());
    CHECK(gauss(9, 9, 3) == IntPolynomial::one());
}

TEST_CASE("gauss agrees with the additive recurrence") {
    for (unsigned r : {1u, 2u}) {
        for (unsigned n = 0; n <= 10; ++n) {
            for (unsigned m = 0; m <= n; ++m) {
                CHECK(gauss(n, m, r) == pascal_gauss(n, m, r));
            }
        }
    }
}

TEST_CASE("gauss symmetry, degree, non-negativity") {
    for (unsigned r : {1u, 2u}) {
        for (unsigned n = 1; n <= 12; ++n) {
            for (unsigned m = 0; m <= n; ++m) {
                const IntPolynomial g = gauss(n, m, r);
                CHECK(g == gauss(n, n - m, r));
                CHECK(g.degree() == static_cast<std::size_t>(r) * m * (n - m));
                for (std::size_t j = 0; j <= g.degree(); ++j) {
                    CHECK(g.coeff(j) >= 0);
                    CHECK(g.coeff(j) == g.coeff(g.degree() - j)); // palindromic
                }
            }
        }
    }
}

TEST_CASE("finite product expands through Gaussian binomials") {
    // (a; Q)_N = sum_j [N over j]_Q (-1)^j a^j Q^{j(j-1)/2} for a = q^e
    for (unsigned r : {1u, 2u}) {
        for (unsigned e = 0; e <= 4; ++e) {
            for (unsigned N = 0; N <= 8; ++N) {
                IntPolynomial rhs;
                for (unsigned j = 0; j <= N; ++j) {
                    const std::size_t shift =
                        static_cast<std::size_t>(e) * j +
                        static_cast<std::size_t>(r) * j * (j - (j ? 1 : 0)) / 2;
                    const IntPolynomial term =
                        gauss(N, j, r) * IntPolynomial::monomial(1, shift);
                    rhs = j % 2 ? rhs - term : rhs + term;
                }
                CHECK(rhs == poch_poly({+1, e}, r, N));
            }
        }
    }
}

TEST_CASE("gauss_series matches the exact polynomial") {
    for (unsigned r : {1u, 2u}) {
        for (unsigned n = 0; n <= 9; ++n) {
            for (unsigned m = 0; m <= n; ++m) {
                const IntPolynomial g = gauss(n, m, r);
                const std::size_t deg = g.degree();
                CHECK(gauss_series(n, m, r, deg + 3) == g.to_series(deg + 3));
                CHECK(gauss_series(n, m, r, deg / 2) ==
                      g.to_series(deg / 2)); // truncated short
            }
        }
    }
    CHECK_THROWS_AS(gauss_series(3, 4, 1, 10), std::invalid_argument);
}

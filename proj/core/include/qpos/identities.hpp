#pragma once

#include <cstddef>
#include <optional>

#include "qpos/qseries.hpp"
#include "qpos/series.hpp"

namespace qpos {

// One instance of Heine's 2phi1 transformation in base Q = q^step:
//   sum_n (a;Q)_n (b;Q)_n t^n / ((Q;Q)_n (c;Q)_n)
//     = [(c/b;Q)_inf (bt;Q)_inf / ((c;Q)_inf (t;Q)_inf)]
//       * sum_n (abt/c;Q)_n (b;Q)_n (c/b)^n / ((Q;Q)_n (bt;Q)_n).
// Parameters are signed monomials; c and t need exponent >= 1 (the left side
// must be a well-formed power series), and c/b must come out with exponent
// >= 1 too. abt/c may have a negative exponent: each factor (1 - s q^{-g}) of
// its Pochhammer is folded as -s q^{-g} (1 - s q^{g}) into the term's leading
// monomial, and the instance is rejected only if a term's combined valuation
// would still be negative.
struct HeineInstance {
    SignedMonomial a, b, c, t;
    unsigned step = 1;
    std::size_t order = 400;
};

TruncSeries heine_lhs(const HeineInstance& inst);
TruncSeries heine_rhs(const HeineInstance& inst);
bool heine_check(const HeineInstance& inst);

// One instance of the Rogers-Fine identity in base Q = q^step:
//   sum_n (alpha;Q)_n w^n / (beta;Q)_n
//     = sum_n (alpha;Q)_n (alpha w Q / beta;Q)_n beta^n w^n Q^{n^2-n}
//             (1 - alpha w Q^{2n}) / ((beta;Q)_n (w;Q)_{n+1}).
// alpha == nullopt means alpha = 0 (its Pochhammer collapses to 1). w and
// beta need exponent >= 1.
struct RogersFineInstance {
    std::optional<SignedMonomial> alpha;
    SignedMonomial beta, w;
    unsigned step = 1;
    std::size_t order = 400;
};

TruncSeries rogers_fine_lhs(const RogersFineInstance& inst);
TruncSeries rogers_fine_rhs(const RogersFineInstance& inst);
bool rogers_fine_check(const RogersFineInstance& inst);

// Checks, through the given order, that q omega(q) - F_{k,1}(q) has zero
// coefficients in degrees 0..2k (the gap), coefficient 1 at q^{2k+1}, and
// that the quotient by q^{2k+1} matches e_k(k, .). Requires order >= 2k+1
// (std::invalid_argument otherwise).
bool mock_theta_gap_check(unsigned k, std::size_t order);

} // namespace qpos

#include "qpos/identities.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpos/errors.hpp"
#include "qpos/generating.hpp"

namespace qpos {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Assembles one summand of a transformed series: a leading monomial
// scalar * q^val times a product of (1 - s q^e) factors over a product of
// unit-constant (1 - s q^e) factors. Numerator factors with negative
// exponents are folded into the leading monomial via
// (1 - s q^{-g}) = -s q^{-g} (1 - s q^{g}), which keeps everything
// Laurent-free as long as the combined valuation stays non-negative.
struct TermAccum {
    long long val = 0;
    Int scalar = 1;
    bool zero = false;
    bool zero_permanent = false;
    std::vector<std::pair<int, std::size_t>> numer;
    std::vector<std::pair<int, std::size_t>> denom;

    // permanent: the same factor reappears in every later term (true for
    // Pochhammer factors, whose index set only grows with n).
    void numer_factor(int s, long long e, bool permanent = true) {
        if (zero) return;
        if (e < 0) {
            if (s == 1) scalar = -scalar;
            val += e;
            numer.emplace_back(s, static_cast<std::size_t>(-e));
        } else if (e == 0) {
            if (s == 1) {
                zero = true;
                zero_permanent = permanent;
            } else {
                scalar *= 2;
            }
        } else {
            numer.emplace_back(s, static_cast<std::size_t>(e));
        }
    }

    void denom_factor(int s, long long e) {
        require(e >= 1, "identity instance: denominator factor without unit "
                        "constant term");
        denom.emplace_back(s, static_cast<std::size_t>(e));
    }

    TruncSeries build(std::size_t order) const {
        TruncSeries t(order);
        if (zero) return t;
        require(val >= 0,
                "identity instance: term with negative combined valuation "
                "(not Laurent-free)");
        if (static_cast<unsigned long long>(val) > order) return t;
        t[static_cast<std::size_t>(val)] = scalar;
        for (const auto& [s, e] : numer)
            if (e <= order) mul_one_minus(t, s, e);
        for (const auto& [s, e] : denom) div_one_minus(t, s, e);
        return t;
    }
};

// Number of Pochhammer slots j with e + r j < 0; once n is past it, the
// term valuation increases monotonically and the sum may be cut off.
long long laurent_slots(long long e, unsigned r) {
    if (e >= 0) return 0;
    return (-e + r - 1) / r;
}

} // namespace

TruncSeries heine_lhs(const HeineInstance& inst) {
    require(inst.step >= 1, "heine: step must be >= 1");
    require(inst.c.exponent >= 1 && inst.t.exponent >= 1,
            "heine: c and t must be positive powers of q");
    const unsigned r = inst.step;
    const std::size_t N = inst.order;
    TruncSeries sum = TruncSeries::one(N);
    TruncSeries term = TruncSeries::one(N);
    for (std::size_t n = 1; n * inst.t.exponent <= N; ++n) {
        const std::size_t j = n - 1; // the factor index new at this n
        bool dead = false;
        for (const SignedMonomial& x : {inst.a, inst.b}) {
            const std::size_t e = x.exponent + static_cast<std::size_t>(r) * j;
            if (e == 0) {
                if (x.sign == 1) {
                    dead = true; // (1 - q^0) kills this and all later terms
                    break;
                }
                scale(term, 2);
            } else if (e <= N) {
                mul_one_minus(term, x.sign, e);
            }
        }
        if (dead) break;
        shift_up(term, inst.t.exponent);
        if (inst.t.sign < 0) negate(term);
        div_one_minus(term, +1, static_cast<std::size_t>(r) * n);
        div_one_minus(term, inst.c.sign,
                      inst.c.exponent + static_cast<std::size_t>(r) * j);
        add_in_place(sum, term);
    }
    return sum;
}

TruncSeries heine_rhs(const HeineInstance& inst) {
    require(inst.step >= 1, "heine: step must be >= 1");
    require(inst.c.exponent >= 1 && inst.t.exponent >= 1,
            "heine: c and t must be positive powers of q");
    const unsigned r = inst.step;
    const std::size_t N = inst.order;

    const int s_v = inst.c.sign * inst.b.sign;
    const long long e_v = static_cast<long long>(inst.c.exponent) -
                          static_cast<long long>(inst.b.exponent);
    require(e_v >= 1, "heine: c/b must be a positive power of q");

    const int s_bt = inst.b.sign * inst.t.sign;
    const std::size_t e_bt = inst.b.exponent + inst.t.exponent;

    const int s_u = inst.a.sign * inst.b.sign * inst.t.sign * inst.c.sign;
    const long long e_u = static_cast<long long>(inst.a.exponent) +
                          static_cast<long long>(inst.b.exponent) +
                          static_cast<long long>(inst.t.exponent) -
                          static_cast<long long>(inst.c.exponent);
    const long long settle = laurent_slots(e_u, r);

    // (c/b; Q)_inf (bt; Q)_inf / ((c; Q)_inf (t; Q)_inf)
    TruncSeries pre =
        mul(poch({{s_v, static_cast<std::size_t>(e_v)}, r, {}}, N),
            poch({{s_bt, e_bt}, r, {}}, N));
    pre = mul(pre, invert(mul(poch({inst.c, r, {}}, N),
                              poch({inst.t, r, {}}, N))));

    // Generous upper bound on where the valuation must have cleared N; the
    // loop always breaks well before it, so reaching it is a bug.
    const long long hard_stop =
        static_cast<long long>(N) +
        settle * (std::llabs(e_u) + static_cast<long long>(r)) + 8;

    TruncSeries sum = TruncSeries::one(N); // n = 0 term
    for (std::size_t n = 1;; ++n) {
        if (static_cast<long long>(n) > hard_stop)
            throw internal_error("heine_rhs: sum failed to terminate");
        TermAccum acc;
        acc.val = static_cast<long long>(n) * e_v; // (c/b)^n
        if (s_v == -1 && n % 2) acc.scalar = -acc.scalar;
        for (std::size_t j = 0; j < n && !acc.zero; ++j) {
            acc.numer_factor(
                s_u, e_u + static_cast<long long>(r) * static_cast<long long>(j));
            acc.numer_factor(inst.b.sign,
                             static_cast<long long>(inst.b.exponent) +
                                 static_cast<long long>(r) * j);
            acc.denom_factor(+1, static_cast<long long>(r) * (j + 1));
            acc.denom_factor(s_bt, static_cast<long long>(e_bt) +
                                       static_cast<long long>(r) * j);
        }
        if (acc.zero && acc.zero_permanent) break;
        if (!acc.zero && acc.val > static_cast<long long>(N) &&
            static_cast<long long>(n) >= settle)
            break;
        if (acc.zero) continue;
        add_in_place(sum, acc.build(N));
    }
    return mul(pre, sum);
}

bool heine_check(const HeineInstance& inst) {
    return heine_lhs(inst) == heine_rhs(inst);
}

TruncSeries rogers_fine_lhs(const RogersFineInstance& inst) {
    require(inst.step >= 1, "rogers_fine: step must be >= 1");
    require(inst.beta.exponent >= 1 && inst.w.exponent >= 1,
            "rogers_fine: beta and w must be positive powers of q");
    const unsigned r = inst.step;
    const std::size_t N = inst.order;
    TruncSeries sum = TruncSeries::one(N);
    TruncSeries term = TruncSeries::one(N);
    for (std::size_t n = 1; n * inst.w.exponent <= N; ++n) {
        const std::size_t j = n - 1;
        if (inst.alpha) {
            const std::size_t e =
                inst.alpha->exponent + static_cast<std::size_t>(r) * j;
            if (e == 0) {
                if (inst.alpha->sign == 1) break;
                scale(term, 2);
            } else if (e <= N) {
                mul_one_minus(term, inst.alpha->sign, e);
            }
        }
        shift_up(term, inst.w.exponent);
        if (inst.w.sign < 0) negate(term);
        div_one_minus(term, inst.beta.sign,
                      inst.beta.exponent + static_cast<std::size_t>(r) * j);
        add_in_place(sum, term);
    }
    return sum;
}

TruncSeries rogers_fine_rhs(const RogersFineInstance& inst) {
    require(inst.step >= 1, "rogers_fine: step must be >= 1");
    require(inst.beta.exponent >= 1 && inst.w.exponent >= 1,
            "rogers_fine: beta and w must be positive powers of q");
    const unsigned r = inst.step;
    const std::size_t N = inst.order;

    // gamma = alpha w Q / beta (zero when alpha is zero).
    int s_g = 0;
    long long e_g = 0;
    long long settle = 0;
    if (inst.alpha) {
        s_g = inst.alpha->sign * inst.w.sign * inst.beta.sign;
        e_g = static_cast<long long>(inst.alpha->exponent) +
              static_cast<long long>(inst.w.exponent) +
              static_cast<long long>(r) -
              static_cast<long long>(inst.beta.exponent);
        settle = laurent_slots(e_g, r);
    }

    const long long hard_stop =
        static_cast<long long>(N) +
        settle * (std::llabs(e_g) + static_cast<long long>(r)) + 8;

    TruncSeries sum(N);
    for (std::size_t n = 0;; ++n) {
        if (static_cast<long long>(n) > hard_stop)
            throw internal_error("rogers_fine_rhs: sum failed to terminate");
        TermAccum acc;
        // beta^n w^n Q^{n^2 - n}
        acc.val = static_cast<long long>(n) *
                      (static_cast<long long>(inst.beta.exponent) +
                       static_cast<long long>(inst.w.exponent)) +
                  static_cast<long long>(r) * n * (n - (n ? 1 : 0));
        if (n % 2 && inst.beta.sign * inst.w.sign == -1)
            acc.scalar = -acc.scalar;
        for (std::size_t j = 0; j < n && !acc.zero; ++j) {
            if (inst.alpha)
                acc.numer_factor(inst.alpha->sign,
                                 static_cast<long long>(inst.alpha->exponent) +
                                     static_cast<long long>(r) * j);
            if (inst.alpha)
                acc.numer_factor(
                    s_g, e_g + static_cast<long long>(r) *
                                   static_cast<long long>(j));
            acc.denom_factor(inst.beta.sign,
                             static_cast<long long>(inst.beta.exponent) +
                                 static_cast<long long>(r) * j);
        }
        // (1 - alpha w Q^{2n}); exponent grows with n, so a vanishing here
        // is not permanent.
        if (inst.alpha && !acc.zero)
            acc.numer_factor(inst.alpha->sign * inst.w.sign,
                             static_cast<long long>(inst.alpha->exponent) +
                                 static_cast<long long>(inst.w.exponent) +
                                 2 * static_cast<long long>(r) *
                                     static_cast<long long>(n),
                             /*permanent=*/false);
        for (std::size_t j = 0; j <= n; ++j) // (w; Q)_{n+1}
            acc.denom_factor(inst.w.sign,
                             static_cast<long long>(inst.w.exponent) +
                                 static_cast<long long>(r) * j);
        if (acc.zero && acc.zero_permanent) break;
        if (!acc.zero && acc.val > static_cast<long long>(N) &&
            static_cast<long long>(n) >= settle)
            break;
        if (acc.zero) continue;
        add_in_place(sum, acc.build(N));
    }
    return sum;
}

bool rogers_fine_check(const RogersFineInstance& inst) {
    return rogers_fine_lhs(inst) == rogers_fine_rhs(inst);
}

bool mock_theta_gap_check(unsigned k, std::size_t order) {
    if (k < 1) throw std::invalid_argument("mock_theta_gap_check: k >= 1");
    if (order < 2 * static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument(
            "mock_theta_gap_check: order must be at least 2k+1");
    // q omega(q) - F_{k,1}(q) should open with a gap of 2k+1 zeros, then
    // q^{2k+1} (1 + ...) matching e_k.
    TruncSeries d = axpy_shift(TruncSeries(order), omega(order), 1, 1);
    sub_in_place(d, f_def(k, 1, order));
    const std::size_t gap = 2 * static_cast<std::size_t>(k) + 1;
    for (std::size_t j = 0; j < gap; ++j)
        if (d[j] != 0) return false;
    if (d[gap] != 1) return false;
    const TruncSeries e = e_k(k, order - gap);
    for (std::size_t j = 0; j + gap <= order; ++j)
        if (d[j + gap] != e[j]) return false;
    return true;
}

} // namespace qpos

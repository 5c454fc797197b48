#include "qpos/generating.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qpos/errors.hpp"

namespace qpos {

std::uint64_t ell(unsigned k) {
    std::uint64_t l = 1;
    for (unsigned odd = 3; odd + 3 <= 2 * k; odd += 2) {
        const std::uint64_t g = std::gcd<std::uint64_t>(l, odd);
        const std::uint64_t factor = odd / g;
        if (l > UINT64_MAX / factor)
            throw std::overflow_error("ell: lcm(1,3,...,2k-3) overflows 64 bits");
        l *= factor;
    }
    return l;
}

std::uint64_t h_degree(unsigned k) {
    if (k < 3) throw std::invalid_argument("h_degree: requires k >= 3");
    const std::uint64_t l = ell(k);
    const std::uint64_t sq = static_cast<std::uint64_t>(k - 2) * (k - 2);
    if (l > UINT64_MAX - sq)
        throw std::overflow_error("h_degree: overflows 64 bits");
    return l + sq;
}

TruncSeries f_def(unsigned k, unsigned m, std::size_t order) {
    if (k < 1 || m < 1)
        throw std::invalid_argument("f_def: requires k >= 1 and m >= 1");
    TruncSeries sum(order);
    if (m > order) return sum;
    // Term n = (q^{2n+2};q^2)_inf (q^{2n+2k};q^2)_inf / (q^{2n+1};q^2)_inf^2
    //          * q^{m(2n+1)}; consecutive terms differ by the exact ratio
    //   (1 - q^{2n-1})^2 / [(1 - q^{2n})(1 - q^{2n+2k-2})] * q^{2m},
    // so each step is a handful of O(order) passes instead of fresh
    // Pochhammer/inversion work.
    TruncSeries t = poch({q_pow(2), 2, {}}, order);
    t = mul(t, poch({q_pow(2 * k), 2, {}}, order));
    const TruncSeries inv_odd = invert(poch({q_pow(1), 2, {}}, order));
    t = mul(t, inv_odd);
    t = mul(t, inv_odd);
    shift_up(t, m);
    add_in_place(sum, t);
    for (std::size_t n = 1; m * (2 * n + 1) <= order; ++n) {
        mul_one_minus(t, +1, 2 * n - 1);
        mul_one_minus(t, +1, 2 * n - 1);
        div_one_minus(t, +1, 2 * n);
        div_one_minus(t, +1, 2 * n + 2 * k - 2);
        shift_up(t, 2 * m);
        add_in_place(sum, t);
    }
    return sum;
}

TruncSeries f_sum31(unsigned k, std::size_t order) {
    if (k < 3) throw std::invalid_argument("f_sum31: requires k >= 3");
    // q / [(1-q) (q;q^2)_{k-1}] * [1 + sum_{n=1}^{k-2} (-1)^n
    //   (q^{2k-2n-2};q^2)_n q^{n^2+2n} (1-q) / ((1-q^{2n+1}) (q^2;q^2)_n)],
    // the (-1)^n q^{n^2+2n} shape coming from flipping each negative-exponent
    // factor of (q^{4-2k};q^2)_n q^{(2k-1)n} into a positive one.
    TruncSeries bracket = TruncSeries::one(order);
    for (unsigned n = 1; n <= k - 2; ++n) {
        const std::size_t lead =
            static_cast<std::size_t>(n) * n + 2 * static_cast<std::size_t>(n);
        if (lead > order) break;
        TruncSeries t = poch({q_pow(2 * k - 2 * n - 2), 2, n}, order);
        shift_up(t, lead);
        if (n % 2) negate(t);
        mul_one_minus(t, +1, 1);
        div_one_minus(t, +1, 2 * n + 1);
        for (unsigned i = 1; i <= n; ++i) div_one_minus(t, +1, 2 * i);
        add_in_place(bracket, t);
    }
    shift_up(bracket, 1);
    div_one_minus(bracket, +1, 1);
    for (unsigned i = 0; i < k - 1; ++i) div_one_minus(bracket, +1, 2 * i + 1);
    return bracket;
}

TruncSeries f_sum32(unsigned k, std::size_t order) {
    if (k < 1) throw std::invalid_argument("f_sum32: requires k >= 1");
    TruncSeries sum(order);
    if (order == 0) return sum;
    // Term n = (q^{2k-1};q^2)_n q^{n+1} / (q;q^2)_{n+1}; the ratio of
    // consecutive terms is (1 - q^{2k+2n-3}) q / (1 - q^{2n+1}).
    TruncSeries t = TruncSeries::monomial(1, order);
    div_one_minus(t, +1, 1);
    add_in_place(sum, t);
    for (std::size_t n = 1; n + 1 <= order; ++n) {
        mul_one_minus(t, +1, 2 * k + 2 * n - 3);
        shift_up(t, 1);
        div_one_minus(t, +1, 2 * n + 1);
        add_in_place(sum, t);
    }
    return sum;
}

TruncSeries omega(std::size_t order) {
    // Term n = q^{2n(n+1)} / (q;q^2)_{n+1}^2; ratio q^{4n}/(1 - q^{2n+1})^2.
    TruncSeries t = TruncSeries::one(order);
    div_one_minus(t, +1, 1);
    div_one_minus(t, +1, 1);
    TruncSeries sum = t;
    for (std::size_t n = 1; 2 * n * (n + 1) <= order; ++n) {
        shift_up(t, 4 * n);
        div_one_minus(t, +1, 2 * n + 1);
        div_one_minus(t, +1, 2 * n + 1);
        add_in_place(sum, t);
    }
    return sum;
}

TruncSeries e_k(unsigned k, std::size_t order) {
    if (k < 1) throw std::invalid_argument("e_k: requires k >= 1");
    // sum_{n>=0} q^n/(q^5;q^2)_n * sum_{j<=n} [n+1 over j+1]_{q^2} (-1)^j
    // q^{j^2+2kj}, all over (1-q)(1-q^3). The j-sum is truncated with
    // gauss_series, so each n costs O(sqrt(order) * order) plus one product.
    TruncSeries sum(order);
    TruncSeries outer = TruncSeries::one(order); // q^n / (q^5;q^2)_n
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            shift_up(outer, 1);
            div_one_minus(outer, +1, 2 * n + 3);
        }
        TruncSeries inner(order);
        for (std::size_t j = 0; j <= n; ++j) {
            const std::size_t e = j * j + 2 * static_cast<std::size_t>(k) * j;
            if (e > order) break;
            const TruncSeries gs = gauss_series(n + 1, j + 1, 2, order - e);
            inner = axpy_shift(inner, gs, j % 2 ? Int(-1) : Int(1), e);
        }
        add_in_place(sum, mul(outer, inner));
    }
    div_one_minus(sum, +1, 1);
    div_one_minus(sum, +1, 3);
    return sum;
}

TruncSeries g_poch(unsigned k, unsigned n, std::size_t order) {
    if (k < 1) throw std::invalid_argument("g_poch: requires k >= 1");
    TruncSeries r = poch({q_pow(2 * k - 1), 2, n}, order);
    for (unsigned i = 0; i <= n; ++i) div_one_minus(r, +1, 2 * i + 1);
    return r;
}

TruncSeries g_binquot(unsigned k, unsigned n, std::size_t order) {
    if (k < 1) throw std::invalid_argument("g_binquot: requires k >= 1");
    const IntPolynomial num = gauss(2 * static_cast<std::uint64_t>(k) + 2 * n - 2,
                                    2 * static_cast<std::int64_t>(n), 1);
    const IntPolynomial den =
        gauss(static_cast<std::uint64_t>(k) + n - 1, n, 2);
    TruncSeries r = mul(num.to_series(order), invert(den.to_series(order)));
    div_one_minus(r, +1, 2 * n + 1);
    return r;
}

IntPolynomial h_poly(unsigned k, unsigned cap) {
    if (k < 3) throw std::invalid_argument("h_poly: requires k >= 3");
    if (k > cap)
        throw std::invalid_argument(
            "h_poly: k = " + std::to_string(k) + " exceeds the materialization cap (" +
            std::to_string(cap) +
            "); use verify_prefix_stream, which needs no materialization");
    const std::uint64_t l = ell(k);
    const std::uint64_t deg = h_degree(k);
    std::vector<Int> a(deg + 1);
    // Comb n spreads +-gauss(k-2, n, 2) at stride 2n+1, ell/(2n+1) times,
    // starting at q^{(n+1)^2}.
    for (unsigned n = 0; n <= k - 2; ++n) {
        const IntPolynomial g = gauss(k - 2, n, 2);
        const std::uint64_t period = 2 * static_cast<std::uint64_t>(n) + 1;
        const std::uint64_t count = l / period;
        const std::uint64_t base = static_cast<std::uint64_t>(n + 1) * (n + 1);
        const bool neg = n % 2;
        for (std::size_t d = 0; d <= g.degree(); ++d) {
            const Int& c = g.coeff(d);
            if (c == 0) continue;
            for (std::uint64_t t = 0; t < count; ++t) {
                Int& slot = a[base + d + period * t];
                if (neg)
                    slot -= c;
                else
                    slot += c;
            }
        }
    }
    IntPolynomial h(std::move(a));
    if (h.is_zero() || h.degree() != deg)
        throw internal_error("h_poly: degree mismatch");
    return h;
}

} // namespace qpos

#include "qpos/qseries.hpp"

#include <stdexcept>

#include "qpos/errors.hpp"

namespace qpos {

namespace {

void validate(const PochSpec& spec) {
    if (spec.step == 0)
        throw std::invalid_argument("poch: step must be >= 1");
    if (spec.param.sign != 1 && spec.param.sign != -1)
        throw std::invalid_argument("poch: sign must be +1 or -1");
}

} // namespace

bool is_degenerate(const PochSpec& spec) {
    // The first factor is (1 - a); it vanishes exactly when a = +q^0.
    const bool unit_param = spec.param.sign == 1 && spec.param.exponent == 0;
    return unit_param && (!spec.length || *spec.length > 0);
}

TruncSeries poch(const PochSpec& spec, std::size_t order) {
    validate(spec);
    TruncSeries r = TruncSeries::one(order);
    if (is_degenerate(spec)) return TruncSeries(order); // identically zero
    // Factor j is (1 - s q^{e + step j}); stop once its exponent clears the
    // truncation order (for the infinite product) or the length runs out.
    for (std::uint64_t j = 0;; ++j) {
        if (spec.length && j >= *spec.length) break;
        const std::uint64_t e = spec.param.exponent +
                                static_cast<std::uint64_t>(spec.step) * j;
        if (e > order) {
            if (!spec.length) break;
            // Finite product: remaining factors are all no-ops too.
            break;
        }
        if (e == 0) {
            // a = -q^0: factor (1 - (-1)) = 2.
            scale(r, 2);
            continue;
        }
        mul_one_minus(r, spec.param.sign, static_cast<std::size_t>(e));
    }
    return r;
}

IntPolynomial poch_poly(SignedMonomial a, unsigned step, std::uint64_t length) {
    if (step == 0) throw std::invalid_argument("poch_poly: step must be >= 1");
    IntPolynomial r = IntPolynomial::one();
    for (std::uint64_t j = 0; j < length; ++j) {
        const std::uint64_t e = a.exponent + static_cast<std::uint64_t>(step) * j;
        // (1 - s q^e); for e = 0 this is the scalar 1 - s.
        IntPolynomial factor =
            IntPolynomial::one() - IntPolynomial::monomial(a.sign, e);
        r = r * factor;
        if (r.is_zero()) break;
    }
    return r;
}

IntPolynomial gauss(std::uint64_t n, std::int64_t m, unsigned step) {
    if (step == 0) throw std::invalid_argument("gauss: step must be >= 1");
    if (m < 0 || static_cast<std::uint64_t>(m) > n) return {};
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    const SignedMonomial base = q_pow(step); // (q^step; q^step)_j factorials
    IntPolynomial num = poch_poly(base, step, n);
    IntPolynomial den =
        poch_poly(base, step, mm) * poch_poly(base, step, n - mm);
    IntPolynomial r = divexact(num, den);
    const std::uint64_t want = static_cast<std::uint64_t>(step) * mm * (n - mm);
    if (r.is_zero() || r.degree() != want)
        throw internal_error("gauss: degree mismatch");
    return r;
}

TruncSeries gauss_series(std::uint64_t n, std::uint64_t m, unsigned step,
                         std::size_t order) {
    if (step == 0) throw std::invalid_argument("gauss_series: step must be >= 1");
    if (m > n) throw std::invalid_argument("gauss_series: requires m <= n");
    // [n over m] = prod_{i=1}^{m} (1 - q^{step(n-m+i)}) / (1 - q^{step i}).
    TruncSeries r = TruncSeries::one(order);
    for (std::uint64_t i = 1; i <= m; ++i) {
        const std::uint64_t top = static_cast<std::uint64_t>(step) * (n - m + i);
        if (top <= order) mul_one_minus(r, +1, static_cast<std::size_t>(top));
        div_one_minus(r, +1, static_cast<std::size_t>(
                                 static_cast<std::uint64_t>(step) * i));
    }
    return r;
}

} // namespace qpos

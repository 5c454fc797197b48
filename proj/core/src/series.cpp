#include "qpos/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qpos/errors.hpp"

namespace qpos {

TruncSeries TruncSeries::one(std::size_t order) {
    TruncSeries s(order);
    s.c_[0] = 1;
    return s;
}

TruncSeries TruncSeries::monomial(std::size_t exponent, std::size_t order) {
    TruncSeries s(order);
    if (exponent <= order) s.c_[exponent] = 1;
    return s;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::one() { return monomial(1, 0); }

IntPolynomial IntPolynomial::monomial(Int coeff, std::size_t exponent) {
    IntPolynomial p;
    if (coeff != 0) {
        p.c_.resize(exponent + 1);
        p.c_[exponent] = std::move(coeff);
    }
    return p;
}

std::size_t IntPolynomial::degree() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    return c_.size() - 1;
}

const Int& IntPolynomial::coeff(std::size_t j) const {
    static const Int zero = 0;
    return j < c_.size() ? c_[j] : zero;
}

TruncSeries IntPolynomial::to_series(std::size_t order) const {
    TruncSeries s(order);
    const std::size_t top = std::min(order + 1, c_.size());
    for (std::size_t j = 0; j < top; ++j) s[j] = c_[j];
    return s;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < a.c_.size(); ++j) r[j] = a.c_[j];
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[j] += b.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < a.c_.size(); ++j) r[j] = a.c_[j];
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[j] -= b.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                       b.c_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(r));
}

TruncSeries axpy_shift(const TruncSeries& a, const TruncSeries& b, const Int& s,
                       std::size_t e) {
    const std::size_t n = std::min(a.order(), b.order() + e);
    TruncSeries r(n);
    for (std::size_t j = 0; j <= n; ++j) r[j] = a[j];
    for (std::size_t j = e; j <= n; ++j) {
        mpz_addmul(r[j].get_mpz_t(), s.get_mpz_t(), b[j - e].get_mpz_t());
    }
    return r;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    // Iterate over the operand with fewer nonzero coefficients in the outer
    // loop; products against sparse factors (Euler-type Pochhammers, comb
    // polynomials) dominate this library's workload.
    std::size_t nza = 0, nzb = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        if (a[j] != 0) ++nza;
        if (b[j] != 0) ++nzb;
    }
    const TruncSeries& outer = nza <= nzb ? a : b;
    const TruncSeries& inner = nza <= nzb ? b : a;
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (outer[i] == 0) continue;
        for (std::size_t j = i; j <= n; ++j) {
            mpz_addmul(r[j].get_mpz_t(), outer[i].get_mpz_t(),
                       inner[j - i].get_mpz_t());
        }
    }
    return r;
}

TruncSeries invert(const TruncSeries& a) {
    if (a[0] != 1 && a[0] != -1)
        throw std::invalid_argument("invert: non-unit constant term");
    const bool plus = a[0] == 1;
    const std::size_t n = a.order();
    TruncSeries b(n);
    b[0] = plus ? 1 : -1;
    Int acc;
    for (std::size_t j = 1; j <= n; ++j) {
        acc = 0;
        for (std::size_t i = 1; i <= j; ++i) {
            if (a[i] != 0)
                mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(),
                           b[j - i].get_mpz_t());
        }
        // a_0 b_j + acc = 0, a_0 = +-1.
        if (plus)
            b[j] = -acc;
        else
            b[j] = acc;
    }
    return b;
}

IntPolynomial divexact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw internal_error("divexact: zero divisor");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree())
        throw internal_error("divexact: nonzero remainder");
    const std::size_t dd = den.degree();
    const Int& lead = den.coeff(dd);
    std::vector<Int> rem(num.coeffs().begin(), num.coeffs().end());
    std::vector<Int> quot(num.degree() - dd + 1);
    for (std::size_t j = rem.size(); j-- > dd;) {
        if (rem[j] == 0) continue;
        if (!mpz_divisible_p(rem[j].get_mpz_t(), lead.get_mpz_t()))
            throw internal_error("divexact: nonzero remainder");
        Int qc = rem[j] / lead;
        for (std::size_t i = 0; i < dd; ++i) {
            mpz_submul(rem[j - dd + i].get_mpz_t(), qc.get_mpz_t(),
                       den.coeff(i).get_mpz_t());
        }
        rem[j] = 0;
        quot[j - dd] = std::move(qc);
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (rem[i] != 0) throw internal_error("divexact: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

std::vector<Int> prefix_sums(const IntPolynomial& p) {
    std::vector<Int> s(p.size());
    Int run = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        run += p.coeff(j);
        s[j] = run;
    }
    return s;
}

void mul_one_minus(TruncSeries& a, int sign, std::size_t e) {
    if (e == 0) throw std::invalid_argument("mul_one_minus: e must be >= 1");
    const std::size_t n = a.order();
    if (e > n) return;
    if (sign > 0) {
        for (std::size_t j = n; j >= e; --j) a[j] -= a[j - e];
    } else {
        for (std::size_t j = n; j >= e; --j) a[j] += a[j - e];
    }
}

void div_one_minus(TruncSeries& a, int sign, std::size_t e) {
    if (e == 0) throw std::invalid_argument("div_one_minus: e must be >= 1");
    const std::size_t n = a.order();
    if (e > n) return;
    if (sign > 0) {
        for (std::size_t j = e; j <= n; ++j) a[j] += a[j - e];
    } else {
        for (std::size_t j = e; j <= n; ++j) a[j] -= a[j - e];
    }
}

void shift_up(TruncSeries& a, std::size_t e) {
    if (e == 0) return;
    const std::size_t n = a.order();
    for (std::size_t j = n + 1; j-- > e;) a[j] = a[j - e];
    for (std::size_t j = 0; j < std::min(e, n + 1); ++j) a[j] = 0;
}

void add_in_place(TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("add_in_place: order mismatch");
    for (std::size_t j = 0; j <= a.order(); ++j) a[j] += b[j];
}

void sub_in_place(TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("sub_in_place: order mismatch");
    for (std::size_t j = 0; j <= a.order(); ++j) a[j] -= b[j];
}

void negate(TruncSeries& a) {
    for (std::size_t j = 0; j <= a.order(); ++j)
        mpz_neg(a[j].get_mpz_t(), a[j].get_mpz_t());
}

void scale(TruncSeries& a, const Int& s) {
    for (std::size_t j = 0; j <= a.order(); ++j) a[j] *= s;
}

} // namespace qpos

#include "qpos/verify.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace qpos {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Exact running sum with an int64 fast path; promotes to mpz on the first
// overflow and stays there. In practice the prefix sums of h_poly stay tiny,
// but correctness must not depend on that.
class CheckedSum {
public:
    void add(std::int64_t v) {
        if (small_) {
            std::int64_t r;
            if (!__builtin_add_overflow(s_, v, &r)) {
                s_ = r;
                return;
            }
            big_ = s_;
            small_ = false;
        }
        big_ += v;
    }

    bool less_than(const CheckedSum& o) const {
        if (small_ && o.small_) return s_ < o.s_;
        return value() < o.value();
    }

    Int value() const { return small_ ? Int(s_) : big_; }

private:
    bool small_ = true;
    std::int64_t s_ = 0;
    Int big_;
};

} // namespace

PrefixReport verify_prefix_materialized(unsigned k, unsigned cap) {
    const auto t0 = Clock::now();
    const IntPolynomial h = h_poly(k, cap); // validates k and the cap
    PrefixReport r;
    r.k = k;
    r.ell = ell(k);
    r.degree = h.degree();
    r.mode = ScanMode::materialized;
    Int run = 0;
    Int best = 0;
    std::uint64_t best_at = 0;
    for (std::size_t j = 0; j < h.size(); ++j) {
        run += h.coeff(j);
        if (j == 0 || run < best) {
            best = run;
            best_at = j;
        }
    }
    r.min_prefix = best;
    r.argmin = best_at;
    r.verified = best >= 0;
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

PrefixReport verify_prefix_stream(unsigned k) {
    if (k < 3)
        throw std::invalid_argument("verify_prefix_stream: requires k >= 3");
    const auto t0 = Clock::now();
    const std::uint64_t l = ell(k); // throws overflow_error when out of range
    const std::uint64_t deg = h_degree(k);

    // Comb n contributes (-1)^n gauss(k-2, n, 2) replicated ell/(2n+1) times
    // at stride 2n+1 from offset (n+1)^2. The Gaussian coefficients are far
    // below 2^63 for any k whose ell fits in 64 bits.
    struct Comb {
        std::vector<std::int64_t> g;
        std::uint64_t period = 1;
        std::uint64_t count = 0;
        std::uint64_t base = 0;
        std::int64_t sign = 1;
    };
    std::vector<Comb> combs(k - 1);
    for (unsigned n = 0; n <= k - 2; ++n) {
        Comb& c = combs[n];
        const IntPolynomial g = gauss(k - 2, n, 2);
        c.g.resize(g.size());
        for (std::size_t d = 0; d < g.size(); ++d) {
            if (!g.coeff(d).fits_slong_p())
                throw internal_error("verify_prefix_stream: comb coefficient "
                                     "exceeds the machine-word fast path");
            c.g[d] = g.coeff(d).get_si();
        }
        c.period = 2 * static_cast<std::uint64_t>(n) + 1;
        c.count = l / c.period;
        c.base = static_cast<std::uint64_t>(n + 1) * (n + 1);
        c.sign = n % 2 ? -1 : 1;
    }

    CheckedSum run;
    CheckedSum best;
    std::uint64_t best_at = 0;
    bool first = true;
    for (std::uint64_t j = 0; j <= deg; ++j) {
        // Coefficient of q^j, re-derived from the combs: comb n contributes
        // g[d] for every tooth d + base + period*t == j with t in [0, count).
        std::int64_t aj = 0;
        for (const Comb& c : combs) {
            if (j < c.base) continue;
            const std::uint64_t hi = j - c.base; // candidate d at t = 0
            const std::uint64_t dmax =
                std::min<std::uint64_t>(c.g.size() - 1, hi);
            const std::uint64_t span = (c.count - 1) * c.period;
            const std::uint64_t dmin = hi > span ? hi - span : 0;
            if (dmin > dmax) continue;
            std::uint64_t d = dmin + (hi - dmin) % c.period;
            for (; d <= dmax; d += c.period) aj += c.sign * c.g[d];
        }
        run.add(aj);
        if (first || run.less_than(best)) {
            best = run;
            best_at = j;
            first = false;
        }
    }

    PrefixReport r;
    r.k = k;
    r.ell = l;
    r.degree = deg;
    r.min_prefix = best.value();
    r.argmin = best_at;
    r.verified = r.min_prefix >= 0;
    r.mode = ScanMode::streaming;
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

std::size_t scan_violations(const TruncSeries& s, std::size_t from,
                            bool require_positive, const std::string& where,
                            std::vector<Counterexample>& out) {
    std::size_t found = 0;
    for (std::size_t j = from; j <= s.order(); ++j) {
        const bool bad = require_positive ? s[j] <= 0 : s[j] < 0;
        if (bad) {
            out.push_back({where, j, s[j]});
            ++found;
        }
    }
    return found;
}

namespace {

ConjectureReport finish(ConjectureReport r) {
    r.status = r.counterexamples.empty()
                   ? ScanStatus::no_counterexample_to_order
                   : ScanStatus::counterexample;
    return r;
}

} // namespace

ConjectureReport strict_positivity(unsigned k, unsigned m, std::size_t order) {
    if (k < 1 || m < 1)
        throw std::invalid_argument(
            "strict_positivity: requires k >= 1 and m >= 1");
    ConjectureReport r;
    r.conjecture = "strict-positivity";
    r.grid = "k=" + std::to_string(k) + " m=" + std::to_string(m) +
             " n in [" + std::to_string(m) + ", " + std::to_string(order) + "]";
    r.order = order;
    r.cells = 1;
    const TruncSeries f = f_def(k, m, order);
    scan_violations(f, std::min<std::size_t>(m, order + 1), true,
                    "k=" + std::to_string(k) + " m=" + std::to_string(m), r.counterexamples);
    return finish(std::move(r));
}

ConjectureReport conj_G(unsigned k_max, unsigned n_max, std::size_t order) {
    if (k_max < 1)
        throw std::invalid_argument("conj_G: requires k_max >= 1");
    ConjectureReport r;
    r.conjecture = "G-nonnegativity";
    r.grid = "k in [1, " + std::to_string(k_max) + "], n in [0, " +
             std::to_string(n_max) + "]";
    r.order = order;
    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned n = 0; n <= n_max; ++n) {
            const TruncSeries g = g_poch(k, n, order);
            scan_violations(g, 0, false,
                            "k=" + std::to_string(k) + " n=" + std::to_string(n),
                            r.counterexamples);
            ++r.cells;
        }
    }
    return finish(std::move(r));
}

ConjectureReport conj_diff(unsigned k_max, unsigned n_max, std::size_t order) {
    ConjectureReport r;
    r.conjecture = "G-difference-nonnegativity";
    r.grid = "n in [1, " + std::to_string(n_max) + "], k in [n+1, " +
             std::to_string(k_max) + "]";
    r.order = order;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned k = n + 1; k <= k_max; ++k) {
            TruncSeries d = g_poch(k, n, order);
            sub_in_place(d, g_poch(k + 1, n - 1, order));
            scan_violations(d, 0, false,
                            "k=" + std::to_string(k) + " n=" + std::to_string(n),
                            r.counterexamples);
            ++r.cells;
        }
    }
    return finish(std::move(r));
}

ConjectureReport lemma53_check(unsigned n_max, std::size_t order) {
    ConjectureReport r;
    r.conjecture = "G-symmetry";
    r.grid = "0 <= j <= n <= " + std::to_string(n_max);
    r.order = order;
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned j = 0; j <= n; ++j) {
            const TruncSeries lhs = g_poch(n + 2 - j, n, order);
            const TruncSeries rhs = g_poch(n + 2, n - j, order);
            if (!(lhs == rhs))
                throw internal_error(
                    "lemma53_check: G_{n+2-j,n} != G_{n+2,n-j} at n=" +
                    std::to_string(n) + " j=" + std::to_string(j) +
                    " (this identity is proved; the implementation is broken)");
            ++r.cells;
        }
    }
    return finish(std::move(r));
}

bool check_decomposition(unsigned k, unsigned n,
                         const std::vector<IntPolynomial>& z) {
    if (z.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument(
            "check_decomposition: expected exactly n+1 numerators");
    std::size_t max_deg = 0;
    for (const IntPolynomial& p : z) {
        for (const Int& c : p.coeffs())
            if (c < 0) return false;
        if (!p.is_zero()) max_deg = std::max(max_deg, p.degree());
    }
    // Both sides are P/(q;q^2)_{n+1} for polynomials P; if their expansions
    // agree past the larger numerator degree, the numerators are equal, so
    // agreement to this order is a proof, not a spot check.
    const std::size_t den_deg = static_cast<std::size_t>(n + 1) * (n + 1);
    const std::size_t g_num_deg =
        static_cast<std::size_t>(n) * (2 * static_cast<std::size_t>(k) + n - 2);
    const std::size_t order =
        std::max({std::size_t{200}, max_deg + den_deg, g_num_deg}) + 1;
    TruncSeries sum(order);
    for (unsigned j = 0; j <= n; ++j) {
        TruncSeries t = z[j].to_series(order);
        div_one_minus(t, +1, 2 * j + 1);
        add_in_place(sum, t);
    }
    return sum == g_poch(k, n, order);
}

} // namespace qpos

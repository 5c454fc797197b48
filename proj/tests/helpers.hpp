#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qpos/series.hpp"

namespace qpos_test {

inline qpos::TruncSeries series_of(const std::vector<long>& v) {
    qpos::TruncSeries s(v.empty() ? 0 : v.size() - 1);
    for (std::size_t j = 0; j < v.size(); ++j) s[j] = v[j];
    return s;
}

inline qpos::IntPolynomial poly_of(const std::vector<long>& v) {
    std::vector<qpos::Int> c(v.begin(), v.end());
    return qpos::IntPolynomial(std::move(c));
}

inline bool coeffs_are(const qpos::TruncSeries& s, const std::vector<long>& v) {
    if (s.order() + 1 != v.size()) return false;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (s[j] != v[j]) return false;
    return true;
}

// splitmix64; deterministic across platforms so failures reproduce exactly.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline qpos::TruncSeries random_series(Rng& rng, std::size_t order, long lo = -4,
                                       long hi = 4) {
    qpos::TruncSeries s(order);
    for (std::size_t j = 0; j <= order; ++j) s[j] = rng.range(lo, hi);
    return s;
}

inline qpos::IntPolynomial random_poly(Rng& rng, std::size_t max_deg) {
    std::vector<qpos::Int> c(rng.range(0, static_cast<long>(max_deg)) + 1);
    for (auto& x : c) x = rng.range(-4, 4);
    return qpos::IntPolynomial(std::move(c));
}

struct CmdResult {
    int code = -1;
    std::string out;
};

// Runs a shell command, capturing interleaved stdout+stderr.
inline CmdResult run_cmd(const std::string& cmd) {
    CmdResult r;
    const std::string full = cmd + " 2>&1";
    FILE* p = popen(full.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int rc = pclose(p);
    if (WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
    return r;
}

} // namespace qpos_test

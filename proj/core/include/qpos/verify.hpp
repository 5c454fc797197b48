#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qpos/errors.hpp"
#include "qpos/generating.hpp"
#include "qpos/series.hpp"

namespace qpos {

enum class ScanMode { materialized, streaming };

// Outcome of a prefix-sum scan of h_poly(k). verified == true means every
// prefix sum is non-negative, which certifies positivity of the coefficients
// of F_{k,1}. verified == false is inconclusive, not a refutation: the
// prefix criterion is sufficient, not necessary.
struct PrefixReport {
    unsigned k = 0;
    std::uint64_t ell = 0;
    std::uint64_t degree = 0;       // h_degree(k)
    Int min_prefix;
    std::uint64_t argmin = 0;       // smallest j attaining min_prefix
    bool verified = false;
    ScanMode mode = ScanMode::streaming;
    double elapsed_seconds = 0.0;
};

// Materializes h_poly(k) and scans its running sums. Honest about memory:
// holds degree+1 exact coefficients, so it is gated by the same cap as
// h_poly.
PrefixReport verify_prefix_materialized(unsigned k,
                                        unsigned cap = kDefaultMaterializeCap);

// Computes the same scan without ever materializing h_poly: the coefficient
// of q^j is re-derived on the fly from the k-1 Gaussian-binomial combs, so
// memory is O(k^3) small integers regardless of ell(k). The running sum uses
// an overflow-checked int64 fast path that promotes to arbitrary precision
// if it ever overflows.
PrefixReport verify_prefix_stream(unsigned k);

enum class ScanStatus { no_counterexample_to_order, counterexample };

struct Counterexample {
    std::string where;      // parameter slot, e.g. "k=4 n=2"
    std::uint64_t exponent; // offending power of q
    Int coefficient;        // the exact offending value
};

struct ConjectureReport {
    std::string conjecture;
    std::string grid;       // human-readable description of the scanned grid
    std::size_t order = 0;
    std::size_t cells = 0;  // number of (parameter, series) cells scanned
    std::vector<Counterexample> counterexamples;
    ScanStatus status = ScanStatus::no_counterexample_to_order;
};

// Scans coefficients m..order of F_{k,m} for c(n) <= 0. The structural zero
// c(n) = 0 for n < m is not a counterexample and is excluded by construction.
ConjectureReport strict_positivity(unsigned k, unsigned m, std::size_t order);

// Scans G_{k,n} for a negative coefficient, k in [1, k_max], n in [0, n_max].
ConjectureReport conj_G(unsigned k_max, unsigned n_max, std::size_t order);

// Scans G_{k,n} - G_{k+1,n-1} for a negative coefficient over n in [1, n_max]
// and k in [n+1, k_max]; cells with k <= n are outside the conjecture and are
// skipped.
ConjectureReport conj_diff(unsigned k_max, unsigned n_max, std::size_t order);

// Cross-checks the proved symmetry G_{n+2-j,n} == G_{n+2,n-j} (0 <= j <= n <=
// n_max) to the given order. The symmetry is proved, so a mismatch escalates
// as internal_error instead of being reported as a finding.
ConjectureReport lemma53_check(unsigned n_max, std::size_t order = 200);

// True iff the n+1 numerators z_j are coefficient-wise non-negative AND
// sum_j z_j / (1 - q^{2j+1}) agrees with g_poch(k, n) through an order high
// enough to make the agreement a proof of equality. Throws
// std::invalid_argument unless exactly n+1 numerators are supplied.
bool check_decomposition(unsigned k, unsigned n,
                         const std::vector<IntPolynomial>& z);

// Scans a series' coefficients on [from, order] for values < 0 (require_positive
// false) or <= 0 (true), appending exact locations to out. Returns the number
// of violations found. The conj_* scans are thin wrappers over this.
std::size_t scan_violations(const TruncSeries& s, std::size_t from,
                            bool require_positive, const std::string& where,
                            std::vector<Counterexample>& out);

// A persisted, digest-protected record of one prefix-sum verification.
struct Certificate {
    std::string method;        // "prefix_stream/v1" or "prefix_materialized/v1"
    unsigned k = 0;
    std::uint64_t ell = 0;
    std::uint64_t degree = 0;
    Int min_prefix;
    std::uint64_t argmin = 0;
    bool verified = false;
    std::string digest;        // SHA-256 hex over the canonical serialization
    std::string tool_version;
    std::string timestamp;     // RFC 3339 UTC; honors SOURCE_DATE_EPOCH

    bool operator==(const Certificate&) const = default;
};

// SHA-256 over the canonical little-endian serialization of
// (k, ell, degree, min_prefix, argmin); lowercase hex.
std::string certificate_digest(unsigned k, std::uint64_t ell,
                               std::uint64_t degree, const Int& min_prefix,
                               std::uint64_t argmin);

Certificate make_certificate(const PrefixReport& report);

// Serializes as pretty-printed JSON, written atomically (temp file + rename)
// so concurrent readers never observe a torn certificate.
void write_certificate(const Certificate& cert,
                       const std::filesystem::path& path);

// Parses and re-derives the digest from the loaded fields; any mismatch (or
// malformed content) throws certificate_error.
Certificate load_certificate(const std::filesystem::path& path);

} // namespace qpos

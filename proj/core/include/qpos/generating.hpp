#pragma once

#include <cstdint>

#include "qpos/qseries.hpp"
#include "qpos/series.hpp"

namespace qpos {

// Largest k the exact-polynomial (materializing) routines accept by default:
// h_poly(10) already has degree 765829. Anything above should go through the
// streaming verifier, which never holds the polynomial in memory.
inline constexpr unsigned kDefaultMaterializeCap = 10;

// lcm(1, 3, 5, ..., 2k-3) for k >= 2 (and 1 for k < 2). Throws
// std::overflow_error if the value does not fit in 64 bits.
std::uint64_t ell(unsigned k);

// Degree of h_poly(k): ell(k) + (k-2)^2.
std::uint64_t h_degree(unsigned k);

// F_{k,m}(q) = sum_{n>=0} [(q^{2n+2}; q^2)_inf (q^{2n+2k}; q^2)_inf /
//              (q^{2n+1}; q^2)_inf^2] q^{m(2n+1)}, k, m >= 1.
// Coefficient c_{k,m}(n) counts partition-difference weights; c(0) = 0.
TruncSeries f_def(unsigned k, unsigned m, std::size_t order);

// Single-sum form of F_{k,1} valid for k >= 3 (throws std::invalid_argument
// below that): q/[(1-q)(q; q^2)_{k-1}] * [ (1-q) sum over the k-1 residues ].
TruncSeries f_sum31(unsigned k, std::size_t order);

// Single-sum form of F_{k,1} valid for all k >= 1:
// sum_{n>=0} (q^{2k-1}; q^2)_n q^{n+1} / (q; q^2)_{n+1}.
TruncSeries f_sum32(unsigned k, std::size_t order);

// The third-order mock theta function
// omega(q) = sum_{n>=0} q^{2n(n+1)} / (q; q^2)_{n+1}^2.
TruncSeries omega(std::size_t order);

// E_k(q) with q omega(q) - F_{k,1}(q) = q^{2k+1} E_k(q):
// E_k = 1/[(1-q)(1-q^3)] * sum_{n>=0} q^n/(q^5; q^2)_n *
//       sum_{j=0}^{n} [n+1 over j+1]_{q^2} (-1)^j q^{j^2 + 2kj}.
TruncSeries e_k(unsigned k, std::size_t order);

// G_{k,n}(q) = (q^{2k-1}; q^2)_n / (q; q^2)_{n+1}, the n-th partial-sum
// increment of f_sum32: F = sum_n G_{k,n} q^{n+1}.
TruncSeries g_poch(unsigned k, unsigned n, std::size_t order);

// The same G_{k,n} computed the q-binomial way:
// [2k+2n-2 over 2n]_q / ([k+n-1 over n]_{q^2} (1 - q^{2n+1})), with the
// denominator inverted as a truncated series (unit constant term).
TruncSeries g_binquot(unsigned k, unsigned n, std::size_t order);

// H_k(q) = sum_{n=0}^{k-2} [k-2 over n]_{q^2} (-1)^n q^{(n+1)^2}
//          sum_{j=0}^{ell/(2n+1)-1} q^{(2n+1)j},
// the exact polynomial of degree h_degree(k) whose prefix sums being
// non-negative certifies positivity of F_{k,1}. Materializes all
// h_degree(k)+1 coefficients; k must be in [3, cap].
IntPolynomial h_poly(unsigned k, unsigned cap = kDefaultMaterializeCap);

} // namespace qpos

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ntau/geometry.hpp"

namespace ntau {

inline constexpr std::size_t kDefaultEnumCap = 1'000'000;

/// The m digit-grid sets P_0..P_{m-1} for base b:
///   P_k = {(b^(2k)*i, b^k*j) : 0 <= i <= b^2-1, 0 <= j <= b-1},
/// each of exactly b^3 points. Their Minkowski sum is the full
/// b^(2m) x b^m grid (digit decomposition in bases b^2 and b).
struct GridFamily {
    unsigned long base = 2; // b >= 2
    unsigned count = 1;     // m >= 1
    std::vector<PointSet> sets;
};

/// Builds the family; b^(3m) (the downstream sum size) must stay within
/// `enum_cap`.
GridFamily example_grids(unsigned long b, unsigned m,
                         std::size_t enum_cap = kDefaultEnumCap);

/// Iterated Minkowski sum of the given sets; every pairwise step's
/// pre-deduplication size must stay within `cap`.
PointSet minkowski_multi(const std::vector<PointSet>& sets,
                         std::size_t cap = kDefaultEnumCap);

/// Convexly independent staircase inside the M x N grid: points
/// (j(j+1)/2, j) for j = 0..n-1 where n is the largest integer with
/// n(n-1)/2 < M and n < N (at least 1; the origin always fits). The j-th
/// step has horizontal length j and slope 1/j, so slopes strictly decrease.
PointSet grid_staircase(const mpz_class& M, const mpz_class& N);

/// The staircase for the b^(2m) x b^m grid, checked to be convexly
/// independent, of cardinality >= b^m - 1, and inside the Minkowski sum of
/// example_grids(b, m) via base-b^2 / base-b digit decomposition.
PointSet lb_witness(unsigned long b, unsigned m,
                    std::size_t enum_cap = kDefaultEnumCap);

/// (P, S): P is the union of the sets, S a convexly independent subset of
/// the |sets|-fold sum P+...+P obtained from the sets' Minkowski sum
/// (membership verified).
std::pair<PointSet, PointSet> union_powers_witness(
    const std::vector<PointSet>& sets, std::size_t enum_cap = kDefaultEnumCap,
    std::size_t dp_cap = kDefaultDpCap);

/// Exact maximum cardinality of a convexly independent subset of the full
/// Minkowski sum of the sets.
std::size_t measure_Mm(const std::vector<PointSet>& sets,
                       std::size_t enum_cap = kDefaultEnumCap,
                       std::size_t dp_cap = kDefaultDpCap);

} // namespace ntau

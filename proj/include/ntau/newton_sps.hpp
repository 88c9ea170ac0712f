#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ntau/geometry.hpp"
#include "ntau/poly.hpp"

namespace ntau {

inline constexpr std::size_t kDefaultExpandCap = 1'000'000;

/// Sum-of-products expression: k rows of sparse polynomial factors.
/// The shape parameters are derived, never stored: k = row count,
/// m = longest row, t = largest factor term count.
class SpsExpression {
public:
    explicit SpsExpression(std::vector<std::vector<SparsePoly>> rows);

    const std::vector<std::vector<SparsePoly>>& rows() const { return rows_; }
    std::size_t k() const { return rows_.size(); }
    std::size_t m() const; // max row length
    std::size_t t() const; // max factor term count

    friend bool operator==(const SpsExpression& a, const SpsExpression& b) {
        return a.rows_ == b.rows_;
    }

private:
    std::vector<std::vector<SparsePoly>> rows_;
};

/// convex_hull(support(p)).
ConvexPolygon newton_polygon(const SparsePoly& p);

/// sum_i prod_j f_ij, exact. Pre-cancellation size (sum over rows of the
/// product of factor term counts) must not exceed `cap`.
SparsePoly expand_sps(const SpsExpression& e, std::size_t cap = kDefaultExpandCap);

/// conv of the union over rows of the Minkowski sums of the factor
/// polygons. Contains the Newton polygon of the expansion always, with
/// equality when no monomial cancels.
ConvexPolygon envelope(const SpsExpression& e);

/// Rewrites each length-m row through the Fischer expansion; all rows must
/// have equal length. Result has 2^(m-1)*k summands of exponent m and the
/// same semantic value.
PowerSumExpression sps_to_powers(const SpsExpression& e);

/// (F, G) with F the expanded product of the first floor(m/2) factors and
/// G the expanded product of the rest; F*G equals the full product.
std::pair<SparsePoly, SparsePoly> split_product(const std::vector<SparsePoly>& factors,
                                                std::size_t cap = kDefaultExpandCap);

/// Cardinality of a maximum convexly independent subset of
/// support(p) + support(q).
std::size_t convexly_independent_in_sum(const SparsePoly& p, const SparsePoly& q,
                                        std::size_t cap = kDefaultDpCap);

/// Measured edge counts of one expression next to every candidate bound.
/// The asymptotic bounds are reported with constant 1 for comparison only;
/// they are evaluated in floating point at this report boundary, the core
/// stays exact.
struct EdgeReport {
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t t = 0;
    std::size_t expanded_terms = 0;         // after cancellation
    std::size_t edges = 0;                  // edge_count of the true Newton polygon
    std::size_t envelope_edges = 0;
    mpz_class bound_no_cancel;              // k*m*t, exact
    double bound_2polys = 0.0;              // k*(r^(2/3) s^(2/3) + r + s)
    double bound_mpolys = 0.0;              // k*t^(2m/3)
    double bound_weak = 0.0;                // 2^((m + log2(k t))^c)
    mpq_class c;
    bool containment_ok = false;
};

/// Expands e, measures the polygon, and fills in every bound. c must lie
/// in (0, 2).
EdgeReport sps_edge_report(const SpsExpression& e, const mpq_class& c,
                           std::size_t expand_cap = kDefaultExpandCap);

enum class CoeffMode { Positive, Signed, Cancelling };

/// Reproducible random expression: k rows of m factors with t terms each,
/// exponents in [0, exponent_bound]. Cancelling mode (k >= 2) plants k-1
/// rows whose factors all carry constant terms plus one constant row that
/// cancels the expansion's constant term, so the origin drops out of the
/// support.
SpsExpression random_sps(std::size_t k, std::size_t m, std::size_t t,
                         unsigned long exponent_bound, CoeffMode mode,
                         std::uint64_t seed);

} // namespace ntau

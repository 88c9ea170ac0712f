#include "ntau/newton_sps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ntau/errors.hpp"
#include "ntau/rng.hpp"

namespace ntau {

SpsExpression::SpsExpression(std::vector<std::vector<SparsePoly>> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("SpsExpression: needs at least one row");
    for (const auto& row : rows_) {
        if (row.empty()) throw std::invalid_argument("SpsExpression: empty row");
        for (const auto& f : row)
            if (f.is_zero()) throw std::invalid_argument("SpsExpression: zero factor");
    }
}

std::size_t SpsExpression::m() const {
    std::size_t m = 0;
    for (const auto& row : rows_) m = std::max(m, row.size());
    return m;
}

std::size_t SpsExpression::t() const {
    std::size_t t = 0;
    for (const auto& row : rows_)
        for (const auto& f : row) t = std::max(t, f.term_count());
    return t;
}

ConvexPolygon newton_polygon(const SparsePoly& p) {
    return convex_hull(support(p));
}

namespace {

mpz_class pre_cancellation_terms(const SpsExpression& e) {
    mpz_class total = 0;
    for (const auto& row : e.rows()) {
        mpz_class prod = 1;
        for (const auto& f : row) prod *= static_cast<unsigned long>(f.term_count());
        total += prod;
    }
    return total;
}

SparsePoly expand_row(const std::vector<SparsePoly>& row) {
    SparsePoly prod = row[0];
    for (std::size_t j = 1; j < row.size(); ++j) prod = prod * row[j];
    return prod;
}

} // namespace

SparsePoly expand_sps(const SpsExpression& e, std::size_t cap) {
    if (pre_cancellation_terms(e) > static_cast<unsigned long>(cap))
        throw CapExceeded("expand_sps: pre-cancellation term count exceeds cap " +
                          std::to_string(cap));
    SparsePoly total;
    for (const auto& row : e.rows()) total += expand_row(row);
    return total;
}

ConvexPolygon envelope(const SpsExpression& e) {
    std::vector<LatticePoint> vertices;
    for (const auto& row : e.rows()) {
        ConvexPolygon row_polygon = newton_polygon(row[0]);
        for (std::size_t j = 1; j < row.size(); ++j)
            row_polygon = minkowski_sum_polygons(row_polygon, newton_polygon(row[j]));
        const auto& v = row_polygon.vertices();
        vertices.insert(vertices.end(), v.begin(), v.end());
    }
    return convex_hull(PointSet(std::move(vertices)));
}

PowerSumExpression sps_to_powers(const SpsExpression& e) {
    const std::size_t m = e.rows()[0].size();
    for (const auto& row : e.rows())
        if (row.size() != m)
            throw std::invalid_argument("sps_to_powers: rows must have equal length");
    PowerSumExpression out;
    out.exponent = static_cast<unsigned long>(m);
    for (const auto& row : e.rows()) {
        PowerSumExpression part = fischer_expand(row);
        for (auto& s : part.summands) out.summands.push_back(std::move(s));
    }
    return out;
}

std::pair<SparsePoly, SparsePoly> split_product(const std::vector<SparsePoly>& factors,
                                                std::size_t cap) {
    if (factors.size() < 2)
        throw std::invalid_argument("split_product: need at least two factors");
    const std::size_t half = factors.size() / 2;
    std::vector<std::vector<SparsePoly>> first(
        1, std::vector<SparsePoly>(factors.begin(),
                                   factors.begin() + static_cast<std::ptrdiff_t>(half)));
    std::vector<std::vector<SparsePoly>> second(
        1, std::vector<SparsePoly>(factors.begin() + static_cast<std::ptrdiff_t>(half),
                                   factors.end()));
    return {expand_sps(SpsExpression(std::move(first)), cap),
            expand_sps(SpsExpression(std::move(second)), cap)};
}

std::size_t convexly_independent_in_sum(const SparsePoly& p, const SparsePoly& q,
                                        std::size_t cap) {
    const mpz_class product =
        mpz_class(static_cast<unsigned long>(p.term_count())) *
        static_cast<unsigned long>(q.term_count());
    if (product > static_cast<unsigned long>(cap))
        throw CapExceeded("convexly_independent_in_sum: |Mon(p)|*|Mon(q)| exceeds cap " +
                          std::to_string(cap));
    return max_convex_subset(minkowski_sum(support(p), support(q)), cap).size();
}

EdgeReport sps_edge_report(const SpsExpression& e, const mpq_class& c,
                           std::size_t expand_cap) {
    if (!(c > 0 && c < 2))
        throw std::invalid_argument("sps_edge_report: c must lie in (0, 2)");

    EdgeReport r;
    r.k = e.k();
    r.m = e.m();
    r.t = e.t();
    r.c = c;

    const SparsePoly expanded = expand_sps(e, expand_cap);
    const ConvexPolygon newt = newton_polygon(expanded);
    const ConvexPolygon env = envelope(e);

    r.expanded_terms = expanded.term_count();
    r.edges = edge_count(newt);
    r.envelope_edges = edge_count(env);
    r.bound_no_cancel = mpz_class(static_cast<unsigned long>(r.k)) *
                        static_cast<unsigned long>(r.m) *
                        static_cast<unsigned long>(r.t);

    const double k = static_cast<double>(r.k);
    const double m = static_cast<double>(r.m);
    const double t = static_cast<double>(r.t);
    const double rr = std::pow(t, std::floor(m / 2.0));
    const double ss = std::pow(t, std::ceil(m / 2.0));
    r.bound_2polys = k * (std::pow(rr, 2.0 / 3.0) * std::pow(ss, 2.0 / 3.0) + rr + ss);
    r.bound_mpolys = k * std::pow(t, 2.0 * m / 3.0);
    r.bound_weak = std::pow(2.0, std::pow(m + std::log2(k * t), c.get_d()));

    r.containment_ok = true;
    for (const auto& pt : support(expanded))
        if (!env.contains(pt)) {
            r.containment_ok = false;
            break;
        }
    return r;
}

namespace {

SparsePoly random_factor(Rng& rng, std::size_t t, unsigned long exponent_bound,
                         bool positive, bool force_constant) {
    const mpz_class slots = mpz_class(exponent_bound + 1) * (exponent_bound + 1);
    if (slots < static_cast<unsigned long>(t))
        throw std::invalid_argument("random_factor: exponent_bound too small for t terms");
    std::vector<Monomial> monoms;
    if (force_constant) monoms.emplace_back(0, 0);
    while (monoms.size() < t) {
        Monomial m(rng.range(0, static_cast<long>(exponent_bound)),
                   rng.range(0, static_cast<long>(exponent_bound)));
        if (std::find(monoms.begin(), monoms.end(), m) == monoms.end())
            monoms.push_back(std::move(m));
    }
    SparsePoly f;
    for (const auto& m : monoms)
        f += SparsePoly::monomial(m, rng.nonzero_rational(!positive));
    return f;
}

mpq_class constant_coefficient(const SparsePoly& f) {
    return f.coefficient(Monomial(0, 0));
}

} // namespace

SpsExpression random_sps(std::size_t k, std::size_t m, std::size_t t,
                         unsigned long exponent_bound, CoeffMode mode,
                         std::uint64_t seed) {
    if (k < 1 || m < 1 || t < 1)
        throw std::invalid_argument("random_sps: k, m, t must be positive");
    Rng rng(seed);

    if (mode == CoeffMode::Cancelling && k >= 2) {
        // k-1 product rows whose factors all carry constant terms; the final
        // row is the single constant that erases the expansion's constant
        // term, so the origin escapes the support of the sum.
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<std::vector<SparsePoly>> rows;
            mpq_class total_constant = 0;
            for (std::size_t i = 0; i + 1 < k; ++i) {
                std::vector<SparsePoly> row;
                mpq_class row_constant = 1;
                for (std::size_t j = 0; j < m; ++j) {
                    SparsePoly f = random_factor(rng, t, exponent_bound, false, true);
                    row_constant *= constant_coefficient(f);
                    row.push_back(std::move(f));
                }
                total_constant += row_constant;
                rows.push_back(std::move(row));
            }
            if (sgn(total_constant) == 0) continue; // nothing to cancel; resample
            rows.push_back({SparsePoly::constant(-total_constant)});
            return SpsExpression(std::move(rows));
        }
        throw std::runtime_error("random_sps: cancelling mode failed to find a nonzero constant");
    }

    const bool positive = mode == CoeffMode::Positive;
    std::vector<std::vector<SparsePoly>> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<SparsePoly> row;
        row.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            row.push_back(random_factor(rng, t, exponent_bound, positive, false));
        rows.push_back(std::move(row));
    }
    return SpsExpression(std::move(rows));
}

} // namespace ntau

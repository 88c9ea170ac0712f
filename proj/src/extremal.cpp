#include "ntau/extremal.hpp"

#include <stdexcept>

#include "ntau/errors.hpp"

namespace ntau {

namespace {

mpz_class mpz_pow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

} // namespace

GridFamily example_grids(unsigned long b, unsigned m, std::size_t enum_cap) {
    if (b < 2) throw std::invalid_argument("example_grids: b must be >= 2");
    if (m < 1) throw std::invalid_argument("example_grids: m must be >= 1");
    if (mpz_pow(b, 3ul * m) > static_cast<unsigned long>(enum_cap))
        throw CapExceeded("example_grids: b^(3m) exceeds enumeration cap " +
                          std::to_string(enum_cap));

    GridFamily family;
    family.base = b;
    family.count = m;
    for (unsigned k = 0; k < m; ++k) {
        const mpz_class wx = mpz_pow(b, 2ul * k);
        const mpz_class wy = mpz_pow(b, k);
        std::vector<LatticePoint> pts;
        pts.reserve(static_cast<std::size_t>(b) * b * b);
        for (unsigned long i = 0; i < b * b; ++i)
            for (unsigned long j = 0; j < b; ++j)
                pts.emplace_back(wx * i, wy * j);
        family.sets.emplace_back(std::move(pts));
    }
    return family;
}

PointSet minkowski_multi(const std::vector<PointSet>& sets, std::size_t cap) {
    if (sets.empty()) throw std::invalid_argument("minkowski_multi: empty set list");
    PointSet acc = sets[0];
    for (std::size_t i = 1; i < sets.size(); ++i) {
        const mpz_class pairwise =
            mpz_class(static_cast<unsigned long>(acc.size())) *
            static_cast<unsigned long>(sets[i].size());
        if (pairwise > static_cast<unsigned long>(cap))
            throw CapExceeded("minkowski_multi: pairwise sum size exceeds cap " +
                              std::to_string(cap));
        acc = minkowski_sum(acc, sets[i]);
    }
    return acc;
}

PointSet grid_staircase(const mpz_class& M, const mpz_class& N) {
    if (sgn(M) <= 0 || sgn(N) <= 0)
        throw std::invalid_argument("grid_staircase: M and N must be positive");
    // largest n with n(n-1)/2 < M and n < N, clamped to >= 1 (the origin
    // alone fits in any grid)
    mpz_class n = 1;
    while (true) {
        const mpz_class next = n + 1;
        if (next * (next - 1) / 2 < M && next < N) n = next;
        else break;
    }
    std::vector<LatticePoint> pts;
    for (mpz_class j = 0; j < n; ++j) pts.emplace_back(j * (j + 1) / 2, j);
    return PointSet(std::move(pts));
}

namespace {

// Constructive membership of (x, y) in P_0 + ... + P_{m-1}: split x into m
// base-b^2 digits and y into m base-b digits; digit k scaled by its weight
// is the P_k summand. Digits of in-range coordinates are in range by
// construction, so this check amounts to 0 <= x < b^(2m), 0 <= y < b^m,
// carried out digit by digit.
bool decomposes_into_grids(const LatticePoint& p, unsigned long b, unsigned m) {
    if (sgn(p.x) < 0 || sgn(p.y) < 0) return false;
    mpz_class x = p.x, y = p.y;
    LatticePoint rebuilt(0, 0);
    const mpz_class bx = mpz_class(b) * b;
    const mpz_class by = b;
    for (unsigned k = 0; k < m; ++k) {
        const mpz_class dx = x % bx;
        const mpz_class dy = y % by;
        rebuilt.x += dx * mpz_pow(b, 2ul * k);
        rebuilt.y += dy * mpz_pow(b, k);
        x /= bx;
        y /= by;
    }
    return sgn(x) == 0 && sgn(y) == 0 && rebuilt == p;
}

} // namespace

PointSet lb_witness(unsigned long b, unsigned m, std::size_t enum_cap) {
    if (b < 2) throw std::invalid_argument("lb_witness: b must be >= 2");
    if (m < 1) throw std::invalid_argument("lb_witness: m must be >= 1");
    if (mpz_pow(b, 3ul * m) > static_cast<unsigned long>(enum_cap))
        throw CapExceeded("lb_witness: b^(3m) exceeds enumeration cap " +
                          std::to_string(enum_cap));

    const PointSet witness = grid_staircase(mpz_pow(b, 2ul * m), mpz_pow(b, m));
    if (!is_convexly_independent(witness))
        throw std::logic_error("lb_witness: staircase is not convexly independent");
    const mpz_class target = mpz_pow(b, m) - 1;
    if (mpz_class(static_cast<unsigned long>(witness.size())) < target)
        throw std::logic_error("lb_witness: staircase smaller than b^m - 1");
    for (const auto& p : witness)
        if (!decomposes_into_grids(p, b, m))
            throw std::logic_error("lb_witness: point fails grid decomposition");
    return witness;
}

std::pair<PointSet, PointSet> union_powers_witness(const std::vector<PointSet>& sets,
                                                   std::size_t enum_cap,
                                                   std::size_t dp_cap) {
    if (sets.empty())
        throw std::invalid_argument("union_powers_witness: empty set list");
    std::vector<LatticePoint> all;
    for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
    PointSet united(std::move(all));

    const PointSet sum = minkowski_multi(sets, enum_cap);
    PointSet witness = max_convex_subset(sum, dp_cap);

    // every witness point must lie in the |sets|-fold sum of the union
    std::vector<PointSet> repeated(sets.size(), united);
    const PointSet power_sum = minkowski_multi(repeated, enum_cap);
    for (const auto& p : witness)
        if (!power_sum.contains(p))
            throw std::logic_error("union_powers_witness: point escapes the power sum");
    return {std::move(united), std::move(witness)};
}

std::size_t measure_Mm(const std::vector<PointSet>& sets, std::size_t enum_cap,
                       std::size_t dp_cap) {
    return max_convex_subset(minkowski_multi(sets, enum_cap), dp_cap).size();
}

} // namespace ntau

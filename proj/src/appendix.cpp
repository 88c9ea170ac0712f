#include "ntau/appendix.hpp"

#include <algorithm>
#include <stdexcept>

#include "ntau/errors.hpp"
#include "ntau/rng.hpp"

namespace ntau {

namespace {

const LatticePoint kOrigin{0, 0};

LatticePoint doubled(const LatticePoint& p) { return {2 * p.x, 2 * p.y}; }

SparsePoly fg_plus_one(const SameSupportPair& pair) {
    return pair.f * pair.g + SparsePoly::constant(1);
}

} // namespace

SameSupportPair make_same_support_pair(SparsePoly f, SparsePoly g) {
    PointSet sf = support(f);
    if (sf != support(g))
        throw std::invalid_argument("same-support pair: supports differ");
    SameSupportPair pair;
    pair.has_origin = sf.contains(kOrigin);
    pair.f = std::move(f);
    pair.g = std::move(g);
    pair.common_support = std::move(sf);
    return pair;
}

bool check_condition_ii(const SameSupportPair& pair) {
    if (!pair.has_origin) return true;
    std::vector<LatticePoint> nonzero;
    nonzero.reserve(pair.common_support.size());
    for (const auto& p : pair.common_support)
        if (p != kOrigin) nonzero.push_back(p);
    for (const auto& p : extreme_points(PointSet(std::move(nonzero))))
        if (pair.common_support.contains(doubled(p))) return false;
    return true;
}

ConvexPolygon prescribed_polygon(const SameSupportPair& pair) {
    if (!pair.has_origin)
        throw PreconditionViolation("prescribed_polygon: support lacks the origin");
    const SparsePoly h = fg_plus_one(pair);
    if (sgn(h.coefficient(Monomial(0, 0))) != 0)
        throw PreconditionViolation("prescribed_polygon: fg+1 has a constant term");

    const PointSet surviving = support(h);
    std::vector<LatticePoint> generators;
    for (const auto& p : pair.common_support) {
        if (p == kOrigin) continue;
        generators.push_back(doubled(p));
        if (surviving.contains(p)) generators.push_back(p);
    }
    return convex_hull(PointSet(std::move(generators)));
}

SamePropReport verify_sameprop_report(const SameSupportPair& pair) {
    SamePropReport report;
    report.condition_ii = check_condition_ii(pair);

    const SparsePoly h = fg_plus_one(pair);
    report.actual = newton_polygon(h);

    if (!pair.has_origin) {
        report.which_case = SamePropCase::NoOrigin;
        std::vector<LatticePoint> pts = support(pair.f * pair.g).points();
        pts.push_back(kOrigin);
        report.predicted = convex_hull(PointSet(std::move(pts)));
    } else if (sgn(h.coefficient(Monomial(0, 0))) != 0) {
        report.which_case = SamePropCase::ConstantSurvives;
        report.predicted = newton_polygon(pair.f * pair.g);
    } else {
        report.which_case = SamePropCase::ConstantCancels;
        report.predicted = prescribed_polygon(pair);

        // J indexes doubled support points on the hull, K the surviving
        // originals on the hull; the six-point lemma forces |J ∩ K| <= 2.
        const PointSet surviving = support(h);
        std::size_t overlap = 0;
        for (const auto& p : pair.common_support) {
            if (p == kOrigin) continue;
            if (report.actual.is_vertex(doubled(p)) && surviving.contains(p) &&
                report.actual.is_vertex(p))
                ++overlap;
        }
        report.jk_overlap = overlap;

        // a hull vertex that is neither 2p_j nor a surviving p_i falsifies
        // the structure statement; report the first one
        for (const auto& v : report.actual.vertices()) {
            bool explained = false;
            for (const auto& p : pair.common_support) {
                if (p == kOrigin) continue;
                if (v == doubled(p) || (v == p && surviving.contains(p))) {
                    explained = true;
                    break;
                }
            }
            if (!explained) {
                report.offending_vertex = v;
                break;
            }
        }
    }
    report.match = report.actual == report.predicted;
    return report;
}

bool verify_sameprop(const SameSupportPair& pair) {
    return verify_sameprop_report(pair).match;
}

SameThReport verify_sameth(const SameSupportPair& pair) {
    SameThReport r;
    r.edges = edge_count(newton_polygon(fg_plus_one(pair)));
    r.bound = pair.common_support.size() + 1;
    r.ok = r.edges <= r.bound;
    return r;
}

std::pair<SameSupportPair, SparsePoly> builtin_counterexample() {
    const SparsePoly f =
        parse_poly("1 + X^2*Y + X*Y^2 + (1/2)*X^2*Y^4 + (1/2)*X^4*Y^2");
    const SparsePoly g =
        parse_poly("-1 + X^2*Y + X*Y^2 - (1/2)*X^2*Y^4 - (1/2)*X^4*Y^2");
    SameSupportPair pair = make_same_support_pair(f, g);
    SparsePoly expanded = fg_plus_one(pair);
    return {std::move(pair), std::move(expanded)};
}

SameSupportPair random_same_support_pair(std::size_t t, unsigned long exponent_bound,
                                         bool require_ii, std::uint64_t seed) {
    if (t < 1) throw std::invalid_argument("random_same_support_pair: t must be >= 1");
    const mpz_class slots = mpz_class(exponent_bound + 1) * (exponent_bound + 1);
    if (slots < static_cast<unsigned long>(t))
        throw std::invalid_argument("random_same_support_pair: exponent_bound too small");

    Rng rng(seed);
    for (int attempt = 0; attempt < kPairSamplingBudget; ++attempt) {
        std::vector<LatticePoint> pts{kOrigin};
        while (pts.size() < t) {
            LatticePoint p(rng.range(0, static_cast<long>(exponent_bound)),
                           rng.range(0, static_cast<long>(exponent_bound)));
            if (p == kOrigin) continue;
            if (std::find(pts.begin(), pts.end(), p) == pts.end())
                pts.push_back(std::move(p));
        }
        PointSet sup(pts);

        SparsePoly f, g;
        for (const auto& p : sup) {
            Monomial m(p.x, p.y);
            f += SparsePoly::monomial(m, rng.nonzero_rational(true));
            g += SparsePoly::monomial(m, rng.nonzero_rational(true));
        }
        // force f(0,0)*g(0,0) = -1 so the constant term of fg+1 cancels
        const mpq_class f0 = f.coefficient(Monomial(0, 0));
        g -= SparsePoly::constant(g.coefficient(Monomial(0, 0)));
        g += SparsePoly::constant(mpq_class(-1) / f0);

        SameSupportPair pair = make_same_support_pair(std::move(f), std::move(g));
        if (require_ii && !check_condition_ii(pair)) continue;
        return pair;
    }
    throw std::runtime_error("random_same_support_pair: sampling budget exhausted");
}

namespace {

bool in_triangle(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b,
                 const LatticePoint& c) {
    return convex_hull(PointSet({a, b, c})).contains(p);
}

} // namespace

SixPointResult six_point_check(const LatticePoint& p, const LatticePoint& q,
                               const LatticePoint& r) {
    if (p == q || q == r || p == r)
        throw std::invalid_argument("six_point_check: points must be distinct");
    if (p == kOrigin || q == kOrigin || r == kOrigin)
        throw std::invalid_argument("six_point_check: points must be nonzero");

    SixPointResult result;
    result.independent = is_convexly_independent(
        PointSet({p, q, r, doubled(p), doubled(q), doubled(r)}));

    const LatticePoint pts[3] = {p, q, r};
    for (int role = 0; role < 3 && !result.certificate; ++role) {
        const LatticePoint& rr = pts[role];
        const LatticePoint& pp = pts[(role + 1) % 3];
        const LatticePoint& qq = pts[(role + 2) % 3];
        if (in_triangle(rr, pp, qq, doubled(rr))) {
            result.certificate = SixPointCertificate::PointInDoubledTriangle;
            result.r_role = role;
        } else if (in_triangle(doubled(rr), doubled(pp), doubled(qq), rr)) {
            result.certificate = SixPointCertificate::DoubleInScaledTriangle;
            result.r_role = role;
        }
    }
    return result;
}

} // namespace ntau

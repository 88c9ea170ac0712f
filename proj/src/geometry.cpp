#include "ntau/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "ntau/errors.hpp"

namespace ntau {

std::string to_string(const LatticePoint& p) {
    return "(" + p.x.get_str() + "," + p.y.get_str() + ")";
}

mpz_class cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return sgn(cross(o, a, b));
}

namespace {

mpz_class cross_vec(const LatticePoint& u, const LatticePoint& v) {
    return u.x * v.y - u.y * v.x;
}

mpz_class dot_vec(const LatticePoint& u, const LatticePoint& v) {
    return u.x * v.x + u.y * v.y;
}

} // namespace

PointSet::PointSet(std::vector<LatticePoint> pts) : points_(std::move(pts)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const LatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

// Andrew's monotone chain with strict turns; produces CCW order starting at
// the lexicographic minimum, which is exactly the canonical form.
static std::vector<LatticePoint> hull_of_sorted(const std::vector<LatticePoint>& pts) {
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint> h;
    h.reserve(2 * n);
    // lower chain
    for (const auto& p : pts) {
        while (h.size() >= 2 && sgn(cross(h[h.size() - 2], h[h.size() - 1], p)) <= 0)
            h.pop_back();
        h.push_back(p);
    }
    // upper chain
    const std::size_t lower_size = h.size();
    for (std::size_t i = n - 1; i-- > 0;) {
        const auto& p = pts[i];
        while (h.size() > lower_size && sgn(cross(h[h.size() - 2], h[h.size() - 1], p)) <= 0)
            h.pop_back();
        h.push_back(p);
    }
    h.pop_back(); // the start vertex was appended again
    return h;
}

ConvexPolygon convex_hull(const PointSet& s) {
    return ConvexPolygon(hull_of_sorted(s.points()), ConvexPolygon::Trusted{});
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<LatticePoint> verts) {
    ConvexPolygon candidate(verts, Trusted{});
    ConvexPolygon canonical = convex_hull(PointSet(std::move(verts)));
    if (candidate != canonical)
        throw std::invalid_argument("vertex list is not a canonical convex polygon");
    return canonical;
}

bool ConvexPolygon::is_vertex(const LatticePoint& p) const {
    return std::find(verts_.begin(), verts_.end(), p) != verts_.end();
}

bool ConvexPolygon::contains(const LatticePoint& p) const {
    const std::size_t n = verts_.size();
    if (n == 0) return false;
    if (n == 1) return p == verts_[0];
    if (n == 2) {
        if (sgn(cross(verts_[0], verts_[1], p)) != 0) return false;
        // on the supporting line; check the segment's extent
        return sgn(dot_vec(p - verts_[0], verts_[1] - verts_[0])) >= 0 &&
               sgn(dot_vec(p - verts_[1], verts_[0] - verts_[1])) >= 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = verts_[i];
        const auto& b = verts_[(i + 1) % n];
        if (sgn(cross(a, b, p)) < 0) return false;
    }
    return true;
}

std::size_t edge_count(const ConvexPolygon& p) {
    const std::size_t n = p.vertex_count();
    if (n <= 1) return 0;
    if (n == 2) return 1;
    return n;
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
    std::vector<LatticePoint> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& p : a)
        for (const auto& q : b) sums.push_back(p + q);
    return PointSet(std::move(sums));
}

namespace {

// Edge-direction comparison by polar angle in [0, 2pi), no floating point:
// coarse class by octant boundary signs, exact cross product within a class.
int angle_class(const LatticePoint& v) {
    const int sx = sgn(v.x), sy = sgn(v.y);
    if (sy == 0) return sx > 0 ? 0 : 4;
    if (sy > 0) return sx > 0 ? 1 : (sx == 0 ? 2 : 3);
    return sx < 0 ? 5 : (sx == 0 ? 6 : 7);
}

// -1: angle(u) < angle(v); 0: same direction; +1: angle(u) > angle(v).
int angle_compare(const LatticePoint& u, const LatticePoint& v) {
    const int cu = angle_class(u), cv = angle_class(v);
    if (cu != cv) return cu < cv ? -1 : 1;
    return -sgn(cross_vec(u, v));
}

// Cyclic edge vectors of a canonical polygon, starting from the
// bottommost-then-leftmost vertex so angles ascend strictly in [0, 2pi).
// Returns the start vertex through `start`.
std::vector<LatticePoint> edge_vectors_from_bottom(const ConvexPolygon& p,
                                                   LatticePoint& start) {
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    std::size_t lo = 0;
    for (std::size_t i = 1; i < n; ++i) {
        int c = cmp(v[i].y, v[lo].y);
        if (c < 0 || (c == 0 && v[i].x < v[lo].x)) lo = i;
    }
    start = v[lo];
    std::vector<LatticePoint> edges;
    if (n == 2) {
        edges.push_back(v[1 - lo] - v[lo]);
        edges.push_back(v[lo] - v[1 - lo]);
        return edges;
    }
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a = (lo + i) % n;
        const std::size_t b = (lo + i + 1) % n;
        edges.push_back(v[b] - v[a]);
    }
    return edges;
}

} // namespace

ConvexPolygon minkowski_sum_polygons(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.empty() || q.empty()) return {};

    LatticePoint pstart, qstart;
    std::vector<LatticePoint> pe, qe;
    if (p.vertex_count() > 1) pe = edge_vectors_from_bottom(p, pstart);
    else pstart = p.vertices()[0];
    if (q.vertex_count() > 1) qe = edge_vectors_from_bottom(q, qstart);
    else qstart = q.vertices()[0];

    // Merge the two angle-sorted edge sequences; equal directions fuse into
    // a single longer edge, so consecutive walk edges never share a
    // direction and every walk vertex is extreme.
    std::vector<LatticePoint> steps;
    steps.reserve(pe.size() + qe.size());
    std::size_t i = 0, j = 0;
    while (i < pe.size() || j < qe.size()) {
        if (i == pe.size()) {
            steps.push_back(qe[j++]);
        } else if (j == qe.size()) {
            steps.push_back(pe[i++]);
        } else {
            const int c = angle_compare(pe[i], qe[j]);
            if (c < 0) steps.push_back(pe[i++]);
            else if (c > 0) steps.push_back(qe[j++]);
            else steps.push_back(pe[i++] + qe[j++]);
        }
    }

    std::vector<LatticePoint> walk;
    walk.reserve(steps.size());
    LatticePoint cur = pstart + qstart;
    walk.push_back(cur);
    for (std::size_t s = 0; s + 1 < steps.size(); ++s) {
        cur = cur + steps[s];
        walk.push_back(cur);
    }
    // A segment paired with a parallel segment (or a point) collapses; the
    // walk then revisits vertices. Dedup keeps canonical invariants intact.
    std::sort(walk.begin(), walk.end());
    walk.erase(std::unique(walk.begin(), walk.end()), walk.end());
    if (walk.size() <= 2) return ConvexPolygon(std::move(walk), ConvexPolygon::Trusted{});

    // Rotate the CCW cycle to start at the lexicographic minimum.
    std::vector<LatticePoint> cycle;
    cycle.reserve(steps.size());
    cur = pstart + qstart;
    std::size_t min_at = 0;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        cycle.push_back(cur);
        if (cycle.back() < cycle[min_at]) min_at = cycle.size() - 1;
        cur = cur + steps[s];
    }
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(min_at),
                cycle.end());
    return ConvexPolygon(std::move(cycle), ConvexPolygon::Trusted{});
}

bool is_convexly_independent(const PointSet& s) {
    if (s.size() <= 2) return true;
    return convex_hull(s).vertex_count() == s.size();
}

PointSet extreme_points(const PointSet& s) {
    return PointSet(convex_hull(s).vertices());
}

namespace {

// Convex-chain DP around one anchor `a`, over the candidate points `c`
// (all lexicographically greater than a, sorted by angle around a, ties by
// distance). State (j, i) = chain ending with edge c[j] -> c[i]; value =
// number of chain vertices including the anchor. Admissible edges must
// strictly increase in angle around the anchor, which rules out collinear
// triples through it; interior and closing turns are required strictly
// positive, so the reconstructed cycle is strictly convex.
std::size_t best_polygon_at_anchor(const LatticePoint& a,
                                   const std::vector<LatticePoint>& c,
                                   std::vector<LatticePoint>& best_subset) {
    const std::size_t n = c.size();
    if (n < 2) return 0;

    std::vector<std::vector<int>> len(n, std::vector<int>(n, 0));
    std::vector<std::vector<int>> par(n, std::vector<int>(n, -2)); // -1 = anchor
    std::size_t best = 0;
    std::pair<std::size_t, std::size_t> best_close{0, 0};

    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (sgn(cross(a, c[j], c[i])) <= 0) continue; // same ray or wrong side
            // predecessor: the anchor itself ...
            int best_len = 0, best_par = -2;
            if (sgn(cross_vec(c[j] - a, c[i] - c[j])) > 0) {
                best_len = 2;
                best_par = -1;
            }
            // ... or an earlier chain edge (k, j)
            for (std::size_t k = 0; k < j; ++k) {
                if (len[k][j] <= best_len) continue;
                if (sgn(cross_vec(c[j] - c[k], c[i] - c[j])) > 0) {
                    best_len = len[k][j];
                    best_par = static_cast<int>(k);
                }
            }
            if (best_par == -2) continue;
            len[j][i] = best_len + 1; // chain gained vertex c[i]
            par[j][i] = best_par;
            // close the polygon: turn at c[i] back toward the anchor
            if (sgn(cross_vec(c[i] - c[j], a - c[i])) > 0) {
                const std::size_t total = static_cast<std::size_t>(len[j][i]);
                if (total > best) {
                    best = total;
                    best_close = {j, i};
                }
            }
        }
    }

    if (best > best_subset.size()) {
        best_subset.clear();
        best_subset.push_back(a);
        std::size_t j = best_close.first, i = best_close.second;
        best_subset.push_back(c[i]);
        while (true) {
            best_subset.push_back(c[j]);
            const int k = par[j][i];
            if (k < 0) break;
            i = j;
            j = static_cast<std::size_t>(k);
        }
    }
    return best;
}

} // namespace

PointSet max_convex_subset(const PointSet& s, std::size_t cap) {
    if (s.size() > cap)
        throw CapExceeded("max_convex_subset: " + std::to_string(s.size()) +
                          " points exceeds cap " + std::to_string(cap));
    if (s.size() <= 2) return s;

    const auto& pts = s.points(); // sorted lexicographically
    std::vector<LatticePoint> best(pts.begin(), pts.begin() + 2);

    for (std::size_t a0 = 0; a0 < pts.size(); ++a0) {
        if (pts.size() - a0 <= best.size()) break; // anchor suffix cannot improve
        const LatticePoint& a = pts[a0];
        std::vector<LatticePoint> cand(pts.begin() + static_cast<std::ptrdiff_t>(a0) + 1,
                                       pts.end());
        std::sort(cand.begin(), cand.end(), [&](const LatticePoint& p, const LatticePoint& q) {
            const int c = sgn(cross(a, p, q));
            if (c != 0) return c > 0;
            return dot_vec(p - a, p - a) < dot_vec(q - a, q - a);
        });
        best_polygon_at_anchor(a, cand, best);
    }
    return PointSet(std::move(best));
}

PointSet max_convex_subset_bruteforce(const PointSet& s) {
    if (s.size() > 16)
        throw std::invalid_argument("max_convex_subset_bruteforce: set too large (max 16)");
    const auto& pts = s.points();
    const std::size_t n = pts.size();
    if (n <= 2) return s;

    std::vector<LatticePoint> best;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto count = static_cast<std::size_t>(__builtin_popcount(mask));
        if (count <= std::max<std::size_t>(best.size(), 2)) continue;
        std::vector<LatticePoint> sub;
        sub.reserve(count);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(pts[i]);
        if (is_convexly_independent(PointSet(sub))) best = std::move(sub);
    }
    if (best.size() < 2) best.assign(pts.begin(), pts.begin() + 2);
    return PointSet(std::move(best));
}

} // namespace ntau

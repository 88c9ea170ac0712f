#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ntau {

/// Exact integer point in the plane. Coordinates are arbitrary precision;
/// every predicate in this module is computed with full-precision integer
/// arithmetic, there is no epsilon anywhere.
struct LatticePoint {
    mpz_class x;
    mpz_class y;

    LatticePoint() = default;
    LatticePoint(mpz_class px, mpz_class py) : x(std::move(px)), y(std::move(py)) {}
    LatticePoint(long px, long py) : x(px), y(py) {}

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) {
        return !(a == b);
    }
    /// Lexicographic by (x, y); the canonical order used throughout.
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return a.y < b.y;
    }

    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend LatticePoint operator*(long s, const LatticePoint& p) {
        return {s * p.x, s * p.y};
    }
};

/// "(x,y)" with full decimal coordinates.
std::string to_string(const LatticePoint& p);

/// (a - o) x (b - o), exact.
mpz_class cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b);

/// Sign of the cross product: +1 left turn, 0 collinear, -1 right turn.
int orientation(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b);

/// Finite duplicate-free point set, stored sorted for deterministic
/// iteration and O(log n) membership.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<LatticePoint> pts);

    const std::vector<LatticePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const LatticePoint& p) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.points_ == b.points_;
    }
    friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

private:
    std::vector<LatticePoint> points_;
};

/// Convex polygon in canonical form: extreme vertices only (strict turns,
/// no three consecutive collinear), counterclockwise, starting at the
/// lexicographically least vertex. 0 vertices = empty, 1 = point,
/// 2 = segment. Canonical form makes polygon equality plain list equality.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    /// Validates that the given list is a canonical convex polygon
    /// (recomputes the hull of the vertices and requires equality).
    static ConvexPolygon from_vertices(std::vector<LatticePoint> verts);

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }

    bool is_vertex(const LatticePoint& p) const;

    /// Closed containment: true for boundary points. Exact.
    bool contains(const LatticePoint& p) const;

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
        return a.verts_ == b.verts_;
    }
    friend bool operator!=(const ConvexPolygon& a, const ConvexPolygon& b) {
        return !(a == b);
    }

private:
    struct Trusted {};
    ConvexPolygon(std::vector<LatticePoint> verts, Trusted) : verts_(std::move(verts)) {}

    std::vector<LatticePoint> verts_;

    friend ConvexPolygon convex_hull(const PointSet&);
    friend ConvexPolygon minkowski_sum_polygons(const ConvexPolygon&, const ConvexPolygon&);
};

/// Canonical convex hull; collinear interior points discarded.
/// Empty set gives the empty polygon.
ConvexPolygon convex_hull(const PointSet& s);

/// Edge-count convention for degenerate hulls: point -> 0, segment -> 1,
/// v-gon -> v.
std::size_t edge_count(const ConvexPolygon& p);

/// {p+q : p in a, q in b}, deduplicated. Empty if either operand is empty.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

/// Minkowski sum of convex polygons by the edge-vector merge; the result
/// has at most vertex_count(p) + vertex_count(q) edges and equals
/// convex_hull(minkowski_sum(vertex sets)).
ConvexPolygon minkowski_sum_polygons(const ConvexPolygon& p, const ConvexPolygon& q);

/// True iff every point of s is an extreme point of conv(s): strictly
/// convex position, no three collinear. Sets of size <= 2 qualify.
bool is_convexly_independent(const PointSet& s);

/// The subset of s consisting of the vertices of conv(s).
PointSet extreme_points(const PointSet& s);

inline constexpr std::size_t kDefaultDpCap = 2000;

/// A maximum-cardinality convexly independent subset of s, found by exact
/// dynamic programming over convex chains anchored at each candidate
/// lexicographically-least vertex. Throws CapExceeded above `cap` points.
PointSet max_convex_subset(const PointSet& s, std::size_t cap = kDefaultDpCap);

/// Exhaustive-enumeration optimum, |s| <= 16. Test oracle for the DP.
PointSet max_convex_subset_bruteforce(const PointSet& s);

} // namespace ntau

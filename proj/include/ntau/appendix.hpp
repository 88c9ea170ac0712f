#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ntau/geometry.hpp"
#include "ntau/newton_sps.hpp"
#include "ntau/poly.hpp"

namespace ntau {

/// Two polynomials with identical support {p_0, ..., p_{t-1}}, the setting
/// of the structure results for Newt(fg+1).
struct SameSupportPair {
    SparsePoly f;
    SparsePoly g;
    PointSet common_support;
    bool has_origin = false;
};

/// Validates that f and g share their support.
SameSupportPair make_same_support_pair(SparsePoly f, SparsePoly g);

/// The no-doubled-extremal-point requirement: for every extreme point p_j
/// of conv(support minus the origin), 2*p_j is not in the support.
/// Vacuously true when the origin is absent.
bool check_condition_ii(const SameSupportPair& pair);

/// The structure polygon conv(2p_1, ..., 2p_{t-1}, (p_i) for i in I) where
/// I indexes the support points that survive in fg+1. Requires the origin
/// in the support and fg+1 without constant term; throws
/// PreconditionViolation otherwise so callers can fall back to the direct
/// Newton polygon.
ConvexPolygon prescribed_polygon(const SameSupportPair& pair);

/// Which branch of the structure theorem applies.
enum class SamePropCase {
    NoOrigin,         // Newt(fg+1) = conv({0}, Newt(fg))
    ConstantSurvives, // Newt(fg+1) = Newt(fg)
    ConstantCancels,  // Newt(fg+1) = prescribed_polygon
};

struct SamePropReport {
    SamePropCase which_case = SamePropCase::NoOrigin;
    bool condition_ii = false;
    bool match = false;          // actual polygon equals the predicted one
    std::size_t jk_overlap = 0;  // |J ∩ K| in the constant-cancel case
    ConvexPolygon actual;
    ConvexPolygon predicted;
    /// A vertex of the actual polygon that is neither a doubled support
    /// point nor a surviving original (only possible when (ii) fails).
    std::optional<LatticePoint> offending_vertex;
};

SamePropReport verify_sameprop_report(const SameSupportPair& pair);

/// True iff Newt(fg+1) equals the case-appropriate predicted polygon.
bool verify_sameprop(const SameSupportPair& pair);

struct SameThReport {
    std::size_t edges = 0;
    std::size_t bound = 0; // t + 1
    bool ok = false;
};

/// Edge count of Newt(fg+1) against the t+1 bound.
SameThReport verify_sameth(const SameSupportPair& pair);

/// The published pair violating condition (ii), along with the expanded
/// fg+1 (= 2X^3Y^3 - (1/2)X^6Y^6 - (1/4)X^4Y^8 - (1/4)X^8Y^4).
std::pair<SameSupportPair, SparsePoly> builtin_counterexample();

inline constexpr int kPairSamplingBudget = 10'000;

/// Reproducible pair with a common random support containing the origin
/// and f(0,0)*g(0,0) = -1 forced, so fg+1 loses its constant term. With
/// require_ii the support is rejection-sampled until condition (ii) holds
/// (bounded budget, then error).
SameSupportPair random_same_support_pair(std::size_t t, unsigned long exponent_bound,
                                         bool require_ii, std::uint64_t seed);

/// Containment certificates from the six-point lemma's proof.
enum class SixPointCertificate {
    PointInDoubledTriangle, // r in conv(p, q, 2r)
    DoubleInScaledTriangle, // 2r in conv(2p, 2q, r)
};

struct SixPointResult {
    bool independent = false; // {p,q,r,2p,2q,2r} convexly independent (never, per the lemma)
    std::optional<SixPointCertificate> certificate;
    int r_role = -1; // which of the three inputs plays r in the certificate
};

/// Checks the six points {p, q, r, 2p, 2q, 2r} for convex independence and
/// searches the two proof certificates over all role assignments.
SixPointResult six_point_check(const LatticePoint& p, const LatticePoint& q,
                               const LatticePoint& r);

} // namespace ntau

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ntau/geometry.hpp"

namespace ntau {

/// Exponent pair (i, j) of a monomial X^i Y^j. Exponents are nonnegative
/// arbitrary-precision integers; substitutions raise them to 2^(2n-1) and
/// beyond, where machine words would silently overflow.
struct Monomial {
    mpz_class x_exp;
    mpz_class y_exp;

    Monomial() : x_exp(0), y_exp(0) {}
    Monomial(mpz_class xe, mpz_class ye);
    Monomial(long xe, long ye) : Monomial(mpz_class(xe), mpz_class(ye)) {}

    LatticePoint point() const { return {x_exp, y_exp}; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.x_exp == b.x_exp && a.y_exp == b.y_exp;
    }
    /// Graded lexicographic: by total degree, then by x exponent. The
    /// canonical term order for serialization and goldens.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int c = cmp(a.x_exp + a.y_exp, b.x_exp + b.y_exp);
        if (c != 0) return c < 0;
        return a.x_exp < b.x_exp;
    }
};

/// Sparse bivariate polynomial with exact rational coefficients.
/// Invariants: no stored coefficient is zero; each monomial appears once;
/// the zero polynomial is the empty term map. Immutable value semantics;
/// all operations are pure functions.
class SparsePoly {
public:
    using TermMap = std::map<Monomial, mpq_class>;

    SparsePoly() = default; // zero

    static SparsePoly constant(const mpq_class& c);
    static SparsePoly monomial(const Monomial& m, const mpq_class& c);
    static SparsePoly monomial(long xe, long ye, const mpq_class& c = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given monomial (zero when absent).
    mpq_class coefficient(const Monomial& m) const;

    SparsePoly& operator+=(const SparsePoly& rhs);
    SparsePoly& operator-=(const SparsePoly& rhs);

    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend SparsePoly operator-(const SparsePoly& p);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) {
        return !(a == b);
    }

private:
    void add_term(const Monomial& m, const mpq_class& c);
    TermMap terms_;
};

/// p^e with the 0^0 = 1 convention, so p^0 = 1 uniformly.
SparsePoly pow(const SparsePoly& p, unsigned long e);

/// c*p; the zero polynomial when c = 0.
SparsePoly scale(const SparsePoly& p, const mpq_class& c);

/// The exponent set {(i, j) : coefficient of X^i Y^j is nonzero}.
PointSet support(const SparsePoly& p);

inline constexpr unsigned kHardFamilyMaxN = 20;
inline constexpr unsigned kSubstitutionMaxN = 10;
inline constexpr std::size_t kFischerMaxFactors = 20;

/// The 2^n-term polynomial with term i carrying exponents (i, i^2),
/// i = 0 .. 2^n - 1. Its Newton polygon has exactly 2^n edges for n >= 2
/// (all support points lie on a strictly convex parabola). Guarded at
/// n <= 20 to bound memory.
SparsePoly hard_family(unsigned n);

/// 1 iff the little-endian value of `beta` (length 2n) equals the square of
/// the little-endian value of `alpha` (length n).
int h_coefficient(unsigned n, const std::vector<bool>& alpha,
                  const std::vector<bool>& beta);

/// The multilinear 3n-variable polynomial with h_coefficient coefficients,
/// evaluated at x_j = X^(2^j), y_j = Y^(2^j); equals hard_family(n).
/// Guarded at n <= 10.
SparsePoly hn_substituted(unsigned n);

/// Sum of scaled m-th powers: sum_i a_i * f_i^m.
struct PowerSumExpression {
    unsigned long exponent = 1; // m >= 1
    std::vector<std::pair<mpq_class, SparsePoly>> summands;
};

/// Fully expands a PowerSumExpression with pow/scale/add.
SparsePoly expand_power_sum(const PowerSumExpression& e);

/// Rewrites the product f_1*...*f_m as a signed combination of 2^(m-1)
/// m-th powers of linear combinations of the factors:
///   f_1*...*f_m = sum over r in {-1,1}^(m-1) of
///       (prod r_i) / (2^(m-1) m!) * (f_1 + sum r_i f_i)^m.
/// Exact rationals make the division lossless (characteristic 0).
PowerSumExpression fischer_expand(const std::vector<SparsePoly>& factors);

// --- text grammar -----------------------------------------------------------
//
//   poly   := [sign] term (sign term)*        sign := '+' | '-'
//   term   := coeff ['*' monoms] | monoms
//   coeff  := integer | '(' integer '/' integer ')'
//   monoms := factor ('*' factor)*            factor := ('X'|'Y') ['^' natural]
//
// Whitespace insignificant; naturals unbounded decimal.

/// Parses the grammar above; throws ParseError with line/column on failure.
SparsePoly parse_poly(std::string_view text);

/// Canonical text form: terms in graded-lex order, e.g. "1 + X*Y - (1/2)*X^2".
/// Zero prints as "0". parse_poly(to_string(p)) == p.
std::string to_string(const SparsePoly& p);

std::string to_string(const mpq_class& q);

} // namespace ntau

#include "ntau/poly.hpp"

#include <stdexcept>

namespace ntau {

Monomial::Monomial(mpz_class xe, mpz_class ye)
    : x_exp(std::move(xe)), y_exp(std::move(ye)) {
    if (sgn(x_exp) < 0 || sgn(y_exp) < 0)
        throw std::invalid_argument("monomial exponents must be nonnegative");
}

SparsePoly SparsePoly::constant(const mpq_class& c) {
    SparsePoly p;
    p.add_term(Monomial(0, 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(const Monomial& m, const mpq_class& c) {
    SparsePoly p;
    p.add_term(m, c);
    return p;
}

SparsePoly SparsePoly::monomial(long xe, long ye, const mpq_class& c) {
    return monomial(Monomial(xe, ye), c);
}

mpq_class SparsePoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

SparsePoly operator-(const SparsePoly& p) {
    SparsePoly r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.x_exp = ma.x_exp + mb.x_exp;
            m.y_exp = ma.y_exp + mb.y_exp;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

SparsePoly pow(const SparsePoly& p, unsigned long e) {
    SparsePoly result = SparsePoly::constant(1); // covers p^0, including 0^0
    SparsePoly base = p;
    while (e > 0) {
        if (e & 1ul) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

SparsePoly scale(const SparsePoly& p, const mpq_class& c) {
    SparsePoly r;
    if (sgn(c) == 0) return r;
    for (const auto& [m, coeff] : p.terms()) r += SparsePoly::monomial(m, coeff * c);
    return r;
}

PointSet support(const SparsePoly& p) {
    std::vector<LatticePoint> pts;
    pts.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) pts.push_back(m.point());
    return PointSet(std::move(pts));
}

SparsePoly hard_family(unsigned n) {
    if (n < 1 || n > kHardFamilyMaxN)
        throw std::invalid_argument("hard_family: n must be in [1, " +
                                    std::to_string(kHardFamilyMaxN) + "]");
    SparsePoly f;
    const unsigned long count = 1ul << n;
    for (unsigned long i = 0; i < count; ++i) {
        mpz_class xi(static_cast<unsigned long>(i));
        f += SparsePoly::monomial(Monomial(xi, xi * xi), 1);
    }
    return f;
}

namespace {

mpz_class bits_value(const std::vector<bool>& bits) {
    mpz_class v = 0;
    for (std::size_t j = bits.size(); j-- > 0;) {
        v <<= 1;
        if (bits[j]) v += 1;
    }
    return v;
}

std::vector<bool> value_bits(const mpz_class& v, std::size_t width) {
    std::vector<bool> bits(width, false);
    for (std::size_t j = 0; j < width; ++j)
        bits[j] = mpz_tstbit(v.get_mpz_t(), j) != 0;
    return bits;
}

} // namespace

int h_coefficient(unsigned n, const std::vector<bool>& alpha,
                  const std::vector<bool>& beta) {
    if (alpha.size() != n || beta.size() != 2 * static_cast<std::size_t>(n))
        throw std::invalid_argument("h_coefficient: alpha must have length n, beta 2n");
    const mpz_class a = bits_value(alpha);
    return bits_value(beta) == a * a ? 1 : 0;
}

SparsePoly hn_substituted(unsigned n) {
    if (n < 1 || n > kSubstitutionMaxN)
        throw std::invalid_argument("hn_substituted: n must be in [1, " +
                                    std::to_string(kSubstitutionMaxN) + "]");
    // The multilinear coefficient a(n, alpha, beta) is nonzero exactly when
    // value(beta) = value(alpha)^2, so each alpha contributes the single
    // monomial X^value(alpha) Y^value(beta). Substituting x_j = X^(2^j),
    // y_j = Y^(2^j) turns the bit vectors back into those exponent values.
    SparsePoly f;
    for (unsigned long a = 0; a < (1ul << n); ++a) {
        const auto alpha = value_bits(mpz_class(a), n);
        const mpz_class av = bits_value(alpha);
        const auto beta = value_bits(av * av, 2 * static_cast<std::size_t>(n));
        if (h_coefficient(n, alpha, beta) != 1)
            throw std::logic_error("hn_substituted: inconsistent coefficient");
        mpz_class xe = 0, ye = 0;
        mpz_class w = 1;
        for (unsigned j = 0; j < n; ++j, w *= 2)
            if (alpha[j]) xe += w;
        w = 1;
        for (unsigned j = 0; j < 2 * n; ++j, w *= 2)
            if (beta[j]) ye += w;
        f += SparsePoly::monomial(Monomial(xe, ye), 1);
    }
    return f;
}

SparsePoly expand_power_sum(const PowerSumExpression& e) {
    SparsePoly total;
    for (const auto& [a, f] : e.summands) total += scale(pow(f, e.exponent), a);
    return total;
}

PowerSumExpression fischer_expand(const std::vector<SparsePoly>& factors) {
    const std::size_t m = factors.size();
    if (m == 0) throw std::invalid_argument("fischer_expand: empty factor list");
    if (m > kFischerMaxFactors)
        throw std::invalid_argument("fischer_expand: more than " +
                                    std::to_string(kFischerMaxFactors) +
                                    " factors (2^(m-1) summands)");
    for (const auto& f : factors)
        if (f.is_zero())
            throw std::invalid_argument("fischer_expand: zero factor");

    mpz_class denom = 1; // 2^(m-1) * m! = product of 2i for i = 2..m
    for (std::size_t i = 2; i <= m; ++i) denom *= 2 * static_cast<unsigned long>(i);

    PowerSumExpression out;
    out.exponent = static_cast<unsigned long>(m);
    out.summands.reserve(1ul << (m - 1));
    for (unsigned long mask = 0; mask < (1ul << (m - 1)); ++mask) {
        SparsePoly base = factors[0];
        int sign_product = 1;
        for (std::size_t i = 1; i < m; ++i) {
            const int r = (mask >> (i - 1)) & 1ul ? 1 : -1;
            sign_product *= r;
            base += r > 0 ? factors[i] : -factors[i];
        }
        mpq_class coeff(sign_product, denom);
        coeff.canonicalize();
#ifdef NTAU_FAULT_FISCHER
        // fault-injection hook: corrupt the last summand's sign
        if (mask + 1 == (1ul << (m - 1))) coeff = -coeff;
#endif
        out.summands.emplace_back(std::move(coeff), std::move(base));
    }
    return out;
}

} // namespace ntau

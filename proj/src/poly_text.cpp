#include <cctype>
#include <sstream>

#include "ntau/errors.hpp"
#include "ntau/poly.hpp"

namespace ntau {

namespace {

// Hand-rolled recursive descent over the term grammar. The input is tiny
// (inline CLI arguments, test fixtures, JSONL replay records), so clarity
// beats throughput here.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    SparsePoly parse() {
        skip_ws();
        SparsePoly result;
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = consume() == '-' ? -1 : 1;
        result += parse_term(sign);
        skip_ws();
        while (!at_end()) {
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+', '-', or end of input");
            consume();
            result += parse_term(c == '-' ? -1 : 1);
            skip_ws();
        }
        return result;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char consume() { return text_[pos_++]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(message, line, col);
    }

    mpz_class parse_natural() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(consume());
        return mpz_class(digits);
    }

    mpz_class parse_integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            consume();
            neg = true;
        }
        mpz_class v = parse_natural();
        return neg ? mpz_class(-v) : v;
    }

    mpq_class parse_coeff() {
        skip_ws();
        if (peek() == '(') {
            consume();
            const mpz_class num = parse_integer();
            skip_ws();
            if (peek() != '/') fail("expected '/' in rational coefficient");
            consume();
            const mpz_class den = parse_integer();
            skip_ws();
            if (peek() != ')') fail("expected ')' after rational coefficient");
            consume();
            if (sgn(den) == 0) fail("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        return mpq_class(parse_integer());
    }

    // factor := ('X'|'Y') ['^' natural]; exponents of repeated factors add.
    void parse_factor(mpz_class& xe, mpz_class& ye) {
        skip_ws();
        const char v = peek();
        if (v != 'X' && v != 'Y') fail("expected 'X' or 'Y'");
        consume();
        mpz_class e = 1;
        skip_ws();
        if (peek() == '^') {
            consume();
            e = parse_natural();
        }
        (v == 'X' ? xe : ye) += e;
    }

    SparsePoly parse_term(int sign) {
        skip_ws();
        mpq_class coeff(sign);
        bool has_coeff = false;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
            coeff *= parse_coeff();
            has_coeff = true;
        }
        mpz_class xe = 0, ye = 0;
        bool has_monoms = false;
        skip_ws();
        if (!has_coeff) {
            parse_factor(xe, ye);
            has_monoms = true;
        } else if (peek() == '*') {
            consume();
            parse_factor(xe, ye);
            has_monoms = true;
        }
        while (has_monoms) {
            skip_ws();
            const std::size_t mark = pos_;
            if (peek() != '*') break;
            consume();
            skip_ws();
            if (peek() != 'X' && peek() != 'Y') {
                pos_ = mark; // the '*' belongs to something else: reject later
                fail("expected 'X' or 'Y' after '*'");
            }
            parse_factor(xe, ye);
        }
        return SparsePoly::monomial(Monomial(xe, ye), coeff);
    }
};

void append_monomial_text(std::ostringstream& out, const Monomial& m) {
    bool first = true;
    if (sgn(m.x_exp) > 0) {
        out << 'X';
        if (m.x_exp != 1) out << '^' << m.x_exp.get_str();
        first = false;
    }
    if (sgn(m.y_exp) > 0) {
        if (!first) out << '*';
        out << 'Y';
        if (m.y_exp != 1) out << '^' << m.y_exp.get_str();
    }
}

} // namespace

SparsePoly parse_poly(std::string_view text) {
    return PolyParser(text).parse();
}

std::string to_string(const mpq_class& q) {
    return q.get_str();
}

std::string to_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        const mpq_class a = abs(c);
        const bool constant_term = sgn(m.x_exp) == 0 && sgn(m.y_exp) == 0;
        if (a != 1 || constant_term) {
            if (a.get_den() == 1) {
                out << a.get_num().get_str();
            } else {
                out << '(' << a.get_num().get_str() << '/' << a.get_den().get_str() << ')';
            }
            if (!constant_term) out << '*';
        }
        if (!constant_term) append_monomial_text(out, m);
    }
    return out.str();
}

} // namespace ntau

// Text grammar for polynomials:
//   poly   := term (('+'|'-') term)*      (a leading sign is also accepted)
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 'x' INT ('^' INT)?
//   coeff  := INT ('/' INT)?
// Whitespace is insignificant.

#include "dsym/polynomial.hpp"

#include <cctype>

namespace dsym {

namespace {

class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        terms.push_back(parse_term(negative));
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            terms.push_back(parse_term(c == '-'));
        }
        return Polynomial::from_terms(n_, std::move(terms));
    }

private:
    Term parse_term(bool negative) {
        skip_ws();
        Rational coeff = 1;
        Monomial mono;
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            BigInt num = parse_int();
            BigInt den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                den = parse_int();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            need_factor = false;
        }
        if (need_factor) {
            parse_factor(mono);
        }
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            parse_factor(mono);
        }
        if (negative) coeff = -coeff;
        return {mono, coeff};
    }

    void parse_factor(Monomial& mono) {
        skip_ws();
        if (peek() != 'x') fail("expected a variable 'x<index>'");
        ++pos_;
        const std::size_t at = pos_;
        BigInt index = parse_int();
        if (index < 1 || index > n_)
            throw ParseError("variable index x" + index.get_str() + " out of range 1.." +
                                 std::to_string(n_),
                             at);
        int exponent = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t eat = pos_;
            BigInt e = parse_int();
            if (e > kMaxExponent) throw ParseError("exponent too large", eat);
            exponent = static_cast<int>(e.get_si());
        }
        const int i = static_cast<int>(index.get_si()) - 1;
        const int total = mono[i] + exponent;
        if (total > kMaxExponent) throw ParseError("exponent too large", at);
        mono.set(i, total);
    }

    BigInt parse_int() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        if (at_end()) throw ParseError(what + ", found end of input", pos_);
        throw ParseError(what + ", found '" + std::string(1, peek()) + "'", pos_);
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i + 1);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
}

} // namespace

Polynomial parse_polynomial(std::string_view text, int n) {
    if (n < 1) throw PreconditionError("parse_polynomial: n must be positive");
    return Parser(text, n).parse();
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(t.coeff);
        const std::string mono = monomial_text(t.mono, f.ambient());
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + '*' + mono;
        }
    }
    return out;
}

} // namespace dsym

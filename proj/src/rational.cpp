#include "dsym/rational.hpp"

#include <cctype>

namespace dsym {

BigInt binomial(long a, long b) {
    BigInt r = 0;
    if (b < 0 || b > a) return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

BigInt factorial(long n) {
    if (n < 0) throw PreconditionError("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {

BigInt parse_integer(std::string_view s, std::size_t offset) {
    if (s.empty()) throw ParseError("expected an integer", offset);
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') ++i;
    if (i == s.size()) throw ParseError("expected digits", offset + i);
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("unexpected character '" + std::string(1, s[j]) + "'", offset + j);
    }
    std::string digits(s.substr(i));
    BigInt z(digits, 10);
    return s[0] == '-' ? BigInt(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
    BigInt num = parse_integer(text.substr(0, slash), 0);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("sign not allowed in denominator", slash + 1);
    BigInt den = parse_integer(den_text, slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

} // namespace dsym

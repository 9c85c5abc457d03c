#pragma once

// Exact scalars: GMP rationals and big integers, plus the few combinatorial
// counting helpers every module needs.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsym {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Input that does not follow a documented grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal mathematical invariant failed; indicates a bug, never bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Binomial coefficient with the convention C(a,b) = 0 when b < 0 or b > a.
BigInt binomial(long a, long b);

BigInt factorial(long n);

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, integers without "/1".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// GMP expects canonical operands; values built from (p, q) may not be.
inline Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

inline Rational make_rational(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

} // namespace dsym

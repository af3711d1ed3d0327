#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sympcalc {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text form "num/den" with den >= 1 and gcd 1; zero is "0/1".
std::string to_string(const Rational& q);

// Accepts "a", "-a", "a/b"; the result is canonicalized. Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Signed squarefree representative of the square class of a nonzero integer.
std::int64_t squarefree_part(std::int64_t value);

// Signed squarefree representative of the square class of a nonzero rational.
std::int64_t square_class_of(const Rational& q);

bool is_squarefree(std::int64_t value);

// Prime factors of |value| in increasing order, without multiplicity.
std::vector<std::int64_t> prime_divisors(std::int64_t value);

}  // namespace sympcalc

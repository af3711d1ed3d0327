#include "sympcalc/rational.hpp"

#include <cstdlib>

#include "sympcalc/error.hpp"

namespace sympcalc {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::int64_t squarefree_part(std::int64_t value) {
  if (value == 0) throw Error(ErrorCode::ZeroCoefficient, "zero has no square class");
  std::int64_t sign = value < 0 ? -1 : 1;
  std::uint64_t m = value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1 : static_cast<std::uint64_t>(value);
  std::uint64_t result = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int count = 0;
    while (m % p == 0) {
      m /= p;
      ++count;
    }
    if (count % 2 == 1) result *= p;
  }
  result *= m;
  return sign * static_cast<std::int64_t>(result);
}

std::int64_t square_class_of(const Rational& q) {
  if (sgn(q) == 0) throw Error(ErrorCode::ZeroCoefficient, "zero has no square class");
  // num/den ~ num*den modulo squares.
  Integer prod = q.get_num() * q.get_den();
  if (!prod.fits_slong_p()) {
    throw Error(ErrorCode::ParseError, "rational too large for square-class reduction");
  }
  return squarefree_part(prod.get_si());
}

bool is_squarefree(std::int64_t value) {
  return value != 0 && squarefree_part(value) == value;
}

std::vector<std::int64_t> prime_divisors(std::int64_t value) {
  std::vector<std::int64_t> primes;
  std::uint64_t m = value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1 : static_cast<std::uint64_t>(value);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(static_cast<std::int64_t>(p));
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(static_cast<std::int64_t>(m));
  return primes;
}

}  // namespace sympcalc

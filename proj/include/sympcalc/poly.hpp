#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympcalc/rational.hpp"

namespace sympcalc {

// Sparse multivariate polynomial with rational coefficients. Variables are
// addressed by index; exponent vectors are kept with trailing zeros trimmed
// so that equal monomials compare equal regardless of how they were built.
class Poly {
 public:
  using Monomial = std::vector<int>;

  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);            // NOLINT(google-explicit-constructor)

  static Poly variable(int index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(const std::vector<Rational>& point) const;

  // Quotient when `divisor` divides this polynomial exactly.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Human-readable rendering with the supplied variable names.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(Monomial m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

// Quotient of polynomials. No gcd reduction is attempted; equality is decided
// by cross multiplication, which is exact.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}               // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}       // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace sympcalc

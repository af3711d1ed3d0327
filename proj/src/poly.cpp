#include "sympcalc/poly.hpp"

#include <algorithm>
#include <sstream>

#include "sympcalc/error.hpp"

namespace sympcalc {

namespace {

void trim(Poly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(int index) {
  Poly p;
  Monomial m(static_cast<std::size_t>(index) + 1, 0);
  m[static_cast<std::size_t>(index)] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  trim(m);
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  Poly result;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      result.add_term(std::move(m), Rational(ca * cb));
    }
  }
  *this = std::move(result);
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, Rational(-c));
  return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= point.size()) throw Error(ErrorCode::BadIndices, "evaluation point too short");
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  // std::map orders trimmed exponent vectors lexicographically, so the last
  // entry is the leading term.
  const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
  Poly rest = *this;
  Poly quotient;
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms_.rbegin();
    if (m.size() < lead_m.size()) return std::nullopt;
    Monomial q(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      int e = m[i] - (i < lead_m.size() ? lead_m[i] : 0);
      if (e < 0) return std::nullopt;
      q[i] = e;
    }
    Poly term;
    term.add_term(q, Rational(c / lead_c));
    quotient += term;
    rest -= term * divisor;
  }
  return quotient;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int e : a.first) da += e;
    for (int e : b.first) db += e;
    return da > db;
  });
  for (const auto& [m, c] : ordered) {
    Rational mag = abs(c);
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && !m.empty();
    if (!unit) out << mag.get_str();
    bool need_star = !unit;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorCode::NoSolution, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    Rational inv = 1 / den_.constant_term();
    num_ *= Poly(inv);
    den_ = Poly(1);
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Poly(1);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else if (auto q = den_.divide_exact(other.den_)) {
    num_ += other.num_ * *q;
  } else if (auto r = other.den_.divide_exact(den_)) {
    num_ = num_ * *r + other.num_;
    den_ = other.den_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) {
  if (other.is_zero()) throw Error(ErrorCode::NoSolution, "division by zero rational function");
  num_ *= other.den_;
  den_ *= other.num_;
  normalize();
  return *this;
}

Rational RatFunc::evaluate(const std::vector<Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (sgn(d) == 0) throw Error(ErrorCode::NoSolution, "denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

}  // namespace sympcalc

#include "sympcalc/stabilizer.hpp"

#include <algorithm>
#include <cmath>

namespace sympcalc {

namespace {

struct Split {
  long valuation = 0;
  Integer num;  // p-adic unit numerator
  Integer den;  // p-adic unit denominator
};

Split split_at(const Rational& a, std::int64_t p) {
  Split s{0, a.get_num(), a.get_den()};
  Integer prime(static_cast<long>(p));
  s.valuation = static_cast<long>(mpz_remove(s.num.get_mpz_t(), s.num.get_mpz_t(), prime.get_mpz_t()));
  s.valuation -= static_cast<long>(mpz_remove(s.den.get_mpz_t(), s.den.get_mpz_t(), prime.get_mpz_t()));
  return s;
}

int legendre_unit(const Split& s, std::int64_t p) {
  Integer prime(static_cast<long>(p));
  return mpz_legendre(s.num.get_mpz_t(), prime.get_mpz_t()) * mpz_legendre(s.den.get_mpz_t(), prime.get_mpz_t());
}

// Residue of the 2-adic unit num/den modulo 8; odd inverses mod 8 are themselves.
int unit_mod8(const Split& s) {
  Integer r = s.num * s.den;
  r %= 8;
  if (r < 0) r += 8;
  return static_cast<int>(r.get_si());
}

int parity(long v) { return static_cast<int>(v % 2 != 0); }

void check_place(const Place& v) {
  if (v.real()) return;
  if (v.prime < 2) throw Error(ErrorCode::BadPlace, std::to_string(v.prime) + " is not a place");
  auto ps = prime_divisors(v.prime);
  if (ps.size() != 1 || ps.front() != v.prime) {
    throw Error(ErrorCode::BadPlace, std::to_string(v.prime) + " is not prime");
  }
}

Rational discriminant(const DiagonalQuadraticForm& f) {
  Rational d = 1;
  for (auto c : f.coefficients()) d *= Rational(static_cast<long>(c));
  return d;
}

bool is_rational_square(const Rational& q) {
  return sgn(q) > 0 && mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

bool indefinite(const DiagonalQuadraticForm& f) {
  const auto& c = f.coefficients();
  bool pos = std::any_of(c.begin(), c.end(), [](auto x) { return x > 0; });
  bool neg = std::any_of(c.begin(), c.end(), [](auto x) { return x < 0; });
  return pos && neg;
}

Integer isqrt_exact(const Integer& v, bool& ok) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  ok = r * r == v;
  return r;
}

}  // namespace

DiagonalQuadraticForm::DiagonalQuadraticForm(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto c : coeffs_) {
    if (c == 0) throw Error(ErrorCode::ZeroCoefficient, "quadratic form coefficient is zero");
  }
}

Integer DiagonalQuadraticForm::evaluate(const std::vector<std::int64_t>& x) const {
  if (x.size() != coeffs_.size()) throw Error(ErrorCode::BadIndices, "vector length does not match the form");
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Integer xi(static_cast<long>(x[i]));
    s += Integer(static_cast<long>(coeffs_[i])) * xi * xi;
  }
  return s;
}

std::string DiagonalQuadraticForm::to_string() const {
  std::string out = "diag(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs_[i]);
  }
  return out + ")";
}

Place Place::at(std::int64_t p) {
  Place v{p};
  if (p == 0) throw Error(ErrorCode::BadPlace, "0 is not a prime");
  check_place(v);
  return v;
}

std::string Place::to_string() const { return real() ? "inf" : std::to_string(prime); }

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  check_place(v);
  if (is_zero(a) || is_zero(b)) throw Error(ErrorCode::ZeroCoefficient, "Hilbert symbol of zero");
  if (v.real()) return sgn(a) < 0 && sgn(b) < 0 ? -1 : 1;
  Split sa = split_at(a, v.prime);
  Split sb = split_at(b, v.prime);
  int alpha = parity(sa.valuation);
  int beta = parity(sb.valuation);
  if (v.prime == 2) {
    int u = unit_mod8(sa);
    int w = unit_mod8(sb);
    auto eps = [](int x) { return ((x - 1) / 2) % 2; };
    auto omega = [](int x) { return ((x * x - 1) / 8) % 2; };
    int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  if (alpha && beta && ((v.prime - 1) / 2) % 2 == 1) s = -s;
  if (beta) s *= legendre_unit(sa, v.prime);
  if (alpha) s *= legendre_unit(sb, v.prime);
  return s;
}

bool is_square_at(const Rational& a, const Place& v) {
  check_place(v);
  if (is_zero(a)) return true;
  if (v.real()) return sgn(a) > 0;
  Split s = split_at(a, v.prime);
  if (parity(s.valuation)) return false;
  if (v.prime == 2) return unit_mod8(s) == 1;
  return legendre_unit(s, v.prime) == 1;
}

std::vector<Place> relevant_places(const DiagonalQuadraticForm& f) {
  std::vector<std::int64_t> primes;
  for (auto c : f.coefficients()) {
    for (auto p : prime_divisors(c)) {
      if (p != 2) primes.push_back(p);
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out{Place::infinity(), Place{2}};
  for (auto p : primes) out.push_back(Place{p});
  return out;
}

int hasse_invariant(const DiagonalQuadraticForm& f, const Place& v) {
  const auto& c = f.coefficients();
  int h = 1;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      h *= hilbert_symbol(Rational(static_cast<long>(c[i])), Rational(static_cast<long>(c[j])), v);
  return h;
}

bool is_isotropic_at(const DiagonalQuadraticForm& f, const Place& v) {
  check_place(v);
  const std::size_t n = f.dim();
  if (n <= 1) return false;
  if (v.real()) return indefinite(f);
  Rational d = discriminant(f);
  switch (n) {
    case 2:
      return is_square_at(-d, v);
    case 3:
      return hasse_invariant(f, v) == hilbert_symbol(-1, -d, v);
    case 4:
      return !is_square_at(d, v) || hasse_invariant(f, v) == hilbert_symbol(-1, -1, v);
    default:
      return true;
  }
}

std::optional<std::vector<std::int64_t>> find_isotropic_vector(const DiagonalQuadraticForm& f, std::int64_t max_height) {
  const std::size_t n = f.dim();
  if (n < 2) return std::nullopt;
  const auto& c = f.coefficients();
  const Integer last(static_cast<long>(c.back()));
  std::vector<std::int64_t> x(n, 0);
  for (std::int64_t h = 1; h <= max_height; ++h) {
    // Leading n-1 coordinates in descending lexicographic order over [0, h].
    std::fill(x.begin(), x.end() - 1, h);
    for (;;) {
      Integer s = 0;
      std::int64_t top = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Integer xi(static_cast<long>(x[i]));
        s += Integer(static_cast<long>(c[i])) * xi * xi;
        top = std::max(top, x[i]);
      }
      // c_n x_n^2 = -s
      Integer rhs = -s;
      if (mpz_divisible_p(rhs.get_mpz_t(), last.get_mpz_t())) {
        Integer sq = rhs / last;
        if (sq >= 0) {
          bool exact = false;
          Integer r = isqrt_exact(sq, exact);
          if (exact && r <= h && (top == h || r == h) && (top > 0 || r > 0)) {
            x.back() = r.get_si();
            return x;
          }
        }
      }
      std::size_t k = n - 1;
      while (k > 0 && x[k - 1] == 0) --k;
      if (k == 0) break;
      --x[k - 1];
      std::fill(x.begin() + static_cast<std::ptrdiff_t>(k), x.end() - 1, h);
    }
  }
  return std::nullopt;
}

bool is_isotropic_rational(const DiagonalQuadraticForm& f) {
  const std::size_t n = f.dim();
  if (n <= 1) return false;
  if (n == 2) return is_rational_square(-discriminant(f));
  if (n >= 5) return indefinite(f);
  for (const auto& v : relevant_places(f)) {
    if (!is_isotropic_at(f, v)) return false;
  }
  return true;
}

IsotropyDecision decide_isotropy(const DiagonalQuadraticForm& f) {
  IsotropyDecision d;
  d.isotropic = is_isotropic_rational(f);
  for (const auto& v : relevant_places(f)) d.local.push_back({v, hasse_invariant(f, v), is_isotropic_at(f, v)});
  if (d.isotropic) {
    // Keep each height layer below about 2e4 candidates.
    auto span = static_cast<double>(f.dim() - 1);
    auto max_height = static_cast<std::int64_t>(std::floor(std::pow(2e4, 1.0 / span))) - 1;
    d.witness = find_isotropic_vector(f, std::max<std::int64_t>(max_height, 1));
  }
  return d;
}

StabilizerShape stabilizer_forms(const SymplecticPartition& p, const SquareClassAssignment& a) {
  a.require_complete(p);
  StabilizerShape shape;
  std::vector<std::int64_t> pending;
  int pending_part = 0;
  auto flush = [&] {
    if (!pending.empty()) shape.orthogonal_blocks.push_back({pending_part, DiagonalQuadraticForm(pending)});
    pending.clear();
  };
  auto blocks = block_form(p);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    if (blk.even()) {
      if (blk.part != pending_part) flush();
      pending_part = blk.part;
      pending.push_back(a.at(b));
      continue;
    }
    if (!shape.symplectic_ranks.empty() && shape.symplectic_ranks.back().part == blk.part) {
      ++shape.symplectic_ranks.back().rank;
    } else {
      shape.symplectic_ranks.push_back({blk.part, 1});
    }
  }
  flush();
  return shape;
}

bool is_anisotropic_stabilizer(const SymplecticPartition& p, const SquareClassAssignment& a) {
  auto shape = stabilizer_forms(p, a);
  return std::none_of(shape.orthogonal_blocks.begin(), shape.orthogonal_blocks.end(),
                      [](const OrthogonalBlock& b) { return is_isotropic_rational(b.form); });
}

ImaginaryCheck totally_imaginary_constraint(const SymplecticPartition& p) {
  ImaginaryCheck out;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    if (parts[i] % 2 != 0) {
      throw Error(ErrorCode::OddPartPresent, "odd part " + std::to_string(parts[i]) + " in " + p.to_string());
    }
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int mult = static_cast<int>(j - i);
    if (mult >= 5) out.violators.emplace_back(parts[i], mult);
    i = j;
  }
  out.ok = out.violators.empty();
  return out;
}

}  // namespace sympcalc

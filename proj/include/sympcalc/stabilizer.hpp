#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympcalc/error.hpp"
#include "sympcalc/partitions.hpp"
#include "sympcalc/rational.hpp"

namespace sympcalc {

// sum c_i x_i^2 with nonzero integer coefficients.
class DiagonalQuadraticForm {
 public:
  DiagonalQuadraticForm() = default;
  // Throws ZeroCoefficient.
  explicit DiagonalQuadraticForm(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::size_t dim() const { return coeffs_.size(); }
  Integer evaluate(const std::vector<std::int64_t>& x) const;
  std::string to_string() const;

  friend bool operator==(const DiagonalQuadraticForm&, const DiagonalQuadraticForm&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

// A place of Q: a prime, or the real place (prime == 0).
struct Place {
  std::int64_t prime = 0;

  static Place infinity() { return {}; }
  // Throws BadPlace unless p is prime.
  static Place at(std::int64_t p);
  bool real() const { return prime == 0; }
  std::string to_string() const;
  friend bool operator==(const Place&, const Place&) = default;
};

// (a, b)_v. Throws BadPlace for a non-prime place, ZeroCoefficient for a
// zero argument.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

bool is_square_at(const Rational& a, const Place& v);

// Infinity, 2, then the odd primes dividing some coefficient.
std::vector<Place> relevant_places(const DiagonalQuadraticForm& f);

// Hasse invariant prod_{i<j} (a_i, a_j)_v.
int hasse_invariant(const DiagonalQuadraticForm& f, const Place& v);

bool is_isotropic_at(const DiagonalQuadraticForm& f, const Place& v);

struct LocalData {
  Place place;
  int hasse = 1;
  bool isotropic = false;
};

struct IsotropyDecision {
  bool isotropic = false;
  std::optional<std::vector<std::int64_t>> witness;  // nonzero zero of f, when found
  std::vector<LocalData> local;
};

// Smallest-height nonnegative zero, searched up to `max_height`.
std::optional<std::vector<std::int64_t>> find_isotropic_vector(const DiagonalQuadraticForm& f, std::int64_t max_height);

bool is_isotropic_rational(const DiagonalQuadraticForm& f);
// Decision plus local data and a witness from a bounded search.
IsotropyDecision decide_isotropy(const DiagonalQuadraticForm& f);

struct OrthogonalBlock {
  int part = 0;
  DiagonalQuadraticForm form;  // one coefficient per occurrence of the part
};

struct SymplecticFactor {
  int part = 0;
  int rank = 0;  // Sp(2 * rank) for multiplicity 2 * rank
};

struct StabilizerShape {
  std::vector<OrthogonalBlock> orthogonal_blocks;
  std::vector<SymplecticFactor> symplectic_ranks;
};

// Throws MissingSquareClass.
StabilizerShape stabilizer_forms(const SymplecticPartition& p, const SquareClassAssignment& a);

// Every orthogonal block is anisotropic; odd parts are ignored. Whether the
// verdict applies to a given representation is the caller's assumption: the
// uniqueness hypothesis on the maximal orbit has no algebraic check here.
bool is_anisotropic_stabilizer(const SymplecticPartition& p, const SquareClassAssignment& a);

struct ImaginaryCheck {
  bool ok = true;
  std::vector<std::pair<int, int>> violators;  // (part, multiplicity) with multiplicity >= 5
};

// Throws OddPartPresent.
ImaginaryCheck totally_imaginary_constraint(const SymplecticPartition& p);

}  // namespace sympcalc

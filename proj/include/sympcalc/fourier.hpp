#pragma once

#include <string>
#include <vector>

#include "sympcalc/liealg.hpp"
#include "sympcalc/poly.hpp"

namespace sympcalc {

struct CharacterTerm {
  int row = 0;  // one-based
  int col = 0;  // one-based
  Rational coeff;
  friend bool operator==(const CharacterTerm&, const CharacterTerm&) = default;
};

// l(v) = tr(X log v) on exp(g_{>=2}) written as a sum of matrix entries.
struct CharacterFunctional {
  SymplecticPartition partition;
  SquareClassAssignment classes;
  RationalMatrix x;
  std::vector<CharacterTerm> terms;  // sorted by (row, col)

  Rational entry_form(const RationalMatrix& v) const;
  Rational trace_form(const RationalMatrix& v) const;
};

CharacterFunctional character_data(const SymplecticPartition& p, const SquareClassAssignment& a);

// Root lists splitting g_1 into two halves, one pair of block indices at a time.
struct PolarizationRoots {
  std::vector<RootLabel> x_roots;
  std::vector<RootLabel> y_roots;
};

PolarizationRoots polarization_roots(const SymplecticPartition& p);

// Basis of g_1 as root labels, in all_roots order.
std::vector<RootLabel> level_one_roots(const SymplecticPartition& p);

// Alternating matrix tr(X[Z_k, Z_l]) on the given g_1 vectors (coordinates
// in the root basis `roots`).
RationalMatrix heisenberg_gram(const RationalMatrix& x, const std::vector<RootLabel>& roots,
                               const std::vector<Vector<Rational>>& lhs, const std::vector<Vector<Rational>>& rhs);

// Lagrangian pair for the Heisenberg form. The y half is span(y_roots); the
// x half is span(x_roots) shifted by multiples of y vectors so that it is
// isotropic as well. Vectors are coordinates on level_one_roots(p).
struct Lagrangian {
  std::vector<RootLabel> basis;           // level_one_roots(p)
  std::vector<Vector<Rational>> x_half;   // one vector per x root
  std::vector<Vector<Rational>> y_half;   // one vector per y root
  bool roots_x_isotropic = false;         // the unshifted x roots already were
  bool roots_y_isotropic = false;
};

// Throws NoSolution if the y half is not isotropic or does not pair
// nondegenerately with the x half.
Lagrangian lagrangian_halves(const SymplecticPartition& p, const SquareClassAssignment& a);

struct HeisenbergReport {
  int dim_g1 = 0;
  RationalMatrix gram;  // on level_one_roots(p)
  int rank = 0;
  bool nondegenerate = false;
  int sharp_intersection_dim = 0;  // dim(g_1 ∩ X^sharp)
  int gram_radical_dim = 0;        // dim of the radical of gram
};

HeisenbergReport heisenberg_form(const SymplecticPartition& p, const SquareClassAssignment& a);

struct PairingIdentity {
  RootLabel first;   // carries the indeterminate x
  RootLabel second;  // carries the indeterminate y
  bool long_root = false;
  Poly expected;
  Poly actual;
  bool holds() const { return expected == actual; }
};

// Symbolic values tr(X[x_first(x), x_second(y)]) for the matched root pairs,
// in root groups normalized by root_group_scale.
std::vector<PairingIdentity> pairing_identities(const SymplecticPartition& p, const SquareClassAssignment& a);

// Root groups x_b(s) = exp(s * scale(b) * E_b). The scale is 1/2 for the
// roots e_a + e_b joining the end a of an even block to the middle b of a
// smaller odd pair block, whose brackets produce twice a long root vector,
// and 1 otherwise.
Rational root_group_scale(const SymplecticPartition& p, const RootLabel& root);

struct NondegeneracyFailure {
  SymplecticPartition partition;
  SquareClassAssignment classes;
  std::string reason;
};

struct NondegeneracySummary {
  int partitions = 0;
  int instances = 0;
  std::vector<NondegeneracyFailure> failures;
  std::vector<std::pair<SymplecticPartition, int>> dim_g1;
  bool ok() const { return failures.empty(); }
};

// Default non-trivial square classes, cycled over the even blocks.
std::vector<std::int64_t> square_class_samples();
SquareClassAssignment sample_assignment(const SymplecticPartition& p, std::int64_t value);
SquareClassAssignment cycled_assignment(const SymplecticPartition& p, std::size_t offset);

// Every partition up to two_n_max with the trivial classes and one cycled
// sample: g_1 meets the annihilator trivially, the Gram matrix has full rank
// and the pairing identities hold.
NondegeneracySummary verify_lemma21(int two_n_max);

}  // namespace sympcalc

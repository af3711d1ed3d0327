#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sympcalc {

// Partition of 2n in which every odd part occurs with even multiplicity.
// Parts are stored non-increasing. The empty partition (n = 0) is allowed
// as the result of exhausting descents but is rejected by validation.
class SymplecticPartition {
 public:
  SymplecticPartition() = default;

  // Sorts, then checks the symplectic conditions. Throws EmptyInput,
  // NonPositivePart, OddTotal or OddMultiplicity.
  static SymplecticPartition validate(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  int rank() const { return total_ / 2; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  // Number of parts equal to `value`.
  int multiplicity(int value) const;
  std::vector<int> even_parts() const;

  std::string to_string() const;

  friend bool operator==(const SymplecticPartition&, const SymplecticPartition&) = default;
  friend auto operator<=>(const SymplecticPartition& a, const SymplecticPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  static SymplecticPartition unchecked(std::vector<int> sorted_parts);
  friend SymplecticPartition make_partition_unchecked(std::vector<int>);

  std::vector<int> parts_;
  int total_ = 0;
};

SymplecticPartition validate_symplectic(std::vector<int> parts);

// Chunk of the normalized form [p_1^{e_1} ... p_r^{e_r}]: an even part on its
// own (exponent 1, length p/2) or a pair of equal odd parts (exponent 2,
// length p). Index ranges are one-based and consecutive.
struct Block {
  int part = 0;
  int exponent = 1;
  int length = 0;
  int first = 1;  // first index of the block in 1..n
  int last() const { return first + length - 1; }
  bool even() const { return exponent == 1; }
};

std::vector<Block> block_form(const SymplecticPartition& p);

// Square classes attached to the even blocks, canonicalized to signed
// squarefree integers. Keys are block indices into block_form(p).
class SquareClassAssignment {
 public:
  SquareClassAssignment() = default;

  // Values aligned with the even parts of p in part order.
  static SquareClassAssignment aligned(const SymplecticPartition& p, std::span<const std::int64_t> values);
  // The class of 1 on every even block.
  static SquareClassAssignment trivial(const SymplecticPartition& p);

  void set(std::size_t block, std::int64_t value);
  std::optional<std::int64_t> get(std::size_t block) const;
  // Throws MissingSquareClass unless every even block of p has a class and
  // every key names an even block.
  std::int64_t at(std::size_t block) const;
  void require_complete(const SymplecticPartition& p) const;

  // Values in block order (i.e. aligned with the even parts).
  std::vector<std::int64_t> values() const;
  const std::map<std::size_t, std::int64_t>& entries() const { return values_; }

  friend bool operator==(const SquareClassAssignment&, const SquareClassAssignment&) = default;

 private:
  std::map<std::size_t, std::int64_t> values_;
};

enum class PartitionOrdering { Less, Greater, Equal, Incomparable };

std::string to_string(PartitionOrdering o);

// All symplectic partitions of two_n, each once, in lexicographically
// descending order (a linear extension of the dominance order).
std::vector<SymplecticPartition> enumerate_symplectic(int two_n);

// Even number of even parts above every odd part.
bool is_special(const SymplecticPartition& p);

// Pair-replacement recipe for the smallest special partition dominating p.
SymplecticPartition sp_expansion(const SymplecticPartition& p);

// One application of the odd-run rewriting
//   [... (2n1) (2n2+1)^{2k} ...] -> [... (2n1) (2n2+2) (2n2+1)^{2k-2} (2n2) ...].
struct RewriteStep {
  SymplecticPartition before;
  SymplecticPartition after;
  int leading_even = 0;  // 2n1
  int odd_part = 0;      // 2n2+1
  int odd_count = 0;     // 2k
  std::size_t position = 0;  // zero-based index of 2n1 in `before`
};

struct ExpansionTrace {
  SymplecticPartition result;
  std::vector<RewriteStep> steps;
};

// Iterative expansion: repeatedly rewrite at the largest odd part lying below
// an odd number of even parts, until the partition is special.
ExpansionTrace expansion_via_steps(const SymplecticPartition& p);

PartitionOrdering dominance_compare(const SymplecticPartition& p, const SymplecticPartition& q);

struct MaximalResult {
  std::vector<SymplecticPartition> maximal;
  std::vector<SymplecticPartition> non_special;  // maximal members that fail is_special
};

MaximalResult maximal_elements(std::span<const SymplecticPartition> set);

enum class GroupKind { Linear, Metaplectic };

std::string to_string(GroupKind k);

struct Descent {
  SymplecticPartition partition;
  GroupKind kind;
};

Descent descend(const SymplecticPartition& p, GroupKind kind);
// Variant on a raw part list, so an unsorted leading part can be reported.
Descent descend(std::span<const int> parts, GroupKind kind);

struct CompositeStage {
  SymplecticPartition partition;
  SquareClassAssignment classes;
  friend bool operator==(const CompositeStage&, const CompositeStage&) = default;
};

// Staged partition p^(1) o p^(2) o ...: each stage lives in a group whose
// rank drops by the content of the non-unit parts of the previous stage.
class CompositePartition {
 public:
  CompositePartition() = default;
  // Throws InvalidComposite when stage totals do not chain.
  explicit CompositePartition(std::vector<CompositeStage> stages);

  static CompositePartition plain(SymplecticPartition p, SquareClassAssignment a);

  const std::vector<CompositeStage>& stages() const { return stages_; }
  bool is_plain() const { return stages_.size() == 1; }

  friend bool operator==(const CompositePartition&, const CompositePartition&) = default;

 private:
  std::vector<CompositeStage> stages_;
};

// Sum of the parts different from 1.
int nontrivial_content(const SymplecticPartition& p);

enum class CompositeRule { MergeLeadingEven, SplitLeadingEven, Prop32Merge, Prop33Merge, Lemma43Step };

std::string to_string(CompositeRule r);
std::optional<CompositeRule> parse_composite_rule(std::string_view name);

// Rewrites act on the trailing stage(s) of the composite. The result is a
// composite; a single-stage result stands for a plain partition.
CompositePartition composite_rewrite(const CompositePartition& c, CompositeRule rule);

}  // namespace sympcalc

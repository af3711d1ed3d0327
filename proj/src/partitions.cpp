#include "sympcalc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "sympcalc/error.hpp"
#include "sympcalc/rational.hpp"

namespace sympcalc {

SymplecticPartition make_partition_unchecked(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return SymplecticPartition::unchecked(std::move(parts));
}

SymplecticPartition SymplecticPartition::unchecked(std::vector<int> sorted_parts) {
  SymplecticPartition p;
  p.total_ = std::accumulate(sorted_parts.begin(), sorted_parts.end(), 0);
  p.parts_ = std::move(sorted_parts);
  return p;
}

SymplecticPartition SymplecticPartition::validate(std::vector<int> parts) {
  if (parts.empty()) throw Error(ErrorCode::EmptyInput, "partition has no parts");
  for (int x : parts) {
    if (x <= 0) throw Error(ErrorCode::NonPositivePart, "part " + std::to_string(x) + " is not positive");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (total % 2 != 0) throw Error(ErrorCode::OddTotal, "parts sum to " + std::to_string(total));
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == 1 && (j - i) % 2 == 1) {
      throw Error(ErrorCode::OddMultiplicity,
                  "odd part " + std::to_string(parts[i]) + " occurs " + std::to_string(j - i) + " times");
    }
    i = j;
  }
  return unchecked(std::move(parts));
}

SymplecticPartition validate_symplectic(std::vector<int> parts) {
  return SymplecticPartition::validate(std::move(parts));
}

int SymplecticPartition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<int> SymplecticPartition::even_parts() const {
  std::vector<int> out;
  for (int x : parts_) {
    if (x % 2 == 0) out.push_back(x);
  }
  return out;
}

std::string SymplecticPartition::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << "]";
  return out.str();
}

std::vector<Block> block_form(const SymplecticPartition& p) {
  std::vector<Block> blocks;
  int next = 1;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    Block b;
    b.part = parts[i];
    b.first = next;
    if (parts[i] % 2 == 0) {
      b.exponent = 1;
      b.length = parts[i] / 2;
      i += 1;
    } else {
      b.exponent = 2;
      b.length = parts[i];
      i += 2;
    }
    next += b.length;
    blocks.push_back(b);
  }
  return blocks;
}

// --- square classes ---------------------------------------------------------

SquareClassAssignment SquareClassAssignment::aligned(const SymplecticPartition& p,
                                                     std::span<const std::int64_t> values) {
  auto blocks = block_form(p);
  SquareClassAssignment a;
  std::size_t k = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].even()) continue;
    if (k >= values.size()) {
      throw Error(ErrorCode::MissingSquareClass, "no square class for even part " + std::to_string(blocks[i].part) +
                                                     " of " + p.to_string());
    }
    a.set(i, values[k++]);
  }
  if (k != values.size()) {
    throw Error(ErrorCode::MissingSquareClass, std::to_string(values.size()) + " square classes given for " +
                                                   std::to_string(k) + " even parts of " + p.to_string());
  }
  return a;
}

SquareClassAssignment SquareClassAssignment::trivial(const SymplecticPartition& p) {
  auto blocks = block_form(p);
  SquareClassAssignment a;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].even()) a.set(i, 1);
  }
  return a;
}

void SquareClassAssignment::set(std::size_t block, std::int64_t value) {
  values_[block] = squarefree_part(value);
}

std::optional<std::int64_t> SquareClassAssignment::get(std::size_t block) const {
  auto it = values_.find(block);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::int64_t SquareClassAssignment::at(std::size_t block) const {
  auto it = values_.find(block);
  if (it == values_.end()) {
    throw Error(ErrorCode::MissingSquareClass, "no square class for block " + std::to_string(block + 1));
  }
  return it->second;
}

void SquareClassAssignment::require_complete(const SymplecticPartition& p) const {
  auto blocks = block_form(p);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].even() && !values_.count(i)) {
      throw Error(ErrorCode::MissingSquareClass,
                  "even part " + std::to_string(blocks[i].part) + " of " + p.to_string() + " has no square class");
    }
  }
  for (const auto& [block, value] : values_) {
    if (block >= blocks.size() || !blocks[block].even()) {
      throw Error(ErrorCode::MissingSquareClass,
                  "square class attached to a non-even block " + std::to_string(block + 1) + " of " + p.to_string());
    }
  }
}

std::vector<std::int64_t> SquareClassAssignment::values() const {
  std::vector<std::int64_t> out;
  for (const auto& [block, v] : values_) out.push_back(v);
  return out;
}

// --- orderings and enumeration ---------------------------------------------

std::string to_string(PartitionOrdering o) {
  switch (o) {
    case PartitionOrdering::Less: return "less";
    case PartitionOrdering::Greater: return "greater";
    case PartitionOrdering::Equal: return "equal";
    case PartitionOrdering::Incomparable: return "incomparable";
  }
  return "unknown";
}

std::vector<SymplecticPartition> enumerate_symplectic(int two_n) {
  if (two_n % 2 != 0) throw Error(ErrorCode::OddTotal, "total " + std::to_string(two_n) + " is odd");
  if (two_n < 2) throw Error(ErrorCode::NonPositivePart, "total must be at least 2");
  std::vector<SymplecticPartition> out;
  std::vector<int> current;
  // Descending lexicographic generation: larger leading parts first.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      bool ok = true;
      for (std::size_t i = 0; i < current.size();) {
        std::size_t j = i;
        while (j < current.size() && current[j] == current[i]) ++j;
        if (current[i] % 2 == 1 && (j - i) % 2 == 1) {
          ok = false;
          break;
        }
        i = j;
      }
      if (ok) out.push_back(make_partition_unchecked(current));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(two_n, two_n);
  return out;
}

bool is_special(const SymplecticPartition& p) {
  int evens_above = 0;
  for (int x : p.parts()) {
    if (x % 2 == 0) {
      ++evens_above;
    } else if (evens_above % 2 == 1) {
      return false;
    }
  }
  return true;
}

SymplecticPartition sp_expansion(const SymplecticPartition& p) {
  std::vector<int> parts = p.parts();
  const std::size_t r = parts.size();
  // One-based index i: p_{2i} = p_{2i+1} odd and p_{2i-1} != p_{2i}.
  std::vector<std::size_t> selected;
  for (std::size_t i = 1; 2 * i + 1 <= r; ++i) {
    int a = parts[2 * i - 1];
    int b = parts[2 * i];
    int before = parts[2 * i - 2];
    if (a == b && a % 2 == 1 && before != a) selected.push_back(i);
  }
  for (std::size_t i : selected) {
    parts[2 * i - 1] += 1;
    parts[2 * i] -= 1;
  }
  return make_partition_unchecked(std::move(parts));
}

ExpansionTrace expansion_via_steps(const SymplecticPartition& p) {
  ExpansionTrace trace{p, {}};
  for (;;) {
    const auto& parts = trace.result.parts();
    // Largest odd part with an odd number of strictly larger even parts.
    std::optional<std::size_t> start;
    int evens_above = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int x = parts[i];
      if (x % 2 == 0) {
        ++evens_above;
        continue;
      }
      if ((i == 0 || parts[i - 1] != x) && evens_above % 2 == 1) {
        start = i;
        break;
      }
    }
    if (!start) break;
    std::size_t s = *start;
    RewriteStep step;
    step.before = trace.result;
    step.odd_part = parts[s];
    step.odd_count = trace.result.multiplicity(step.odd_part);
    step.position = s - 1;
    step.leading_even = parts[s - 1];  // smallest even part above the odd run
    std::vector<int> next(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(s));
    next.push_back(step.odd_part + 1);
    for (int j = 0; j < step.odd_count - 2; ++j) next.push_back(step.odd_part);
    next.push_back(step.odd_part - 1);
    next.insert(next.end(), parts.begin() + static_cast<std::ptrdiff_t>(s) + step.odd_count, parts.end());
    step.after = make_partition_unchecked(std::move(next));
    trace.result = step.after;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

PartitionOrdering dominance_compare(const SymplecticPartition& p, const SymplecticPartition& q) {
  if (p.total() != q.total()) {
    throw Error(ErrorCode::MismatchedTotal, p.to_string() + " and " + q.to_string() + " have different totals");
  }
  bool some_greater = false;
  bool some_less = false;
  int sp = 0, sq = 0;
  std::size_t len = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < len; ++i) {
    sp += i < p.size() ? p[i] : 0;
    sq += i < q.size() ? q[i] : 0;
    if (sp > sq) some_greater = true;
    if (sp < sq) some_less = true;
  }
  if (some_greater && some_less) return PartitionOrdering::Incomparable;
  if (some_greater) return PartitionOrdering::Greater;
  if (some_less) return PartitionOrdering::Less;
  return PartitionOrdering::Equal;
}

MaximalResult maximal_elements(std::span<const SymplecticPartition> set) {
  MaximalResult result;
  std::vector<SymplecticPartition> members(set.begin(), set.end());
  std::sort(members.begin(), members.end(), std::greater<>());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& p : members) {
    bool dominated = false;
    for (const auto& q : members) {
      if (dominance_compare(q, p) == PartitionOrdering::Greater) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      result.maximal.push_back(p);
      if (!is_special(p)) result.non_special.push_back(p);
    }
  }
  return result;
}

// --- descent ------------------------------------------------------------------

std::string to_string(GroupKind k) { return k == GroupKind::Linear ? "sp" : "mp"; }

Descent descend(std::span<const int> parts, GroupKind kind) {
  if (parts.empty()) throw Error(ErrorCode::EmptyInput, "cannot descend from the empty partition");
  if (parts[0] % 2 != 0) throw Error(ErrorCode::OddLeadingPart, "leading part " + std::to_string(parts[0]) + " is odd");
  for (int x : parts) {
    if (x > parts[0]) {
      throw Error(ErrorCode::LeadingNotMaximal,
                  "leading part " + std::to_string(parts[0]) + " is smaller than part " + std::to_string(x));
    }
  }
  auto p = SymplecticPartition::validate(std::vector<int>(parts.begin(), parts.end()));
  return descend(p, kind);
}

Descent descend(const SymplecticPartition& p, GroupKind kind) {
  if (p.empty()) throw Error(ErrorCode::EmptyInput, "cannot descend from the empty partition");
  if (p[0] % 2 != 0) throw Error(ErrorCode::OddLeadingPart, "leading part " + std::to_string(p[0]) + " is odd");
  std::vector<int> rest(p.parts().begin() + 1, p.parts().end());
  GroupKind toggled = kind == GroupKind::Linear ? GroupKind::Metaplectic : GroupKind::Linear;
  return {make_partition_unchecked(std::move(rest)), toggled};
}

// --- composite partitions ----------------------------------------------------

int nontrivial_content(const SymplecticPartition& p) {
  int s = 0;
  for (int x : p.parts()) {
    if (x != 1) s += x;
  }
  return s;
}

CompositePartition::CompositePartition(std::vector<CompositeStage> stages) : stages_(std::move(stages)) {
  if (stages_.empty()) throw Error(ErrorCode::InvalidComposite, "composite partition has no stages");
  for (std::size_t k = 0; k < stages_.size(); ++k) {
    const auto& st = stages_[k];
    st.classes.require_complete(st.partition);
    if (k + 1 < stages_.size()) {
      int expected = st.partition.total() - nontrivial_content(st.partition);
      int actual = stages_[k + 1].partition.total();
      if (expected != actual) {
        throw Error(ErrorCode::InvalidComposite, "stage " + std::to_string(k + 2) + " " +
                                                     stages_[k + 1].partition.to_string() + " has total " +
                                                     std::to_string(actual) + ", expected " + std::to_string(expected));
      }
    }
  }
}

CompositePartition CompositePartition::plain(SymplecticPartition p, SquareClassAssignment a) {
  return CompositePartition({CompositeStage{std::move(p), std::move(a)}});
}

std::string to_string(CompositeRule r) {
  switch (r) {
    case CompositeRule::MergeLeadingEven: return "MergeLeadingEven";
    case CompositeRule::SplitLeadingEven: return "SplitLeadingEven";
    case CompositeRule::Prop32Merge: return "Prop32Merge";
    case CompositeRule::Prop33Merge: return "Prop33Merge";
    case CompositeRule::Lemma43Step: return "Lemma43Step";
  }
  return "Unknown";
}

std::optional<CompositeRule> parse_composite_rule(std::string_view name) {
  for (auto r : {CompositeRule::MergeLeadingEven, CompositeRule::SplitLeadingEven, CompositeRule::Prop32Merge,
                 CompositeRule::Prop33Merge, CompositeRule::Lemma43Step}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorCode::HypothesisViolated, what); }

// Is p of the form [lead^count 1^m] for some m >= 0?
bool is_hook(const SymplecticPartition& p, int lead, int count) {
  if (static_cast<int>(p.size()) < count) return false;
  for (int i = 0; i < count; ++i) {
    if (p[static_cast<std::size_t>(i)] != lead) return false;
  }
  for (std::size_t i = static_cast<std::size_t>(count); i < p.size(); ++i) {
    if (p[i] != 1) return false;
  }
  return true;
}

std::vector<int> ones(int count) { return std::vector<int>(static_cast<std::size_t>(count), 1); }

// Square classes of the even parts of a partition, in part order.
std::vector<std::int64_t> even_classes(const CompositeStage& st) { return st.classes.values(); }

CompositePartition replace_tail(const CompositePartition& c, std::size_t drop, std::vector<CompositeStage> tail) {
  std::vector<CompositeStage> stages(c.stages().begin(), c.stages().end() - static_cast<std::ptrdiff_t>(drop));
  for (auto& st : tail) stages.push_back(std::move(st));
  return CompositePartition(std::move(stages));
}

CompositePartition split_leading_even(const CompositePartition& c) {
  const auto& st = c.stages().back();
  const auto& p = st.partition;
  if (p.empty()) violated("cannot split the empty partition");
  if (p[0] % 2 != 0) violated("leading part " + std::to_string(p[0]) + " of " + p.to_string() + " is not even");
  if (p.size() > 1 && p[0] < p[1]) violated("2n1 >= p2 fails");
  int lead = p[0];
  auto classes = even_classes(st);
  std::vector<int> head = {lead};
  auto tail_ones = ones(p.total() - lead);
  head.insert(head.end(), tail_ones.begin(), tail_ones.end());
  auto head_p = make_partition_unchecked(head);
  std::vector<std::int64_t> head_classes = {classes.front()};
  auto rest_p = make_partition_unchecked(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
  std::vector<std::int64_t> rest_classes(classes.begin() + 1, classes.end());
  std::vector<CompositeStage> tail;
  tail.push_back({head_p, SquareClassAssignment::aligned(head_p, head_classes)});
  tail.push_back({rest_p, SquareClassAssignment::aligned(rest_p, rest_classes)});
  return replace_tail(c, 1, std::move(tail));
}

CompositePartition merge_leading_even(const CompositePartition& c) {
  if (c.stages().size() < 2) violated("merge needs at least two stages");
  const auto& first = c.stages()[c.stages().size() - 2];
  const auto& second = c.stages().back();
  const auto& p = first.partition;
  if (p.empty() || p[0] % 2 != 0 || !is_hook(p, p[0], 1)) {
    violated("stage " + p.to_string() + " is not of the form [(2n1) 1^m]");
  }
  int lead = p[0];
  if (!second.partition.empty() && lead < second.partition[0]) {
    violated("2n1 >= p2 fails: " + std::to_string(lead) + " < " + std::to_string(second.partition[0]));
  }
  std::vector<int> merged = {lead};
  merged.insert(merged.end(), second.partition.parts().begin(), second.partition.parts().end());
  auto merged_p = make_partition_unchecked(merged);
  std::vector<std::int64_t> classes = even_classes(first);
  auto rest = even_classes(second);
  classes.insert(classes.end(), rest.begin(), rest.end());
  return replace_tail(c, 2, {{merged_p, SquareClassAssignment::aligned(merged_p, classes)}});
}

CompositePartition merge_into_odd_pair(const CompositePartition& c) {
  if (c.stages().size() < 2) violated("merge needs two stages");
  const auto& first = c.stages()[c.stages().size() - 2];
  const auto& second = c.stages().back();
  const auto& p = first.partition;
  if (p.empty() || p[0] % 2 != 0 || !is_hook(p, p[0], 1)) {
    violated("first stage " + p.to_string() + " is not of the form [(2k) 1^{2n-2k}]");
  }
  int two_k = p[0];
  int two_n = p.total();
  int rest = two_n - 2 * two_k - 2;
  if (rest < 0) violated("2n - 4k - 2 < 0 for " + p.to_string());
  if (!is_hook(second.partition, two_k + 2, 1) || second.partition.total() != two_n - two_k) {
    violated("second stage " + second.partition.to_string() + " is not [(2k+2) 1^{2n-4k-2}] with 2k = " +
             std::to_string(two_k));
  }
  std::int64_t alpha = first.classes.values().front();
  std::int64_t beta = second.classes.values().front();
  if (squarefree_part(-alpha) != beta) {
    violated("beta = " + std::to_string(beta) + " is not -alpha modulo squares (alpha = " + std::to_string(alpha) + ")");
  }
  std::vector<int> merged = {two_k + 1, two_k + 1};
  auto tail_ones = ones(rest);
  merged.insert(merged.end(), tail_ones.begin(), tail_ones.end());
  auto merged_p = make_partition_unchecked(merged);
  return replace_tail(c, 2, {{merged_p, SquareClassAssignment{}}});
}

CompositePartition absorb_odd_stage(const CompositePartition& c) {
  if (c.stages().size() < 2) violated("merge needs two stages");
  const auto& first = c.stages()[c.stages().size() - 2];
  const auto& second = c.stages().back();
  const auto& p = first.partition;
  if (p.size() < 2 || p[0] % 2 != 1 || !is_hook(p, p[0], 2)) {
    violated("first stage " + p.to_string() + " is not of the form [(2k+1)^2 1^{2n-4k-2}]");
  }
  int odd = p[0];
  if (!second.partition.empty() && odd < second.partition[0]) {
    violated("2k+1 >= p1 fails: " + std::to_string(odd) + " < " + std::to_string(second.partition[0]));
  }
  std::vector<int> merged = {odd, odd};
  merged.insert(merged.end(), second.partition.parts().begin(), second.partition.parts().end());
  auto merged_p = make_partition_unchecked(merged);
  return replace_tail(c, 2, {{merged_p, SquareClassAssignment::aligned(merged_p, even_classes(second))}});
}

CompositePartition raise_odd_run(const CompositePartition& c) {
  const auto& st = c.stages().back();
  const auto& p = st.partition;
  if (p.size() < 3 || p[0] % 2 != 0 || p[1] % 2 != 1) {
    violated(p.to_string() + " is not of the form [(2n1)(2n2+1)^{2k} ...]");
  }
  int lead = p[0];
  int odd = p[1];
  int count = p.multiplicity(odd);
  if (count < 2) violated("k >= 1 fails");
  if (lead < odd + 1) violated("2n1 >= 2n2+2 fails");
  std::vector<int> next = {lead, odd + 1};
  for (int j = 0; j < count - 2; ++j) next.push_back(odd);
  if (odd - 1 > 0) next.push_back(odd - 1);
  next.insert(next.end(), p.parts().begin() + 1 + count, p.parts().end());
  auto next_p = make_partition_unchecked(next);
  // Existing even parts keep their classes; the two new even parts carry the
  // class of 1.
  auto old = even_classes(st);
  std::vector<std::int64_t> classes = {old.front(), 1};
  if (odd - 1 > 0) classes.push_back(1);
  classes.insert(classes.end(), old.begin() + 1, old.end());
  return replace_tail(c, 1, {{next_p, SquareClassAssignment::aligned(next_p, classes)}});
}

}  // namespace

CompositePartition composite_rewrite(const CompositePartition& c, CompositeRule rule) {
  switch (rule) {
    case CompositeRule::SplitLeadingEven: return split_leading_even(c);
    case CompositeRule::MergeLeadingEven: return merge_leading_even(c);
    case CompositeRule::Prop32Merge: return merge_into_odd_pair(c);
    case CompositeRule::Prop33Merge: return absorb_odd_stage(c);
    case CompositeRule::Lemma43Step: return raise_odd_run(c);
  }
  violated("unknown rule");
}

}  // namespace sympcalc

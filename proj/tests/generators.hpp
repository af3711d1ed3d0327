#pragma once

// Seeded random inputs shared by the property and round-trip tests.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "sympcalc/partitions.hpp"
#include "sympcalc/rational.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline const std::vector<sympcalc::SymplecticPartition>& partitions_of(int two_n) {
  static std::map<int, std::vector<sympcalc::SymplecticPartition>> cache;
  auto it = cache.find(two_n);
  if (it == cache.end()) it = cache.emplace(two_n, sympcalc::enumerate_symplectic(two_n)).first;
  return it->second;
}

inline sympcalc::SymplecticPartition partition(Rng& rng, int max_two_n) {
  const auto& all = partitions_of(2 * uniform(rng, 1, max_two_n / 2));
  return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
}

inline std::int64_t square_class(Rng& rng) {
  static const std::int64_t pool[] = {1, -1, 2, -2, 3, -3, 5, 6, -7, 10, -15, 30};
  return pool[uniform(rng, 0, 11)];
}

inline sympcalc::SquareClassAssignment assignment(Rng& rng, const sympcalc::SymplecticPartition& p) {
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i < p.even_parts().size(); ++i) v.push_back(square_class(rng));
  return sympcalc::SquareClassAssignment::aligned(p, v);
}

inline sympcalc::Rational rational(Rng& rng) {
  sympcalc::Rational q(uniform(rng, -999, 999), uniform(rng, 1, 99));
  q.canonicalize();
  return q;
}

// A plain composite, split at its leading even part when there is one.
inline sympcalc::CompositePartition composite(Rng& rng, int max_two_n) {
  using namespace sympcalc;
  auto p = partition(rng, max_two_n);
  auto c = CompositePartition::plain(p, assignment(rng, p));
  if (p[0] % 2 == 0 && p.size() > 1 && uniform(rng, 0, 1) == 1) return composite_rewrite(c, CompositeRule::SplitLeadingEven);
  return c;
}

}  // namespace gen

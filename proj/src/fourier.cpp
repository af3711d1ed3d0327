#include "sympcalc/fourier.hpp"

#include <algorithm>

namespace sympcalc {

namespace {

Rational pair_root(const RationalMatrix& c, const RootLabel& r, int n) {
  Rational s = 0;
  for (const auto& e : r.entries(n)) {
    if (e.sign > 0) {
      s += c(e.col, e.row);
    } else {
      s -= c(e.col, e.row);
    }
  }
  return s;
}

Rational pair_basis(const RationalMatrix& c, const BasisElement& b, int n) {
  if (!b.cartan) return pair_root(c, b.root, n);
  auto k = static_cast<std::size_t>(b.index - 1);
  return c(k, k) - c(2 * n - 1 - k, 2 * n - 1 - k);
}

Vector<Rational> unit(std::size_t dim, std::size_t k) {
  Vector<Rational> v(dim, Rational(0));
  v[k] = 1;
  return v;
}

std::size_t index_of(const std::vector<RootLabel>& basis, const RootLabel& r) {
  auto it = std::find(basis.begin(), basis.end(), r);
  if (it == basis.end()) throw Error(ErrorCode::BadIndices, r.to_string() + " is not in g_1");
  return static_cast<std::size_t>(it - basis.begin());
}

// Gram matrix tr(X[E_k, E_l]) on a list of roots.
RationalMatrix root_gram(const RationalMatrix& x, const std::vector<RootLabel>& roots, int n) {
  RationalMatrix g(roots.size(), roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto c = commutator(x, root_matrix(roots[k], Rational(1), n));
    for (std::size_t l = 0; l < roots.size(); ++l) g(k, l) = pair_root(c, roots[l], n);
  }
  return g;
}

Rational bilinear(const RationalMatrix& g, const Vector<Rational>& u, const Vector<Rational>& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (is_zero(u[k])) continue;
    for (std::size_t l = 0; l < v.size(); ++l) {
      if (is_zero(v[l]) || is_zero(g(k, l))) continue;
      s += u[k] * g(k, l) * v[l];
    }
  }
  return s;
}

}  // namespace

Rational CharacterFunctional::entry_form(const RationalMatrix& v) const {
  Rational s = 0;
  for (const auto& t : terms) s += t.coeff * v(static_cast<std::size_t>(t.row - 1), static_cast<std::size_t>(t.col - 1));
  return s;
}

Rational CharacterFunctional::trace_form(const RationalMatrix& v) const { return trace_product(x, log_unipotent(v)); }

CharacterFunctional character_data(const SymplecticPartition& p, const SquareClassAssignment& a) {
  CharacterFunctional cf{p, a, build_nilpotent(p, a), {}};
  int n = p.rank();
  auto d = build_cocharacter(p);
  for (const auto& r : all_roots(n)) {
    if (d.pair(r) != 2) continue;
    // tr(X E_r) = sum over the entries of E_r of sign * X(col, row).
    Rational c = pair_root(cf.x, r, n);
    if (is_zero(c)) continue;
    auto e = r.primary(n);
    cf.terms.push_back({static_cast<int>(e.row) + 1, static_cast<int>(e.col) + 1, c});
  }
  std::sort(cf.terms.begin(), cf.terms.end(),
            [](const auto& s, const auto& t) { return std::tie(s.row, s.col) < std::tie(t.row, t.col); });
  return cf;
}

std::vector<RootLabel> level_one_roots(const SymplecticPartition& p) {
  auto d = build_cocharacter(p);
  std::vector<RootLabel> out;
  for (const auto& r : all_roots(p.rank())) {
    if (d.pair(r) == 1) out.push_back(r);
  }
  return out;
}

PolarizationRoots polarization_roots(const SymplecticPartition& p) {
  PolarizationRoots out;
  auto blocks = block_form(p);
  const int n = p.rank();
  auto diff = [](int i, int j) { return RootLabel::diff(i, j); };
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (std::size_t bj = bi + 1; bj < blocks.size(); ++bj) {
      const auto& I = blocks[bi];
      const auto& J = blocks[bj];
      if (I.even() == J.even()) continue;
      const int below_i = I.first - 1;  // sum of q_k for k < i
      const int below_j = J.first - 1;
      const int above_j = n - J.last();  // sum of q_k for k > j
      const int t = (I.part - J.part - 1) / 2;
      const int top = n - above_j;  // last index of block j
      if (I.even()) {
        const int half_up = (J.part + 1) / 2;
        const int half_down = (J.part - 1) / 2;
        for (int l = 1; l <= half_up; ++l) out.y_roots.push_back(RootLabel::sum(below_i + t + l, top - l + 1));
        for (int m = 1; m <= half_down; ++m) out.y_roots.push_back(diff(below_i + t + m, below_j + m));
        for (int l = 1; l <= half_down; ++l) out.x_roots.push_back(diff(below_j + l, below_i + t + l + 1));
        out.x_roots.push_back(diff(below_i + t + half_up, below_j + half_up));
        for (int m = 1; m <= half_down; ++m) out.x_roots.push_back(RootLabel::neg_sum(top - m + 1, below_i + t + m + 1));
      } else {
        const int half = J.part / 2;
        for (int l = 1; l <= half; ++l) out.y_roots.push_back(diff(below_i + t + l, below_j + l));
        for (int m = 1; m <= half; ++m) out.y_roots.push_back(RootLabel::sum(below_i + t + half + m, top - m + 1));
        for (int l = 1; l <= half; ++l) out.x_roots.push_back(diff(below_j + l, below_i + t + l + 1));
        for (int m = 1; m <= half; ++m)
          out.x_roots.push_back(RootLabel::neg_sum(top - m + 1, below_i + t + half + m + 1));
      }
    }
  }
  return out;
}

RationalMatrix heisenberg_gram(const RationalMatrix& x, const std::vector<RootLabel>& roots,
                               const std::vector<Vector<Rational>>& lhs, const std::vector<Vector<Rational>>& rhs) {
  int n = static_cast<int>(x.rows() / 2);
  auto g = root_gram(x, roots, n);
  RationalMatrix out(lhs.size(), rhs.size());
  for (std::size_t k = 0; k < lhs.size(); ++k)
    for (std::size_t l = 0; l < rhs.size(); ++l) out(k, l) = bilinear(g, lhs[k], rhs[l]);
  return out;
}

Lagrangian lagrangian_halves(const SymplecticPartition& p, const SquareClassAssignment& a) {
  Lagrangian out;
  out.basis = level_one_roots(p);
  auto roots = polarization_roots(p);
  const std::size_t dim = out.basis.size();
  for (const auto& r : roots.x_roots) out.x_half.push_back(unit(dim, index_of(out.basis, r)));
  for (const auto& r : roots.y_roots) out.y_half.push_back(unit(dim, index_of(out.basis, r)));
  if (out.x_half.size() != out.y_half.size()) throw Error(ErrorCode::NoSolution, "halves differ in size");
  if (out.x_half.empty()) {
    out.roots_x_isotropic = out.roots_y_isotropic = true;
    return out;
  }
  auto x = build_nilpotent(p, a);
  auto g = root_gram(x, out.basis, p.rank());
  const std::size_t k = out.x_half.size();
  RationalMatrix gxx(k, k), gyy(k, k), cross(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      gxx(i, j) = bilinear(g, out.x_half[i], out.x_half[j]);
      gyy(i, j) = bilinear(g, out.y_half[i], out.y_half[j]);
      cross(i, j) = bilinear(g, out.x_half[i], out.y_half[j]);
    }
  }
  out.roots_x_isotropic = gxx.is_zero();
  out.roots_y_isotropic = gyy.is_zero();
  if (!out.roots_y_isotropic) throw Error(ErrorCode::NoSolution, "y roots do not span an isotropic subspace");
  auto cross_inv = inverse(cross);
  if (!cross_inv) throw Error(ErrorCode::NoSolution, "x and y halves pair degenerately");
  if (out.roots_x_isotropic) return out;
  // x'_a = x_a + sum_b M_ab y_b is isotropic when M^T = -1/2 P^{-1} G_xx.
  RationalMatrix mt = (*cross_inv * gxx) * Rational(-1, 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t b = 0; b < k; ++b) {
      const Rational& m = mt(b, i);
      if (is_zero(m)) continue;
      for (std::size_t c = 0; c < dim; ++c) out.x_half[i][c] += m * out.y_half[b][c];
    }
  }
  return out;
}

HeisenbergReport heisenberg_form(const SymplecticPartition& p, const SquareClassAssignment& a) {
  a.require_complete(p);
  HeisenbergReport rep;
  const int n = p.rank();
  auto x = build_nilpotent(p, a);
  auto g1 = level_one_roots(p);
  rep.dim_g1 = static_cast<int>(g1.size());
  rep.gram = root_gram(x, g1, n);
  rep.rank = static_cast<int>(rank(rep.gram));
  rep.nondegenerate = rep.rank == rep.dim_g1;
  rep.gram_radical_dim = rep.dim_g1 - rep.rank;
  if (g1.empty()) return rep;
  // Z in g_1 lies in X^sharp iff tr(X[Z, b]) = 0 for every basis element b
  // of the whole algebra; the kernel of that map is g_1 ∩ X^sharp.
  const auto& basis = sp_basis(n);
  RationalMatrix pairing(basis.size(), g1.size());
  for (std::size_t k = 0; k < g1.size(); ++k) {
    auto c = commutator(x, root_matrix(g1[k], Rational(1), n));
    for (std::size_t l = 0; l < basis.size(); ++l) pairing(l, k) = pair_basis(c, basis[l], n);
  }
  rep.sharp_intersection_dim = static_cast<int>(nullspace(pairing).size());
  return rep;
}

Rational root_group_scale(const SymplecticPartition& p, const RootLabel& root) {
  if (root.kind() != RootLabel::Kind::Sum) return 1;
  // e_a + e_b with a the last index of an even block and b the middle index
  // of a smaller odd pair block: its bracket with the matching x root is
  // twice the long root vector of X.
  const auto blocks = block_form(p);
  for (const auto& even : blocks) {
    if (!even.even()) continue;
    for (const auto& odd : blocks) {
      if (odd.even() || odd.part > even.part) continue;
      int middle = odd.first + (odd.part - 1) / 2;
      if ((root.i() == even.last() && root.j() == middle) || (root.j() == even.last() && root.i() == middle)) {
        return Rational(1, 2);
      }
    }
  }
  return 1;
}

std::vector<PairingIdentity> pairing_identities(const SymplecticPartition& p, const SquareClassAssignment& a) {
  a.require_complete(p);
  std::vector<PairingIdentity> out;
  const int n = p.rank();
  auto xr = build_nilpotent(p, a);
  auto xp = lift<Poly>(xr);
  const Poly vx = Poly::variable(0);
  const Poly vy = Poly::variable(1);
  auto blocks = block_form(p);
  auto roots = polarization_roots(p);
  auto evaluate = [&](const RootLabel& first, const RootLabel& second, bool long_root, const Poly& expected) {
    auto m1 = root_matrix<Poly>(first, vx * Poly(root_group_scale(p, first)), n);
    auto m2 = root_matrix<Poly>(second, vy * Poly(root_group_scale(p, second)), n);
    PairingIdentity id{first, second, long_root, expected, trace_product(xp, commutator(m1, m2))};
    out.push_back(std::move(id));
  };
  // Walk the block pairs in the same order as polarization_roots, slicing
  // the root lists accordingly.
  std::size_t xi = 0, yi = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (std::size_t bj = bi + 1; bj < blocks.size(); ++bj) {
      const auto& I = blocks[bi];
      const auto& J = blocks[bj];
      if (I.even() == J.even()) continue;
      const Poly minus_xy = -(vx * vy);
      if (I.even()) {
        const std::size_t up = static_cast<std::size_t>((J.part + 1) / 2);
        const std::size_t down = static_cast<std::size_t>((J.part - 1) / 2);
        const RootLabel* alpha = &roots.y_roots[yi];
        const RootLabel* beta = &roots.y_roots[yi + up];
        const RootLabel* gamma = &roots.x_roots[xi];  // gamma_1..gamma_up
        const RootLabel* delta = &roots.x_roots[xi + up];
        for (std::size_t l = 0; l < down; ++l) {
          evaluate(delta[l], alpha[l], false, minus_xy);
          evaluate(gamma[l], beta[l], false, minus_xy);
        }
        evaluate(alpha[up - 1], gamma[up - 1], true, minus_xy * Poly(Rational(a.at(bi))));
        yi += up + down;
        xi += up + down;
      } else {
        const std::size_t half = static_cast<std::size_t>(J.part / 2);
        const RootLabel* alpha = &roots.y_roots[yi];
        const RootLabel* beta = &roots.y_roots[yi + half];
        const RootLabel* gamma = &roots.x_roots[xi];
        const RootLabel* delta = &roots.x_roots[xi + half];
        for (std::size_t l = 0; l < half; ++l) {
          evaluate(gamma[l], alpha[l], false, minus_xy);
          evaluate(delta[l], beta[l], false, minus_xy);
        }
        yi += 2 * half;
        xi += 2 * half;
      }
    }
  }
  return out;
}

std::vector<std::int64_t> square_class_samples() { return {1, -1, 2, -2, 3, -3, 5, -5}; }

SquareClassAssignment sample_assignment(const SymplecticPartition& p, std::int64_t value) {
  std::vector<std::int64_t> v(p.even_parts().size(), value);
  return SquareClassAssignment::aligned(p, v);
}

SquareClassAssignment cycled_assignment(const SymplecticPartition& p, std::size_t offset) {
  auto samples = square_class_samples();
  std::vector<std::int64_t> v;
  for (std::size_t k = 0; k < p.even_parts().size(); ++k) v.push_back(samples[(offset + k) % samples.size()]);
  return SquareClassAssignment::aligned(p, v);
}

NondegeneracySummary verify_lemma21(int two_n_max) {
  NondegeneracySummary s;
  for (int two_n = 2; two_n <= two_n_max; two_n += 2) {
    for (const auto& p : enumerate_symplectic(two_n)) {
      ++s.partitions;
      std::vector<SquareClassAssignment> samples = {SquareClassAssignment::trivial(p)};
      if (!p.even_parts().empty()) samples.push_back(cycled_assignment(p, 1));
      for (const auto& a : samples) {
        ++s.instances;
        auto rep = heisenberg_form(p, a);
        if (!rep.nondegenerate) s.failures.push_back({p, a, "Heisenberg form is degenerate"});
        if (rep.sharp_intersection_dim != 0) {
          s.failures.push_back({p, a, "g_1 meets the annihilator in dimension " +
                                          std::to_string(rep.sharp_intersection_dim)});
        }
        for (const auto& id : pairing_identities(p, a)) {
          if (!id.holds()) {
            s.failures.push_back({p, a, "pairing of " + id.first.to_string() + " with " + id.second.to_string() +
                                            " is " + id.actual.to_string({"x", "y"})});
            break;
          }
        }
        if (a == samples.front()) s.dim_g1.emplace_back(p, rep.dim_g1);
      }
    }
  }
  return s;
}

}  // namespace sympcalc

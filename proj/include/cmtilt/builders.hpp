#pragma once

// Concrete algebras: block matrix algebras over graded pieces of R and K,
// path algebras of acyclic quivers with relations, the cyclic algebra
// kQ/(z^2) and the canonical algebra of type (2,2,2,2).
//
// Block algebras: entry (i, j) times entry (j, k) lands in entry (i, k); the
// idempotent of row i is the unit of entry (i, i).  A path from vertex u to v
// lies in e_v A e_u and products compose right to left.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cmtilt/algebra.hpp"
#include "cmtilt/quotient_ring.hpp"

namespace cmtilt {

template <class S>
struct BlockSpec {
  int size = 0;
  std::function<int(int, int)> entry_dim;                                   // 1-based (i, j)
  std::function<Vec<S>(int, int, int, const Vec<S>&, const Vec<S>&)> product;  // (i, j, k, u, v)
  std::function<Vec<S>(int)> diagonal_unit;
  std::function<std::string(int, int, int)> label;                          // (i, j, basis index)
};

template <class S>
FinDimAlgebra<S> block_algebra(FieldSpec field, const BlockSpec<S>& spec) {
  struct Slot {
    int i, j, k;
  };
  std::vector<Slot> slots;
  std::map<std::pair<int, int>, int> offset;
  for (int i = 1; i <= spec.size; ++i)
    for (int j = 1; j <= spec.size; ++j) {
      offset[{i, j}] = static_cast<int>(slots.size());
      for (int k = 0; k < spec.entry_dim(i, j); ++k) slots.push_back({i, j, k});
    }
  const int d = static_cast<int>(slots.size());
  std::vector<std::string> labels;
  for (const auto& s : slots) labels.push_back(spec.label(s.i, s.j, s.k));
  auto embed = [&](int i, int j, const Vec<S>& v) {
    Vec<S> out = zero_vec<S>(d);
    for (Index t = 0; t < v.size(); ++t) out(offset.at({i, j}) + t) = v(t);
    return out;
  };
  Vec<S> unit = zero_vec<S>(d);
  std::vector<Vec<S>> idems;
  std::vector<std::string> idem_labels;
  for (int i = 1; i <= spec.size; ++i) {
    idems.push_back(embed(i, i, spec.diagonal_unit(i)));
    idem_labels.push_back("e" + std::to_string(i));
    unit += idems.back();
  }
  auto product = [&](int x, int y) {
    const Slot& u = slots[x];
    const Slot& v = slots[y];
    if (u.j != v.i) return zero_vec<S>(d);
    if (spec.entry_dim(u.i, v.j) == 0) return zero_vec<S>(d);
    const Vec<S> cu = unit_vec<S>(spec.entry_dim(u.i, u.j), u.k);
    const Vec<S> cv = unit_vec<S>(spec.entry_dim(v.i, v.j), v.k);
    return embed(u.i, v.j, spec.product(u.i, u.j, v.j, cu, cv));
  };
  return algebra_from_products<S>(field, std::move(labels), product, unit, idems, idem_labels);
}

/// Lambda = (K_{i-j}), 1 <= i, j <= p.
template <class S>
FinDimAlgebra<S> build_lambda(const QuotientRing<S>& K) {
  BlockSpec<S> spec;
  spec.size = K.p();
  spec.entry_dim = [&](int i, int j) { return K.dim(i - j); };
  spec.product = [&](int i, int j, int k, const Vec<S>& u, const Vec<S>& v) {
    return K.multiply({i - j, u}, {j - k, v}).coords;
  };
  spec.diagonal_unit = [&](int) { return K.one().coords; };
  spec.label = [&](int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")" + K.basis_label(i - j, k);
  };
  auto A = block_algebra<S>(K.ring().field(), spec);
  A.set_seed(K.seed());
  return A;
}

/// Gamma: rows i <= a hold R_{i-j}, rows i > a hold K_{i-j}; 1 <= i, j <= a + p.
template <class S>
FinDimAlgebra<S> build_gamma(const QuotientRing<S>& K) {
  const int a = K.a();
  if (a < 0) throw Error(ErrorKind::NegativeAInvariant, "Gamma needs a >= 0, got a = " + std::to_string(a));
  const GradedRing<S>& R = K.ring();
  BlockSpec<S> spec;
  spec.size = a + K.p();
  spec.entry_dim = [&, a](int i, int j) { return i <= a ? R.dim(i - j) : K.dim(i - j); };
  spec.product = [&, a](int i, int j, int k, const Vec<S>& u, const Vec<S>& v) -> Vec<S> {
    if (i <= a) return R.multiply({i - j, u}, {j - k, v}).coords;
    const KElement<S> ku{i - j, u};
    const KElement<S> kv = j <= a ? K.from_ring({j - k, v}) : KElement<S>{j - k, v};
    return K.multiply(ku, kv).coords;
  };
  spec.diagonal_unit = [&, a](int i) { return i <= a ? R.one().coords : K.one().coords; };
  spec.label = [&, a](int i, int j, int k) {
    const std::string entry = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return entry + (i <= a ? R.monomial_label(R.basis(i - j)[k]) : K.basis_label(i - j, k));
  };
  auto A = block_algebra<S>(R.field(), spec);
  A.set_seed(K.seed());
  return A;
}

/// Basis position of entry (i, j) in a block algebra with the given entry sizes.
inline int block_offset(int size, const std::function<int(int, int)>& entry_dim, int i, int j) {
  int off = 0;
  for (int u = 1; u <= size; ++u)
    for (int v = 1; v <= size; ++v) {
      if (u == i && v == j) return off;
      off += entry_dim(u, v);
    }
  throw Error(ErrorKind::InvalidInput, "block index out of range");
}

/// The element u of R_{i-j}, placed in entry (i, j) of Gamma (through R -> K on rows below a).
template <class S>
Vec<S> gamma_element(const QuotientRing<S>& K, int i, int j, const RingElement<S>& u) {
  const int a = K.a(), size = a + K.p();
  if (u.degree != i - j) throw Error(ErrorKind::InvalidInput, "element degree does not match the entry");
  auto entry_dim = [&](int r, int c) { return r <= a ? K.ring().dim(r - c) : K.dim(r - c); };
  int total = 0;
  for (int r = 1; r <= size; ++r)
    for (int c = 1; c <= size; ++c) total += entry_dim(r, c);
  Vec<S> out = zero_vec<S>(total);
  const Vec<S> coords = i <= a ? u.coords : K.from_ring(u).coords;
  out.segment(block_offset(size, entry_dim, i, j), coords.size()) = coords;
  return out;
}

/// R^a = (R_{i-j}), 1 <= i, j <= a.
template <class S>
FinDimAlgebra<S> build_r_a(const GradedRing<S>& R, int a) {
  if (a < 1) throw Error(ErrorKind::InvalidInput, "R^a needs a >= 1");
  BlockSpec<S> spec;
  spec.size = a;
  spec.entry_dim = [&](int i, int j) { return R.dim(i - j); };
  spec.product = [&](int i, int j, int k, const Vec<S>& u, const Vec<S>& v) {
    return R.multiply({i - j, u}, {j - k, v}).coords;
  };
  spec.diagonal_unit = [&](int) { return R.one().coords; };
  spec.label = [&](int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")" + R.monomial_label(R.basis(i - j)[k]);
  };
  return block_algebra<S>(R.field(), spec);
}

// ---- quivers ---------------------------------------------------------------

struct Quiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based vertices
  std::vector<std::string> names;
};

/// A linear combination of paths; a path lists arrows in traversal order.
struct PathRelation {
  std::vector<std::pair<Rational, std::vector<int>>> terms;
};

namespace detail {

struct Path {
  int source, target;
  std::vector<int> arrows;  // empty for the trivial path at `source`
};

inline std::vector<Path> enumerate_paths(const Quiver& q) {
  std::vector<Path> out;
  for (int v = 0; v < q.vertices; ++v) out.push_back({v, v, {}});
  std::vector<Path> frontier;
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
    frontier.push_back({q.arrows[a].first, q.arrows[a].second, {a}});
  int length = 1;
  while (!frontier.empty()) {
    if (length > q.vertices) throw Error(ErrorKind::InvalidInput, "path algebra needs an acyclic quiver");
    std::vector<Path> next;
    for (const auto& p : frontier) {
      out.push_back(p);
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
        if (q.arrows[a].first == p.target) {
          Path ext = p;
          ext.arrows.push_back(a);
          ext.target = q.arrows[a].second;
          next.push_back(std::move(ext));
        }
    }
    frontier = std::move(next);
    ++length;
  }
  return out;
}

}  // namespace detail

/// kQ / (relations) for acyclic Q.
template <class S>
FinDimAlgebra<S> path_algebra(FieldSpec field, const Quiver& q, const std::vector<PathRelation>& relations = {}) {
  const auto paths = detail::enumerate_paths(q);
  const int np = static_cast<int>(paths.size());
  std::map<std::vector<int>, int> index_of;  // nontrivial paths by arrow list
  for (int k = q.vertices; k < np; ++k) index_of[paths[k].arrows] = k;
  // concat(first, second) as an index, or -1 if not composable.
  auto concat = [&](int first, int second) -> int {
    const auto& f = paths[first];
    const auto& s = paths[second];
    if (f.target != s.source) return -1;
    if (f.arrows.empty()) return second;
    if (s.arrows.empty()) return first;
    std::vector<int> arrows = f.arrows;
    arrows.insert(arrows.end(), s.arrows.begin(), s.arrows.end());
    return index_of.at(arrows);
  };
  // Ideal: span of w rho u for paths w before rho and u after it.
  Subspace<S> ideal(np);
  for (const auto& rel : relations) {
    Vec<S> rho = zero_vec<S>(np);
    for (const auto& [c, arrows] : rel.terms) rho(index_of.at(arrows)) += from_rational<S>(c);
    for (int before = 0; before < np; ++before)
      for (int after = 0; after < np; ++after) {
        Vec<S> v = zero_vec<S>(np);
        bool any = false;
        for (int k = 0; k < np; ++k) {
          if (is_zero(rho(k))) continue;
          const int left = concat(before, k);
          if (left < 0) continue;
          const int full = concat(left, after);
          if (full < 0) continue;
          v(full) += rho(k);
          any = true;
        }
        if (any) ideal.add(v);
      }
  }
  std::vector<bool> pivot(np, false);
  for (Index p : ideal.pivots()) pivot[p] = true;
  std::vector<int> kept, position(np, -1);
  for (int k = 0; k < np; ++k)
    if (!pivot[k]) {
      position[k] = static_cast<int>(kept.size());
      kept.push_back(k);
    }
  const int d = static_cast<int>(kept.size());
  auto project = [&](const Vec<S>& v) {
    const Vec<S> r = ideal.reduce(v);
    Vec<S> out = zero_vec<S>(d);
    for (int k = 0; k < np; ++k)
      if (!is_zero(r(k))) {
        if (position[k] < 0) throw Error(ErrorKind::InternalCheckFailed, "path reduction left a pivot");
        out(position[k]) = r(k);
      }
    return out;
  };
  std::vector<std::string> labels;
  for (int k : kept) {
    const auto& p = paths[k];
    if (p.arrows.empty()) {
      labels.push_back("e" + std::to_string(p.source + 1));
      continue;
    }
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) s += q.names.empty() ? "a" + std::to_string(*it + 1) : q.names[*it];
    labels.push_back(s);
  }
  auto product = [&](int x, int y) {
    // u v = v followed by u
    const int idx = concat(kept[y], kept[x]);
    if (idx < 0) return zero_vec<S>(d);
    return project(unit_vec<S>(np, idx));
  };
  Vec<S> unit = zero_vec<S>(d);
  std::vector<Vec<S>> idems;
  std::vector<std::string> idem_labels;
  for (int v = 0; v < q.vertices; ++v) {
    idems.push_back(unit_vec<S>(d, position[v]));
    idem_labels.push_back("e" + std::to_string(v + 1));
    unit += idems.back();
  }
  return algebra_from_products<S>(field, std::move(labels), product, unit, idems, idem_labels);
}

enum class DynkinType { A, D, E };

/// Dynkin quiver with edges (u, v), u < v, oriented u -> v unless bit k of
/// `flips` reverses edge k.
inline Quiver dynkin_quiver(DynkinType type, int n, unsigned flips = 0) {
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case DynkinType::A:
      if (n < 1) throw Error(ErrorKind::InvalidInput, "A_n needs n >= 1");
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    case DynkinType::D:
      if (n < 4) throw Error(ErrorKind::InvalidInput, "D_n needs n >= 4");
      for (int v = 0; v + 2 < n - 1; ++v) edges.push_back({v, v + 1});
      edges.push_back({n - 3, n - 2});
      edges.push_back({n - 3, n - 1});
      break;
    case DynkinType::E:
      if (n < 6 || n > 8) throw Error(ErrorKind::InvalidInput, "E_n needs 6 <= n <= 8");
      for (int v = 0; v + 1 < n - 1; ++v) edges.push_back({v, v + 1});
      edges.push_back({2, n - 1});
      break;
  }
  Quiver q;
  q.vertices = n;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    if (flips >> k & 1u) std::swap(u, v);
    q.arrows.push_back({u, v});
  }
  return q;
}

/// kQ/(z^2) for the cyclic quiver 0 -> 1 -> ... -> n-1 -> 0; dimension 2n.
template <class S>
FinDimAlgebra<S> build_cyclic_nilpotent(FieldSpec field, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "cyclic quiver needs n >= 1");
  const int d = 2 * n;  // e_0..e_{n-1}, then z_0..z_{n-1} with z_i: i -> i+1
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("z" + std::to_string(i + 1));
  auto source = [&](int b) { return b < n ? b : b - n; };
  auto target = [&](int b) { return b < n ? b : (b - n + 1) % n; };
  auto product = [&](int x, int y) {
    Vec<S> out = zero_vec<S>(d);
    if (x >= n && y >= n) return out;  // z z = 0
    if (source(x) != target(y)) return out;
    out(x < n ? y : x) = S(1);
    return out;
  };
  Vec<S> unit = zero_vec<S>(d);
  std::vector<Vec<S>> idems;
  std::vector<std::string> idem_labels;
  for (int i = 0; i < n; ++i) {
    idems.push_back(unit_vec<S>(d, i));
    idem_labels.push_back("e" + std::to_string(i + 1));
    unit += idems.back();
  }
  return algebra_from_products<S>(field, std::move(labels), product, unit, idems, idem_labels);
}

/// Canonical algebra of type (2,2,2,2): source 0, middle vertices 1..4, sink 5,
/// arrows a_i: 0 -> i and b_i: i -> 5, relations
/// b1a1 + b2a2 + b3a3 = 0 and b1a1 + lambda b2a2 + b4a4 = 0.
template <class S>
FinDimAlgebra<S> build_canonical_2222(FieldSpec field, const Rational& lambda) {
  const S l = from_rational<S>(lambda);
  if (is_zero(l) || l == S(1)) throw Error(ErrorKind::BadLambda, "lambda must avoid 0 and 1");
  Quiver q;
  q.vertices = 6;
  for (int i = 1; i <= 4; ++i) {
    q.arrows.push_back({0, i});
    q.names.push_back("a" + std::to_string(i));
  }
  for (int i = 1; i <= 4; ++i) {
    q.arrows.push_back({i, 5});
    q.names.push_back("b" + std::to_string(i));
  }
  auto ba = [](int i) { return std::vector<int>{i - 1, i + 3}; };  // a_i then b_i
  PathRelation r1{{{Rational(1), ba(1)}, {Rational(1), ba(2)}, {Rational(1), ba(3)}}};
  PathRelation r2{{{Rational(1), ba(1)}, {lambda, ba(2)}, {Rational(1), ba(4)}}};
  return path_algebra<S>(field, q, {r1, r2});
}

}  // namespace cmtilt

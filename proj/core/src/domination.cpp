#include "graphreg/domination.hpp"

#include <algorithm>
#include <numeric>

#include "graphreg/enumerate.hpp"

namespace graphreg {

namespace {

struct DominationSearch {
  const GraphType& t1;
  const GraphType& t2;
  std::vector<int> order;  // non-base vertices of theta2, constrained first
  std::vector<int> g;      // vertex map theta2 -> theta1
  Bits128 covered;
  int covered_count = 0;

  DominationSearch(const GraphType& a, const GraphType& b) : t1(a), t2(b) {
    Bits128 base2 = t2.base_mask();
    std::vector<int> rest;
    for (int v = 0; v < t2.order_n(); ++v)
      if (!base2.test(v)) rest.push_back(v);
    // most placed-neighbors-first static order
    std::vector<bool> placed(t2.order_n(), false);
    for (int v : t2.base) placed[v] = true;
    while (!rest.empty()) {
      size_t best = 0;
      int best_links = -1;
      for (size_t i = 0; i < rest.size(); ++i) {
        int links = 0;
        for (int u = 0; u < t2.order_n(); ++u)
          if (placed[u] && t2.theta.has_edge(u, rest[i])) ++links;
        if (links > best_links) {
          best_links = links;
          best = i;
        }
      }
      order.push_back(rest[best]);
      placed[rest[best]] = true;
      rest.erase(rest.begin() + best);
    }
    g.assign(t2.order_n(), -1);
  }

  void cover(int w) {
    if (!covered.test(w)) {
      covered.set(w);
      ++covered_count;
    }
  }

  bool search(size_t depth) {
    int remaining = static_cast<int>(order.size() - depth);
    if (t1.order_n() - covered_count > remaining) return false;  // surjectivity
    if (depth == order.size()) return covered_count == t1.order_n();
    int v = order[depth];
    for (int w = 0; w < t1.order_n(); ++w) {
      bool ok = true;
      for (int u = 0; u < t2.order_n() && ok; ++u) {
        if (g[u] < 0 || !t2.theta.has_edge(u, v)) continue;
        if (!t1.theta.has_edge(g[u], w)) ok = false;  // merging adjacent included
      }
      if (!ok) continue;
      Bits128 saved = covered;
      int saved_count = covered_count;
      g[v] = w;
      cover(w);
      if (search(depth + 1)) return true;
      g[v] = -1;
      covered = saved;
      covered_count = saved_count;
    }
    return false;
  }
};

}  // namespace

std::optional<TypeMorphismWitness> dominates(const GraphType& t1,
                                             const GraphType& t2) {
  t1.validate();
  t2.validate();
  int m = t1.base_size();
  if (t2.base_size() != m) return std::nullopt;
  if (t2.order_n() < t1.order_n()) return std::nullopt;

  Graph d1 = t1.base_graph();
  Graph d2 = t2.base_graph();
  std::vector<int> f(m);
  std::iota(f.begin(), f.end(), 0);
  do {
    // f must be an isomorphism from the base of t2 to the base of t1
    bool iso = true;
    for (int i = 0; i < m && iso; ++i)
      for (int j = i + 1; j < m && iso; ++j)
        if (d2.has_edge(i, j) != d1.has_edge(f[i], f[j])) iso = false;
    if (!iso) continue;

    DominationSearch s(t1, t2);
    for (int i = 0; i < m; ++i) {
      s.g[t2.base[i]] = t1.base[f[i]];
      s.cover(t1.base[f[i]]);
    }
    if (s.search(0)) {
      TypeMorphismWitness w;
      w.base_map = f;
      w.vertex_map = s.g;
      w.strict = !types_isomorphic(t1, t2);
      return w;
    }
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

TypeTransversal dominated_transversal(const GraphType& t) {
  t.validate();
  TypeTransversal out;
  out.m = t.base_size();
  out.n = t.order_n();
  out.filters = {"dominated-by-input"};
  for (int l = out.m; l <= out.n; ++l) {
    const TypeTransversal& pool = all_types_cached(out.m, l);
    for (const GraphType& cand : pool.members)
      if (dominates(cand, t)) out.members.push_back(cand);
  }
  return out;
}

}  // namespace graphreg

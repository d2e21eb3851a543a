#include "graphreg/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "graphreg/connectivity.hpp"
#include "graphreg/irreducible.hpp"
#include "graphreg/subgraph.hpp"

namespace graphreg {

namespace {

std::string marked_key(const Graph& g, int v) {
  std::vector<int> colors(g.order(), 0);
  colors[v] = 1;
  return canonical_form(g, colors).key;
}

Graph extend(const Graph& parent, unsigned nbhd) {
  Graph child(parent.order() + 1);
  for (auto [u, v] : edges_of(parent)) child.add_edge(u, v);
  for (int u = 0; u < parent.order(); ++u)
    if ((nbhd >> u) & 1) child.add_edge(u, parent.order());
  return child;
}

}  // namespace

namespace {

// All accepted children of one parent.
std::vector<Graph> augment_parent(const Graph& parent,
                                  const GraphPredicate& hereditary_prune) {
  int k = parent.order();
  std::vector<Graph> children;
  std::set<std::string> nbhd_seen;
  for (unsigned nbhd = 0; nbhd < (1u << k); ++nbhd) {
    std::vector<int> colors(k, 0);
    for (int u = 0; u < k; ++u)
      if ((nbhd >> u) & 1) colors[u] = 1;
    if (!nbhd_seen.insert(canonical_form(parent, colors).key).second) continue;
    Graph child = extend(parent, nbhd);
    if (hereditary_prune && !hereditary_prune(child)) continue;
    auto lab = canonical_labeling(child);
    int canonical_last = -1;
    for (int v = 0; v <= k; ++v)
      if (lab.position_of[v] == k) canonical_last = v;
    if (canonical_last != k &&
        marked_key(child, k) != marked_key(child, canonical_last))
      continue;
    children.push_back(std::move(child));
  }
  return children;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const GraphPredicate& filter,
                                    const GraphPredicate& hereditary_prune,
                                    int threads) {
  if (n < 0 || n > max_enumeration_order)
    throw std::invalid_argument("enumerate_graphs supports 0 <= n <= " +
                                std::to_string(max_enumeration_order));
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  std::vector<Graph> level;
  {
    Graph seed(std::min(n, 1));
    if (!hereditary_prune || hereditary_prune(seed)) level.push_back(seed);
  }
  for (int k = 1; k < n; ++k) {
    // subtree per parent, merged in parent order
    std::vector<std::vector<Graph>> per_parent(level.size());
    int workers = std::min<std::size_t>(threads, level.size());
    if (workers <= 1) {
      for (size_t i = 0; i < level.size(); ++i)
        per_parent[i] = augment_parent(level[i], hereditary_prune);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (size_t i = w; i < level.size(); i += workers)
            per_parent[i] = augment_parent(level[i], hereditary_prune);
        });
      for (auto& th : pool) th.join();
    }
    std::vector<Graph> next;
    for (auto& children : per_parent)
      for (auto& child : children) next.push_back(std::move(child));
    level = std::move(next);
  }

  std::vector<std::pair<std::string, Graph>> keyed;
  for (const Graph& g : level) {
    if (filter && !filter(g)) continue;
    auto lab = canonical_labeling(g);
    keyed.emplace_back(lab.form.key, apply_labeling(g, lab.position_of));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  std::string prev_key;
  for (auto& [key, g] : keyed) {
    // the accept rule makes duplicates impossible; dedup at the merge anyway
    if (!out.empty() && key == prev_key) continue;
    prev_key = key;
    out.push_back(std::move(g));
  }
  return out;
}

TypeTransversal enumerate_types(int m, int n, const GraphPredicate& theta_filter,
                                const TypePredicate& type_filter,
                                std::vector<std::string> filter_names,
                                bool hereditary_theta, int threads) {
  if (m < 0 || m > n)
    throw std::invalid_argument("enumerate_types needs 0 <= m <= n");
  if (n > max_enumeration_order)
    throw std::invalid_argument("enumerate_types supports n <= " +
                                std::to_string(max_enumeration_order));
  TypeTransversal out;
  out.m = m;
  out.n = n;
  out.filters = std::move(filter_names);

  std::vector<Graph> graphs = enumerate_graphs(
      n, theta_filter, hereditary_theta ? theta_filter : GraphPredicate{}, threads);

  std::map<std::string, std::optional<GraphType>> classes;
  std::vector<int> subset(m);
  for (const Graph& theta : graphs) {
    // all m-subsets as base sets
    std::function<void(int, int)> rec = [&](int idx, int first) {
      if (idx == m) {
        GraphType t(theta, subset);
        std::string key = type_canonical_form(t).key;
        if (classes.contains(key)) return;
        GraphType rep = canonical_type(t);
        if (type_filter && !type_filter(rep))
          classes.emplace(key, std::nullopt);
        else
          classes.emplace(key, std::move(rep));
        return;
      }
      for (int v = first; v <= n - (m - idx); ++v) {
        subset[idx] = v;
        rec(idx + 1, v + 1);
      }
    };
    rec(0, 0);
  }
  for (auto& [key, rep] : classes)
    if (rep) out.members.push_back(std::move(*rep));
  return out;
}

TypeTransversal irreducible_k4e_free_types(int l) {
  const Graph k4e = k4_minus_edge();
  GraphPredicate k4e_free = [k4e](const Graph& g) {
    return !contains_induced(g, k4e);
  };
  TypePredicate irr = [l](const GraphType& t) {
    return is_mn_irreducible(t, 3, l);
  };
  return enumerate_types(3, l, k4e_free, irr,
                         {"theta-k4e-free", "(3," + std::to_string(l) + ")-irreducible"},
                         /*hereditary_theta=*/true);
}

TypeTransversal reduced_tvc_list(int t) {
  if (t < 1 || t + 1 > 7)
    throw std::invalid_argument("reduced_tvc_list supports 1 <= t <= 6");
  TypePredicate cl3 = [](const GraphType& ty) {
    return is_k_connected(closure_cl(ty), 3);
  };
  return enumerate_types(2, t + 1, {}, cl3, {"cl-3-connected"});
}

namespace {

std::mutex cache_mutex;

}  // namespace

const TypeTransversal& all_types_cached(int m, int n) {
  static std::map<std::pair<int, int>, TypeTransversal> cache;
  std::lock_guard lock(cache_mutex);
  auto it = cache.find({m, n});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(m, n), enumerate_types(m, n)).first;
  return it->second;
}

const TypeTransversal& irreducible_level_types_cached(int m, int n) {
  static std::map<std::pair<int, int>, TypeTransversal> cache;
  std::lock_guard lock(cache_mutex);
  auto it = cache.find({m, n});
  if (it == cache.end()) {
    TypePredicate irr = [m](const GraphType& t) {
      return is_level_irreducible(t, m);
    };
    it = cache
             .emplace(std::make_pair(m, n),
                      enumerate_types(m, n, {}, irr, {"level-irreducible"}))
             .first;
  }
  return it->second;
}

}  // namespace graphreg

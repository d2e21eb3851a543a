#include "graphreg/counting.hpp"

#include <stdexcept>

namespace graphreg {

namespace {

// Static placement order for the non-base vertices: most already-placed
// neighbors first, ties by vertex id. Every earlier vertex contributes an
// adjacency or a non-adjacency constraint, so injectivity is implied.
struct ExtensionPlan {
  std::vector<int> order;  // theta ids of non-base vertices
  // per placement step: (slot, is_edge); slot < m refers to base position,
  // slot >= m refers to order[slot - m]
  std::vector<std::vector<std::pair<int, bool>>> constraints;
  int m;

  explicit ExtensionPlan(const GraphType& t) : m(t.base_size()) {
    int n = t.order_n();
    Bits128 base = t.base_mask();
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!base.test(v)) rest.push_back(v);
    std::vector<bool> placed(n, false);
    for (int v : t.base) placed[v] = true;
    while (!rest.empty()) {
      size_t best = 0;
      int best_links = -1;
      for (size_t i = 0; i < rest.size(); ++i) {
        int links = 0;
        for (int u = 0; u < n; ++u)
          if (placed[u] && t.theta.has_edge(u, rest[i])) ++links;
        if (links > best_links) {
          best_links = links;
          best = i;
        }
      }
      order.push_back(rest[best]);
      placed[rest[best]] = true;
      rest.erase(rest.begin() + best);
    }
    constraints.resize(order.size());
    for (size_t step = 0; step < order.size(); ++step) {
      int v = order[step];
      for (int i = 0; i < m; ++i)
        constraints[step].emplace_back(i, t.theta.has_edge(t.base[i], v));
      for (size_t j = 0; j < step; ++j)
        constraints[step].emplace_back(m + static_cast<int>(j),
                                       t.theta.has_edge(order[j], v));
    }
  }
};

struct ExtensionRun {
  const Graph& gamma;
  const ExtensionPlan& plan;
  std::vector<int> slot_image;  // base images then placed images
  Bits128 full;

  ExtensionRun(const Graph& g, const ExtensionPlan& p, std::span<const int> kappa)
      : gamma(g), plan(p) {
    slot_image.assign(plan.m + plan.order.size(), -1);
    for (int i = 0; i < plan.m; ++i) slot_image[i] = kappa[i];
    full = g.vertex_mask();
  }

  Bits128 candidates(size_t step) const {
    Bits128 cand = full;
    for (auto [slot, is_edge] : plan.constraints[step]) {
      int img = slot_image[slot];
      if (is_edge) {
        cand &= gamma.row(img);
      } else {
        cand = cand.minus(gamma.row(img));
        cand.reset(img);
      }
    }
    return cand;
  }

  std::uint64_t count(size_t step) {
    if (step == plan.order.size()) return 1;
    Bits128 cand = candidates(step);
    if (step + 1 == plan.order.size()) return cand.count();
    std::uint64_t total = 0;
    cand.for_each([&](int w) {
      slot_image[plan.m + step] = w;
      total += count(step + 1);
    });
    slot_image[plan.m + step] = -1;
    return total;
  }

  void enumerate(size_t step, std::vector<int>& image,
                 const std::function<void(std::span<const int>)>& fn) {
    if (step == plan.order.size()) {
      fn(image);
      return;
    }
    Bits128 cand = candidates(step);
    cand.for_each([&](int w) {
      slot_image[plan.m + step] = w;
      image[plan.order[step]] = w;
      enumerate(step + 1, image, fn);
    });
    slot_image[plan.m + step] = -1;
    image[plan.order[step]] = -1;
  }
};

void check_kappa(const Graph& gamma, const GraphType& t,
                 std::span<const int> kappa) {
  if (!is_base_embedding(gamma, t, kappa))
    throw std::invalid_argument("kappa is not an embedding of the base graph");
}

}  // namespace

std::uint64_t count_extensions(const Graph& gamma, const GraphType& t,
                               std::span<const int> kappa) {
  check_kappa(gamma, t, kappa);
  ExtensionPlan plan(t);
  ExtensionRun run(gamma, plan, kappa);
  return run.count(0);
}

void for_each_extension(const Graph& gamma, const GraphType& t,
                        std::span<const int> kappa,
                        const std::function<void(std::span<const int>)>& fn) {
  check_kappa(gamma, t, kappa);
  ExtensionPlan plan(t);
  ExtensionRun run(gamma, plan, kappa);
  std::vector<int> image(t.order_n(), -1);
  for (int i = 0; i < t.base_size(); ++i) image[t.base[i]] = kappa[i];
  run.enumerate(0, image, fn);
}

std::vector<std::vector<int>> base_embeddings(const Graph& gamma,
                                              const GraphType& t) {
  const Graph delta = t.base_graph();
  int m = delta.order();
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(m, -1);
  Bits128 used;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == m) {
      out.push_back(tuple);
      return;
    }
    Bits128 cand = gamma.vertex_mask().minus(used);
    for (int i = 0; i < pos; ++i) {
      if (delta.has_edge(i, pos))
        cand &= gamma.row(tuple[i]);
      else
        cand = cand.minus(gamma.row(tuple[i]));
    }
    cand.for_each([&](int w) {
      tuple[pos] = w;
      used.set(w);
      rec(pos + 1);
      used.reset(w);
    });
    tuple[pos] = -1;
  };
  rec(0);
  return out;
}

std::uint64_t count_embeddings(const Graph& gamma, const Graph& pattern) {
  GraphType whole;
  whole.theta = pattern;
  whole.base = {};
  ExtensionPlan plan(whole);
  ExtensionRun run(gamma, plan, {});
  return run.count(0);
}

std::uint64_t quotient_cocone_count(const Graph& gamma, const GraphType& t1,
                                    const GraphType& t2, std::span<const int> e,
                                    std::span<const int> kappa) {
  if (!is_base_embedding(t1.theta, t2, e))
    throw std::invalid_argument("e is not an embedding of the base of t2");
  check_kappa(gamma, t1, kappa);
  std::uint64_t total = 0;
  for_each_extension(gamma, t1, kappa, [&](std::span<const int> mu1) {
    std::vector<int> kappa2(t2.base_size());
    for (int i = 0; i < t2.base_size(); ++i) kappa2[i] = mu1[e[i]];
    total += count_extensions(gamma, t2, kappa2);
  });
  return total;
}

GraphType complement_type(const GraphType& t) {
  GraphType c;
  c.theta = t.theta.complement();
  c.base = t.base;
  return c;
}

}  // namespace graphreg

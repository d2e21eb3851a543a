#include "graphreg/irreducible.hpp"

#include <stdexcept>
#include <vector>

#include "graphreg/connectivity.hpp"

namespace graphreg {

namespace {

// Components of theta - removed, as masks.
std::vector<Bits128> components_without(const Graph& g, Bits128 removed) {
  std::vector<Bits128> comps;
  Bits128 alive = g.vertex_mask().minus(removed);
  while (alive.any()) {
    Bits128 frontier = Bits128::single(alive.lowest());
    Bits128 seen = frontier;
    while (frontier.any()) {
      Bits128 next;
      frontier.for_each([&](int v) { next |= g.row(v); });
      next &= alive;
      next = next.minus(seen);
      seen |= next;
      frontier = next;
    }
    comps.push_back(seen);
    alive = alive.minus(seen);
  }
  return comps;
}

// A valid split needs M2 = a base-free component of theta - M3 (so that no
// edges run between M1 and M2) with |M2 u M3| <= n. The summand t2 equals t
// itself exactly when M1 is empty and M3 is the base, which is excluded;
// t1 is always smaller than t because M2 is nonempty.
bool reducible_with_glue_set(const GraphType& t, Bits128 m3, int n) {
  Bits128 base = t.base_mask();
  auto comps = components_without(t.theta, m3);
  int total_alive = t.order_n() - m3.count();
  for (const Bits128& comp : comps) {
    if ((comp & base).any()) continue;
    if (m3.count() + comp.count() > n) continue;
    bool m1_empty = comp.count() == total_alive;
    if (m1_empty && m3 == base) continue;
    return true;
  }
  return false;
}

bool search_glue_sets(const GraphType& t, int m, int n, Bits128 chosen,
                      int first, int left) {
  if (reducible_with_glue_set(t, chosen, n)) return true;
  if (left == 0) return false;
  for (int v = first; v <= t.order_n() - left; ++v) {
    Bits128 c = chosen;
    c.set(v);
    if (search_glue_sets(t, m, n, c, v + 1, left - 1)) return true;
  }
  return false;
}

}  // namespace

bool is_mn_reducible(const GraphType& t, int m, int n) {
  t.validate();
  if (t.base_size() > m)
    throw std::invalid_argument("is_mn_reducible: base larger than m");
  int max_glue = std::min(m, t.order_n());
  return search_glue_sets(t, m, n, Bits128{}, 0, max_glue);
}

bool is_mn_irreducible_via_connectivity(const GraphType& t, int m, int n) {
  if (t.base_size() != m)
    throw std::invalid_argument(
        "connectivity route needs base size exactly m");
  if (t.order_n() < m + 2 || t.order_n() > n)
    throw std::invalid_argument("connectivity route needs m+2 <= |theta| <= n");
  return is_k_connected(closure_cl(t), m + 1);
}

bool is_level_irreducible(const GraphType& t, int m) {
  int l = t.order_n();
  if (t.base_size() == m && l >= m + 2)
    return is_mn_irreducible_via_connectivity(t, m, l);
  return is_mn_irreducible(t, m, l);
}

}  // namespace graphreg

#include "graphreg/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphreg {

namespace {

using Cells = std::vector<std::vector<int>>;

// Splits every cell by neighbor counts into the splitter cells until the
// partition is equitable. Splitting decisions depend only on invariants, so
// the refined partition is stable under isomorphism.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Bits128> splitters;
    splitters.reserve(cells.size());
    for (const auto& c : cells) {
      Bits128 m;
      for (int v : c) m.set(v);
      splitters.push_back(m);
    }
    for (const Bits128& s : splitters) {
      for (size_t ci = 0; ci < cells.size(); ++ci) {
        if (cells[ci].size() <= 1) continue;
        auto& cell = cells[ci];
        int d0 = (g.row(cell[0]) & s).count();
        bool uniform = true;
        for (int v : cell) {
          if ((g.row(v) & s).count() != d0) {
            uniform = false;
            break;
          }
        }
        if (uniform) continue;
        // group by degree to the splitter, ascending
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back((g.row(v) & s).count(), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Cells groups;
        for (const auto& [d, v] : keyed) {
          if (groups.empty() || (g.row(groups.back()[0]) & s).count() != d)
            groups.emplace_back();
          groups.back().push_back(v);
        }
        cells.erase(cells.begin() + ci);
        cells.insert(cells.begin() + ci, groups.begin(), groups.end());
        changed = true;
      }
      if (changed) break;  // splitter masks are stale, recompute
    }
  }
}

struct Searcher {
  const Graph& g;
  int n;
  std::vector<uint8_t> best_bits;  // adjacency bits in canonical order
  std::vector<int> best_perm;      // position -> vertex
  bool have_best = false;

  explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) {}

  // Adjacency bits of the first p (fixed) positions, row by row.
  // Returns true when the node can still reach a key <= best.
  bool prefix_viable(const std::vector<int>& fixed) const {
    if (!have_best) return true;
    size_t bit = 0;
    int p = static_cast<int>(fixed.size());
    for (int j = 1; j < p; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        uint8_t b = g.has_edge(fixed[i], fixed[j]) ? 1 : 0;
        if (b != best_bits[bit]) return b < best_bits[bit];
      }
    }
    return true;
  }

  void leaf(const std::vector<int>& perm) {
    std::vector<uint8_t> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        bits.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
    if (!have_best || bits < best_bits) {
      best_bits = std::move(bits);
      best_perm = perm;
      have_best = true;
    }
  }

  void search(Cells cells) {
    refine(g, cells);

    std::vector<int> fixed;
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() == 1 && target == cells.size())
        fixed.push_back(cells[i][0]);
      else if (target == cells.size())
        target = i;
    }
    if (!prefix_viable(fixed)) return;

    if (target == cells.size()) {
      leaf(fixed);
      return;
    }
    // branch on the first smallest non-singleton cell
    size_t best_cell = target;
    for (size_t i = target + 1; i < cells.size(); ++i)
      if (cells[i].size() > 1 && cells[i].size() < cells[best_cell].size())
        best_cell = i;
    const std::vector<int> branch = cells[best_cell];
    for (int v : branch) {
      Cells child = cells;
      std::vector<int> rest;
      rest.reserve(branch.size() - 1);
      for (int u : branch)
        if (u != v) rest.push_back(u);
      child[best_cell] = {v};
      child.insert(child.begin() + best_cell + 1, rest);
      search(std::move(child));
    }
  }
};

Cells initial_cells(const Graph& g, std::span<const int> coloring,
                    std::vector<int>& cell_colors) {
  int n = g.order();
  if (!coloring.empty() && static_cast<int>(coloring.size()) != n)
    throw std::invalid_argument("coloring size must match graph order");
  std::vector<int> colors(n, 0);
  if (!coloring.empty()) colors.assign(coloring.begin(), coloring.end());
  for (int c : colors)
    if (c < 0 || c > 255) throw std::invalid_argument("colors must be in 0..255");
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return colors[a] < colors[b]; });
  Cells cells;
  for (int v : order) {
    if (cells.empty() || colors[cells.back()[0]] != colors[v]) {
      cells.emplace_back();
      cell_colors.push_back(colors[v]);
    }
    cells.back().push_back(v);
  }
  return cells;
}

// Key layout: n, number of color cells, per cell its color value and size,
// then the packed upper-triangle adjacency of the canonical labeling.
std::string assemble_key(int n, const Cells& initial,
                         const std::vector<int>& cell_colors,
                         const std::vector<uint8_t>& bits) {
  std::string key;
  key.push_back(static_cast<char>(n));
  key.push_back(static_cast<char>(initial.size()));
  for (size_t i = 0; i < initial.size(); ++i) {
    key.push_back(static_cast<char>(cell_colors[i]));
    key.push_back(static_cast<char>(initial[i].size()));
  }
  unsigned acc = 0;
  int nb = 0;
  for (uint8_t b : bits) {
    acc = (acc << 1) | b;
    if (++nb == 8) {
      key.push_back(static_cast<char>(acc));
      acc = 0;
      nb = 0;
    }
  }
  if (nb) key.push_back(static_cast<char>(acc << (8 - nb)));
  return key;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g,
                                     std::span<const int> coloring) {
  std::vector<int> cell_colors;
  Cells init = initial_cells(g, coloring, cell_colors);
  Searcher s(g);
  if (g.order() == 0) {
    s.have_best = true;
  } else {
    s.search(init);
  }
  CanonicalLabeling out;
  out.form.key = assemble_key(g.order(), init, cell_colors, s.best_bits);
  out.position_of.assign(g.order(), -1);
  for (int pos = 0; pos < static_cast<int>(s.best_perm.size()); ++pos)
    out.position_of[s.best_perm[pos]] = pos;
  return out;
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> coloring) {
  return canonical_labeling(g, coloring).form;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

Graph apply_labeling(const Graph& g, std::span<const int> position_of) {
  Graph h(g.order());
  for (auto [u, v] : edges_of(g)) h.add_edge(position_of[u], position_of[v]);
  return h;
}

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(key.size() * 2);
  for (unsigned char c : key) {
    s.push_back(digits[c >> 4]);
    s.push_back(digits[c & 15]);
  }
  return s;
}

}  // namespace graphreg

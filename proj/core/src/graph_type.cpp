#include "graphreg/graph_type.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "graphreg/graph_io.hpp"

namespace graphreg {

GraphType::GraphType(Graph th, std::vector<int> b)
    : theta(std::move(th)), base(std::move(b)) {
  validate();
}

void GraphType::validate() const {
  Bits128 seen;
  for (int v : base) {
    if (v < 0 || v >= theta.order())
      throw std::out_of_range("base vertex out of range");
    if (seen.test(v)) throw std::invalid_argument("repeated base vertex");
    seen.set(v);
  }
}

namespace {

std::vector<int> base_coloring(const GraphType& t) {
  std::vector<int> colors(t.theta.order(), 1);
  for (int v : t.base) colors[v] = 0;
  return colors;
}

}  // namespace

CanonicalForm type_canonical_form(const GraphType& t) {
  return canonical_form(t.theta, base_coloring(t));
}

GraphType canonical_type(const GraphType& t) {
  auto lab = canonical_labeling(t.theta, base_coloring(t));
  GraphType out;
  out.theta = apply_labeling(t.theta, lab.position_of);
  out.base.resize(t.base_size());
  for (int i = 0; i < t.base_size(); ++i) out.base[i] = i;
  return out;
}

bool types_isomorphic(const GraphType& a, const GraphType& b) {
  return type_canonical_form(a) == type_canonical_form(b);
}

Graph closure_cl(const GraphType& t) {
  Graph g = t.theta;
  for (size_t i = 0; i < t.base.size(); ++i)
    for (size_t j = i + 1; j < t.base.size(); ++j)
      if (!g.has_edge(t.base[i], t.base[j])) g.add_edge(t.base[i], t.base[j]);
  return g;
}

bool is_base_embedding(const Graph& g, const GraphType& t,
                       std::span<const int> map) {
  if (static_cast<int>(map.size()) != t.base_size()) return false;
  for (size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 0 || map[i] >= g.order()) return false;
    for (size_t j = i + 1; j < map.size(); ++j) {
      if (map[i] == map[j]) return false;
      bool want = t.theta.has_edge(t.base[i], t.base[j]);
      if (g.has_edge(map[i], map[j]) != want) return false;
    }
  }
  return true;
}

GraphType free_sum(const GraphType& t1, const GraphType& t2,
                   std::span<const int> e) {
  t1.validate();
  t2.validate();
  if (!is_base_embedding(t1.theta, t2, e))
    throw std::invalid_argument("free_sum: e is not an embedding of the base of t2");

  int n1 = t1.order_n();
  int m2 = t2.base_size();
  int fresh = t2.order_n() - m2;

  // map t2's vertices into the glued graph
  std::vector<int> to_glued(t2.order_n(), -1);
  for (int i = 0; i < m2; ++i) to_glued[t2.base[i]] = e[i];
  int next = n1;
  for (int v = 0; v < t2.order_n(); ++v)
    if (to_glued[v] == -1) to_glued[v] = next++;

  Graph glued(n1 + fresh);
  for (auto [u, v] : edges_of(t1.theta)) glued.add_edge(u, v);
  for (auto [u, v] : edges_of(t2.theta)) {
    int a = to_glued[u], b = to_glued[v];
    if (!glued.has_edge(a, b)) glued.add_edge(a, b);
  }
  return GraphType(std::move(glued), t1.base);
}

std::string type_to_text(const GraphType& t) {
  std::ostringstream os;
  os << to_graph6(t.theta) << ' ';
  for (size_t i = 0; i < t.base.size(); ++i) {
    if (i) os << ',';
    os << t.base[i];
  }
  if (t.base.empty()) os << '-';
  return os.str();
}

GraphType type_from_text(const std::string& line) {
  std::istringstream is(line);
  std::string g6, ids;
  if (!(is >> g6 >> ids))
    throw std::invalid_argument("type text must be '<graph6> <base ids>'");
  GraphType t;
  t.theta = from_graph6(g6);
  if (ids != "-") {
    std::istringstream ids_in(ids);
    std::string tok;
    while (std::getline(ids_in, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("bad base id list");
      t.base.push_back(std::stoi(tok));
    }
  }
  t.validate();
  return t;
}

}  // namespace graphreg

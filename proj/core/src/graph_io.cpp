#include "graphreg/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace graphreg {

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62)
    throw std::invalid_argument("graph6 short form only supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  unsigned char h = static_cast<unsigned char>(s[0]);
  if (h == 126)
    throw std::invalid_argument("graph6 long form (n > 62) not supported");
  if (h < 63 || h > 125) throw std::invalid_argument("bad graph6 header byte");
  int n = h - 63;
  Graph g(n);
  size_t pos = 1;
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        if (pos >= s.size())
          throw std::invalid_argument("graph6 string too short");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
          throw std::invalid_argument("bad graph6 data byte");
        acc = c - 63;
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
      --nbits;
    }
  }
  if (pos != s.size()) throw std::invalid_argument("trailing graph6 bytes");
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  auto e = edges_of(g);
  os << g.order() << ' ' << e.size() << '\n';
  for (auto [u, v] : e) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header");
  if (n < 0 || n > Graph::max_vertices || m < 0)
    throw std::invalid_argument("edge list: bad header");
  Graph g(static_cast<int>(n));
  for (long long k = 0; k < m; ++k) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: truncated edge lines");
    g.add_edge(u, v);
  }
  return g;
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list(in);
}

}  // namespace graphreg

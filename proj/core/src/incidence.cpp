#include "graphreg/incidence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "graphreg/cliques.hpp"

namespace graphreg {

void IncidenceStructure::normalize() {
  std::set<std::vector<int>> seen;
  for (auto& line : lines) {
    if (line.empty()) throw std::invalid_argument("empty line");
    std::sort(line.begin(), line.end());
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] < 0 || line[i] >= num_points)
        throw std::out_of_range("line point out of range");
      if (i && line[i] == line[i - 1])
        throw std::invalid_argument("repeated point on a line");
    }
    if (!seen.insert(line).second)
      throw std::invalid_argument("repeated line");
  }
  std::sort(lines.begin(), lines.end());
  collinearity.assign(static_cast<size_t>(num_points) * num_points, 0);
  for (const auto& line : lines)
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j) {
        collinearity[static_cast<size_t>(line[i]) * num_points + line[j]] = 1;
        collinearity[static_cast<size_t>(line[j]) * num_points + line[i]] = 1;
      }
}

bool IncidenceStructure::collinear(int p, int q) const {
  return collinearity[static_cast<size_t>(p) * num_points + q] != 0;
}

long long IncidenceStructure::flag_count() const {
  long long f = 0;
  for (const auto& line : lines) f += static_cast<long long>(line.size());
  return f;
}

AxiomsReport axioms_report(const IncidenceStructure& inc) {
  AxiomsReport rep;
  const int n = inc.num_points;

  // PLS1: constant line size s+1
  if (inc.lines.empty()) {
    rep.pls_violation = "no lines";
    return rep;
  }
  size_t line_size = inc.lines[0].size();
  for (const auto& line : inc.lines)
    if (line.size() != line_size) {
      rep.pls_violation = "line sizes differ";
      return rep;
    }
  // PLS2: constant point degree t+1
  std::vector<int> deg(n, 0);
  for (const auto& line : inc.lines)
    for (int p : line) ++deg[p];
  for (int p = 0; p < n; ++p)
    if (deg[p] != deg[0]) {
      rep.pls_violation = "points lie on different numbers of lines";
      return rep;
    }
  if (deg[0] == 0) {
    rep.pls_violation = "isolated points";
    return rep;
  }
  // PLS3: two points on at most one line
  std::set<std::pair<int, int>> joined;
  for (const auto& line : inc.lines)
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j)
        if (!joined.insert({line[i], line[j]}).second) {
          rep.pls_violation = "points " + std::to_string(line[i]) + "," +
                              std::to_string(line[j]) + " on two lines";
          return rep;
        }
  rep.pls = true;
  rep.s = static_cast<int>(line_size) - 1;
  rep.t = deg[0] - 1;

  // GQ: for every anti-flag (P,l) exactly one point of l collinear with P
  rep.gq = true;
  for (const auto& line : inc.lines) {
    for (int p = 0; p < n && rep.gq; ++p) {
      if (std::binary_search(line.begin(), line.end(), p)) continue;
      int hits = 0;
      for (int q : line)
        if (inc.collinear(p, q)) ++hits;
      if (hits != 1) {
        rep.gq = false;
        rep.gq_violation = "anti-flag with " + std::to_string(hits) +
                           " collinear line points (point " + std::to_string(p) + ")";
      }
    }
    if (!rep.gq) break;
  }

  // PQ1: pairwise collinear triples lie on one line
  rep.pq = true;
  for (int a = 0; a < n && rep.pq; ++a)
    for (int b = a + 1; b < n && rep.pq; ++b) {
      if (!inc.collinear(a, b)) continue;
      for (int c = b + 1; c < n && rep.pq; ++c) {
        if (!inc.collinear(a, c) || !inc.collinear(b, c)) continue;
        bool on_one_line = false;
        for (const auto& line : inc.lines) {
          if (std::binary_search(line.begin(), line.end(), a) &&
              std::binary_search(line.begin(), line.end(), b) &&
              std::binary_search(line.begin(), line.end(), c)) {
            on_one_line = true;
            break;
          }
        }
        if (!on_one_line) {
          rep.pq = false;
          rep.pq_violation = "triangle " + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) +
                             " not on a line";
        }
      }
    }
  // PQ2: constant mu over non-collinear pairs
  if (rep.pq) {
    long long mu = -1;
    for (int a = 0; a < n && rep.pq; ++a)
      for (int b = a + 1; b < n && rep.pq; ++b) {
        if (inc.collinear(a, b)) continue;
        long long c = 0;
        for (int x = 0; x < n; ++x)
          if (x != a && x != b && inc.collinear(a, x) && inc.collinear(b, x)) ++c;
        if (mu < 0)
          mu = c;
        else if (mu != c) {
          rep.pq = false;
          rep.pq_violation = "mu not constant (" + std::to_string(mu) + " vs " +
                             std::to_string(c) + ")";
        }
      }
    if (rep.pq) rep.mu = std::max(mu, 0LL);
  }
  return rep;
}

Graph point_graph(const IncidenceStructure& inc) {
  if (inc.num_points > Graph::max_vertices)
    throw std::out_of_range("point graph would exceed the vertex cap");
  Graph g(inc.num_points);
  for (const auto& line : inc.lines)
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j)
        if (!g.has_edge(line[i], line[j])) g.add_edge(line[i], line[j]);
  return g;
}

IncidenceStructure lines_from_point_graph(const Graph& g) {
  IncidenceStructure inc;
  inc.num_points = g.order();
  inc.lines = maximal_cliques(g);
  inc.normalize();
  return inc;
}

std::map<long long, long long> triad_center_distribution(
    const IncidenceStructure& inc) {
  std::map<long long, long long> hist;
  const int n = inc.num_points;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (inc.collinear(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (inc.collinear(a, c) || inc.collinear(b, c)) continue;
        long long centers = 0;
        for (int x = 0; x < n; ++x)
          if (x != a && x != b && x != c && inc.collinear(a, x) &&
              inc.collinear(b, x) && inc.collinear(c, x))
            ++centers;
        ++hist[centers];
      }
    }
  return hist;
}

std::string incidence_to_text(const IncidenceStructure& inc) {
  std::ostringstream os;
  os << inc.num_points << ' ' << inc.lines.size() << '\n';
  for (const auto& line : inc.lines) {
    for (size_t i = 0; i < line.size(); ++i) os << (i ? " " : "") << line[i];
    os << '\n';
  }
  return os.str();
}

IncidenceStructure incidence_from_text(const std::string& text) {
  std::istringstream in(text);
  IncidenceStructure inc;
  long long p = -1, l = -1;
  if (!(in >> p >> l) || p < 0 || l < 0)
    throw std::invalid_argument("incidence text: bad header");
  inc.num_points = static_cast<int>(p);
  std::string rest;
  std::getline(in, rest);
  for (long long i = 0; i < l; ++i) {
    std::string line_text;
    if (!std::getline(in, line_text))
      throw std::invalid_argument("incidence text: missing line");
    std::istringstream ls(line_text);
    std::vector<int> line;
    int v;
    while (ls >> v) line.push_back(v);
    inc.lines.push_back(std::move(line));
  }
  inc.normalize();
  return inc;
}

}  // namespace graphreg

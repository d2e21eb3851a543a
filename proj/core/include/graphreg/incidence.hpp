#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphreg/graph.hpp"

namespace graphreg {

// Points 0..num_points-1 plus lines as point sets; the flag relation is
// membership. Lines are kept sorted and duplicate-free.
struct IncidenceStructure {
  int num_points = 0;
  std::vector<std::vector<int>> lines;

  void normalize();       // sorts lines and their points, validates
  long long flag_count() const;
  bool collinear(int p, int q) const;  // via the collinearity matrix

  // built by normalize(): collinearity[p*num_points+q]
  std::vector<char> collinearity;
};

struct AxiomsReport {
  bool pls = false;
  int s = -1, t = -1;
  std::string pls_violation;
  bool gq = false;
  std::string gq_violation;
  bool pq = false;
  long long mu = -1;
  std::string pq_violation;
};

// Checks PLS(s,t) (constant line size, constant point degree, two points on
// at most one line), the generalized-quadrangle axiom (unique collinear
// point on every non-incident line) and the partial-quadrangle axioms
// (pairwise collinear triples share a line; constant mu).
AxiomsReport axioms_report(const IncidenceStructure& inc);

// Collinearity graph (throws when num_points exceeds the graph cap).
Graph point_graph(const IncidenceStructure& inc);

// Maximal cliques become the lines.
IncidenceStructure lines_from_point_graph(const Graph& g);

// For every triad (three pairwise non-collinear points) the number of
// centers (points collinear with all three); histogram center count ->
// number of triads.
std::map<long long, long long> triad_center_distribution(const IncidenceStructure& inc);

// Text format: "p l" header, then one line per geometric line listing its
// point ids.
std::string incidence_to_text(const IncidenceStructure& inc);
IncidenceStructure incidence_from_text(const std::string& text);

}  // namespace graphreg

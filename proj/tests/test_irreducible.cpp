#include <doctest.h>

#include <stdexcept>

#include "graphreg/enumerate.hpp"
#include "graphreg/irreducible.hpp"

using namespace graphreg;

TEST_SUITE_BEGIN("irreducible");

TEST_CASE("known (ir)reducible types") {
  GraphType edge_k4(Graph::complete(4), {0, 1});
  CHECK(is_mn_irreducible(edge_k4, 2, 4));

  // K4 over a single base vertex splits off (edge base, K4)
  GraphType vertex_k4(Graph::complete(4), {0});
  CHECK(is_mn_reducible(vertex_k4, 2, 4));

  GraphType tri_k5(Graph::complete(5), {0, 1, 2});
  CHECK(is_mn_irreducible(tri_k5, 3, 5));

  // triangle over an edge splits as two triangles do not: it IS the free
  // sum of an edge and itself, but those summands are the type itself;
  // the genuine (2,3) split-offs are the pendant shapes
  Graph pendant(3);
  pendant.add_edge(0, 1);
  pendant.add_edge(1, 2);
  GraphType pendant_t(pendant, {0, 1});  // extra vertex hangs off the base
  CHECK(is_mn_reducible(pendant_t, 2, 3));

  GraphType tri_edge(Graph::complete(3), {0, 1});
  CHECK(is_mn_irreducible(tri_edge, 2, 3));
}

TEST_CASE("disconnected types reduce through an empty glue") {
  Graph disjoint(3);
  disjoint.add_edge(1, 2);
  GraphType t(disjoint, {0});  // base vertex isolated from an edge
  CHECK(is_mn_reducible(t, 1, 3));
  CHECK(is_mn_reducible(t, 1, 2));  // the split-off edge has order (k<=1, 2)
}

TEST_CASE("precondition") {
  GraphType tri_edge(Graph::complete(3), {0, 1});
  CHECK_THROWS_AS(is_mn_reducible(tri_edge, 1, 3), std::invalid_argument);
}

TEST_CASE("partition route equals closure connectivity up to order (3,5)") {
  // full (3,6) sweep runs in the acceptance suite
  for (int m = 1; m <= 3; ++m)
    for (int n = m + 2; n <= 5; ++n)
      for (const GraphType& t : all_types_cached(m, n).members)
        CHECK(is_mn_irreducible(t, m, n) ==
              is_mn_irreducible_via_connectivity(t, m, n));
}

TEST_SUITE_END();

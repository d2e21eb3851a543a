#include <doctest.h>

#include <stdexcept>

#include "graphreg/cameron.hpp"
#include "graphreg/canonical.hpp"
#include "graphreg/catalog.hpp"
#include "graphreg/enumerate.hpp"
#include "graphreg/gf.hpp"
#include "graphreg/incidence.hpp"
#include "graphreg/quadric.hpp"
#include "graphreg/regularity.hpp"
#include "graphreg/subgraph.hpp"

using namespace graphreg;

namespace {

IncidenceStructure grid_3x3() {
  IncidenceStructure inc;
  inc.num_points = 9;
  for (int r = 0; r < 3; ++r) inc.lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});
  for (int c = 0; c < 3; ++c) inc.lines.push_back({c, c + 3, c + 6});
  inc.normalize();
  return inc;
}

IncidenceStructure fano_plane() {
  IncidenceStructure inc;
  inc.num_points = 7;
  inc.lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  inc.normalize();
  return inc;
}

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("finite fields") {
  for (int q : {2, 3, 4}) {
    const auto& F = GaloisField::get(q);
    for (int a = 1; a < q; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    for (int a = 0; a < q; ++a) CHECK(F.add(a, F.neg(a)) == 0);
  }
  // GF(4): x * x = x + 1
  const auto& F4 = GaloisField::get(4);
  CHECK(F4.mul(2, 2) == 3);
  CHECK(F4.mul(2, 3) == 1);
  CHECK_THROWS_AS(GaloisField::get(5), std::invalid_argument);
}

TEST_CASE("elliptic quadric point counts and parameters") {
  CHECK(elliptic_quadric_point_count(2) == 27);
  CHECK(elliptic_quadric_point_count(3) == 112);
  CHECK(elliptic_quadric_point_count(4) == 325);

  SUBCASE("q=2 gives GQ(2,4) with srg(27,10,1,5)") {
    IncidenceStructure inc = elliptic_quadric_gq(2);
    CHECK(inc.num_points == 27);
    CHECK(inc.lines.size() == 45);
    AxiomsReport rep = axioms_report(inc);
    CHECK(rep.pls);
    CHECK(rep.s == 2);
    CHECK(rep.t == 4);
    CHECK(rep.gq);
    CHECK(rep.pq);
    CHECK(rep.mu == 5);  // mu = t+1
    auto p = srg_parameters(point_graph(inc));
    REQUIRE(p);
    CHECK(*p == SrgParams{27, 10, 1, 5});
  }
  SUBCASE("q=3 gives srg(112,30,2,10)") {
    IncidenceStructure inc = elliptic_quadric_gq(3);
    CHECK(inc.num_points == 112);
    auto p = srg_parameters(point_graph(inc));
    REQUIRE(p);
    CHECK(*p == SrgParams{112, 30, 2, 10});
    // v=(s+1)(st+1), k=s(t+1), lambda=s-1, mu=t+1 at (3,9)
    CHECK(p->v == 4 * 28);
    CHECK(p->k == 3 * 10);
  }
  SUBCASE("q=4 structure is constructible, its point graph exceeds the cap") {
    IncidenceStructure inc = elliptic_quadric_gq(4);
    CHECK(inc.num_points == 325);
    CHECK(inc.lines.size() == 65 * 17);
    CHECK_THROWS_AS(point_graph(inc), std::out_of_range);
  }
  CHECK_THROWS_AS(elliptic_quadric_gq(5), std::invalid_argument);
}

TEST_CASE("point graphs") {
  CHECK(are_isomorphic(point_graph(grid_3x3()), catalog("rook3x3")));
  IncidenceStructure single_line;
  single_line.num_points = 3;
  single_line.lines = {{0, 1, 2}};
  single_line.normalize();
  CHECK(point_graph(single_line) == Graph::complete(3));

  Graph pg = point_graph(elliptic_quadric_gq(2));
  CHECK(pg.order() == 27);
  CHECK(is_regular(pg));
  CHECK(pg.degree(0) == 10);
}

TEST_CASE("axiom reports") {
  SUBCASE("3x3 grid is GQ(2,1)") {
    AxiomsReport rep = axioms_report(grid_3x3());
    CHECK(rep.pls);
    CHECK(rep.s == 2);
    CHECK(rep.t == 1);
    CHECK(rep.gq);
    CHECK(rep.pq);
    CHECK(rep.mu == 2);
  }
  SUBCASE("fano plane is a PLS(2,2) but no quadrangle") {
    AxiomsReport rep = axioms_report(fano_plane());
    CHECK(rep.pls);
    CHECK(rep.s == 2);
    CHECK(rep.t == 2);
    CHECK_FALSE(rep.gq);
    CHECK_FALSE(rep.pq);  // triangles of lines exist
  }
  SUBCASE("violations are described") {
    IncidenceStructure bad;
    bad.num_points = 4;
    bad.lines = {{0, 1, 2}, {0, 1, 3}};
    bad.normalize();
    AxiomsReport rep = axioms_report(bad);
    CHECK_FALSE(rep.pls);
    CHECK_FALSE(rep.pls_violation.empty());
  }
}

TEST_CASE("reconstruction from point graphs") {
  SUBCASE("gq24 round trip is exact") {
    IncidenceStructure inc = elliptic_quadric_gq(2);
    Graph pg = point_graph(inc);
    IncidenceStructure rec = lines_from_point_graph(pg);
    CHECK(rec.lines == inc.lines);
    CHECK(point_graph(rec) == pg);
  }
  SUBCASE("rook graph reconstructs the grid") {
    IncidenceStructure rec = lines_from_point_graph(catalog("rook3x3"));
    AxiomsReport rep = axioms_report(rec);
    CHECK(rep.gq);
    CHECK(rep.s == 2);
    CHECK(rep.t == 1);
    CHECK(point_graph(rec) == catalog("rook3x3"));
  }
  SUBCASE("clebsch gives the PQ(1,4,2) on its 40 edges") {
    IncidenceStructure rec = lines_from_point_graph(catalog("clebsch"));
    CHECK(rec.lines.size() == 40);
    AxiomsReport rep = axioms_report(rec);
    CHECK(rep.pls);
    CHECK(rep.pq);
    CHECK_FALSE(rep.gq);
    CHECK(rep.s == 1);
    CHECK(rep.t == 4);
    CHECK(rep.mu == 2);
    CHECK(point_graph(rec) == catalog("clebsch"));
  }
}

TEST_CASE("triad center distributions") {
  SUBCASE("gq24: constant s+1 = 3") {
    auto hist = triad_center_distribution(elliptic_quadric_gq(2));
    REQUIRE(hist.size() == 1);
    CHECK(hist.begin()->first == 3);
    CHECK(hist.begin()->second == 720);
  }
  SUBCASE("petersen as PQ(1,2,1): non-constant") {
    auto hist = triad_center_distribution(lines_from_point_graph(catalog("petersen")));
    REQUIRE(hist.size() == 2);
    CHECK(hist.at(0) == 20);
    CHECK(hist.at(1) == 10);
  }
  SUBCASE("clebsch as PQ(1,4,2): constant 1") {
    auto hist = triad_center_distribution(lines_from_point_graph(catalog("clebsch")));
    REQUIRE(hist.size() == 1);
    CHECK(hist.begin()->first == 1);
  }
  SUBCASE("rook grid: constant 0") {
    auto hist = triad_center_distribution(grid_3x3());
    REQUIRE(hist.size() == 1);
    CHECK(hist.begin()->first == 0);
    CHECK(hist.begin()->second == 6);
  }
}

TEST_CASE("triad inequality evaluation") {
  SUBCASE("(2,4,5): c = 3 exactly, printed denominator is negative") {
    CameronEvaluation ev = cameron_inequality({2, 4, 5});
    REQUIRE(ev.c);
    CHECK(*ev.c == Rational(3));
    CHECK(ev.printed_denominator_nonpositive);
    CHECK_FALSE(ev.printed_denominator_zero);
    REQUIRE(ev.lhs);
    CHECK(*ev.lhs == Rational(-1440));
    CHECK(ev.rhs == Rational(180));
    CHECK(ev.equality);  // constant triad centers
    CHECK(ev.triads_per_pair == Rational(10));
  }
  SUBCASE("(1,4,2): c = 1") {
    CameronEvaluation ev = cameron_inequality({1, 4, 2});
    REQUIRE(ev.c);
    CHECK(*ev.c == Rational(1));
    CHECK(ev.equality);
  }
  SUBCASE("(4,25,20): exact rational c, integrality not assumed") {
    CameronEvaluation ev = cameron_inequality({4, 25, 20});
    REQUIRE(ev.c);
    CHECK(*ev.c == Rational(73, 16));
    CHECK_FALSE(ev.c->is_integer());
    CHECK_FALSE(ev.equality);  // the moments rule out constant centers
  }
  SUBCASE("division by zero in the c formula is reported") {
    CameronEvaluation ev = cameron_inequality({2, 1, 2});
    CHECK(ev.c_division_by_zero);
    CHECK_FALSE(ev.c);
    CHECK(ev.equality);  // the single triad per pair is trivially constant
  }
  SUBCASE("equality tracks the histograms on the fixtures") {
    auto constant_hist = [](const Graph& g) {
      return triad_center_distribution(lines_from_point_graph(g)).size() <= 1;
    };
    auto eval = [](const Graph& g) {
      AxiomsReport rep = axioms_report(lines_from_point_graph(g));
      REQUIRE(rep.pq);
      return cameron_inequality({rep.s, rep.t, rep.mu});
    };
    for (const char* name : {"gq24", "clebsch", "rook3x3", "petersen"}) {
      Graph g = catalog(name);
      CHECK(eval(g).equality == constant_hist(g));
    }
  }
}

TEST_CASE("srg parameters") {
  auto c5 = srg_parameters(Graph::cycle(5));
  REQUIRE(c5);
  CHECK(*c5 == SrgParams{5, 2, 0, 1});
  CHECK_FALSE(srg_parameters(Graph::cycle(6)));
  auto cleb = srg_parameters(catalog("clebsch"));
  REQUIRE(cleb);
  CHECK(*cleb == SrgParams{16, 5, 0, 2});
  auto pet = srg_parameters(catalog("petersen"));
  REQUIRE(pet);
  CHECK(*pet == SrgParams{10, 3, 0, 1});
}

TEST_CASE("cameron characterization") {
  CHECK(cameron_characterization(catalog("clebsch")));
  CHECK(cameron_characterization(catalog("rook3x3")));
  CHECK(cameron_characterization(catalog("gq24")));
  CHECK(cameron_characterization(catalog("petersen")));

  // complete tripartite K3,3,3 is an srg containing K4-e
  Graph k333(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 != v / 3) k333.add_edge(u, v);
  REQUIRE(srg_parameters(k333));
  CHECK_FALSE(cameron_characterization(k333));
  CHECK_FALSE(cameron_characterization(Graph::cycle(6)));  // not an srg
}

TEST_CASE("catalog parameters") {
  CHECK(srg_parameters(catalog("gq24")) == SrgParams{27, 10, 1, 5});
  CHECK(catalog("schlafli_complement") == catalog("gq24"));
  CHECK_FALSE(contains_induced(catalog("clebsch"), Graph::complete(3)));
  CHECK_THROWS_AS(catalog("no_such_graph"), std::invalid_argument);
}

TEST_CASE("second subconstituent of gq24 is clebsch via the quadric") {
  Graph pg = point_graph(elliptic_quadric_gq(2));
  CHECK(are_isomorphic(subconstituent(pg, 5, Subconstituent::second),
                       catalog("clebsch")));
}

TEST_CASE("round trip holds for every catalog PQ point graph") {
  for (const char* name : {"gq24", "rook3x3", "clebsch", "petersen", "c5"}) {
    Graph g = catalog(name);
    CHECK(point_graph(lines_from_point_graph(g)) == g);
  }
}

TEST_CASE("constant-triad point graphs") {
  // Fixtures whose triad-center histogram is constant. On these, every
  // (3,4)-type whose base is not a single edge plus an isolated vertex is
  // regular; and the 6-vertex condition is equivalent to regularity for the
  // two-triangle hexagon type below.
  Graph one_edge(3);
  one_edge.add_edge(0, 1);
  CanonicalForm one_edge_key = canonical_form(one_edge);

  Graph hexagon(6);  // triangles 0-4-5 and 1-2-3, joined by 4-3 and 5-2
  hexagon.add_edge(0, 5);
  hexagon.add_edge(5, 4);
  hexagon.add_edge(4, 0);
  hexagon.add_edge(1, 2);
  hexagon.add_edge(2, 3);
  hexagon.add_edge(3, 1);
  hexagon.add_edge(4, 3);
  hexagon.add_edge(5, 2);
  GraphType hex_type(hexagon, {0, 1});

  for (const char* name : {"gq24", "clebsch", "rook3x3"}) {
    Graph g = catalog(name);
    REQUIRE(triad_center_distribution(lines_from_point_graph(g)).size() <= 1);
    for (const GraphType& t : all_types_cached(3, 4).members) {
      if (canonical_form(t.base_graph()) == one_edge_key) continue;
      CHECK(is_type_regular(g, t).holds);
    }
    CHECK(t_vertex_condition(g, 6).holds == is_type_regular(g, hex_type).holds);
  }
}

TEST_CASE("clique types over a triangle base on quadric point graphs") {
  // On a point graph of line size s+1, extensions of a base triangle to
  // K5/K6/K7 live inside one line, giving the ordered counts
  // (s-2)(s-3), (s-2)(s-3)(s-4), ... all zero at q = 2 and 3.
  for (int q : {2, 3}) {
    Graph pg = point_graph(elliptic_quadric_gq(q));
    for (int l = 5; l <= 7; ++l) {
      GraphType t(Graph::complete(l), {0, 1, 2});
      RegularityReport r = is_type_regular(pg, t);
      CHECK(r.holds);
      CHECK(*r.constant_count == 0);
    }
    // lambda and mu as single-type constants
    GraphType lambda_type(Graph::complete(3), {0, 1});
    Graph mu3(3);
    mu3.add_edge(0, 2);
    mu3.add_edge(1, 2);
    GraphType mu_type(mu3, {0, 1});
    auto p = srg_parameters(pg);
    REQUIRE(p);
    RegularityReport rl = is_type_regular(pg, lambda_type);
    CHECK(rl.holds);
    CHECK(*rl.constant_count == static_cast<std::uint64_t>(p->lambda));
    RegularityReport rm = is_type_regular(pg, mu_type);
    CHECK(rm.holds);
    CHECK(*rm.constant_count == static_cast<std::uint64_t>(p->mu));
  }
}

TEST_CASE("incidence text format") {
  IncidenceStructure inc = grid_3x3();
  IncidenceStructure back = incidence_from_text(incidence_to_text(inc));
  CHECK(back.num_points == inc.num_points);
  CHECK(back.lines == inc.lines);
  CHECK_THROWS(incidence_from_text("x y"));
}

TEST_SUITE_END();

// Command-line front end: constructions, regularity checks and type
// enumerations with machine-readable JSON output.
//
// Exit codes: 0 = check holds / command succeeded, 1 = check failed (witness
// in the report), 2 = usage or data error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphreg/cameron.hpp"
#include "graphreg/canonical.hpp"
#include "graphreg/catalog.hpp"
#include "graphreg/cliques.hpp"
#include "graphreg/connectivity.hpp"
#include "graphreg/counting.hpp"
#include "graphreg/enumerate.hpp"
#include "graphreg/graph_io.hpp"
#include "graphreg/incidence.hpp"
#include "graphreg/irreducible.hpp"
#include "graphreg/quadric.hpp"
#include "graphreg/regularity.hpp"
#include "graphreg/report_json.hpp"
#include "graphreg/subgraph.hpp"

using json = nlohmann::json;
using namespace graphreg;

namespace {

struct InputSpec {
  std::string catalog_name;
  std::string g6;
  std::string file;

  void add_options(CLI::App* cmd) {
    auto* a = cmd->add_option("--catalog", catalog_name,
                              "named fixture (petersen, clebsch, c5, rook3x3, "
                              "gq24, schlafli_complement)");
    auto* b = cmd->add_option("--g6", g6, "inline graph6 string");
    auto* c = cmd->add_option("--file", file, "edge-list file: 'n m' then 'u v' lines");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  Graph load(std::string& label) const {
    int given = !catalog_name.empty() + !g6.empty() + !file.empty();
    if (given != 1)
      throw std::invalid_argument("exactly one of --catalog/--g6/--file required");
    if (!catalog_name.empty()) {
      label = "catalog:" + catalog_name;
      return catalog(catalog_name);
    }
    if (!g6.empty()) {
      label = "g6:" + g6;
      return from_graph6(g6);
    }
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file);
    label = "file:" + file;
    return from_edge_list(in);
  }
};

struct OutputSpec {
  std::string format = "json";
  bool quiet = false;
  int threads = 0;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--quiet", quiet, "suppress progress on stderr");
    cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  }

  CheckOptions check_options() const {
    CheckOptions opts;
    opts.threads = threads;
    if (!quiet)
      opts.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
    return opts;
  }
};

int emit_report(const RegularityReport& report, const std::string& input_label,
                const OutputSpec& out) {
  if (!report.error.empty()) {
    if (out.format == "json") {
      json j = to_json(report);
      j["input"] = input_label;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << report.subject << ": ERROR " << report.error << "\n";
    }
    return 2;
  }
  if (out.format == "json") {
    json j = to_json(report);
    j["input"] = input_label;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.subject << " on " << input_label << ": "
              << (report.holds ? "holds" : "FAILS") << "\n";
    if (report.witness)
      std::cout << "  witness counts " << report.witness->count1 << " vs "
                << report.witness->count2 << "\n";
  }
  return report.holds ? 0 : 1;
}

Mode parse_mode(const std::string& mode) {
  if (mode == "naive") return Mode::naive;
  if (mode == "reduced") return Mode::reduced;
  throw std::invalid_argument("mode must be naive or reduced");
}

// ---------------------------------------------------------------------------
// selftest: small-order oracle suites; exits nonzero on any violation.

int run_selftest(const OutputSpec& out) {
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    if (!out.quiet || !ok)
      std::cerr << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };

  // canonical form invariance and class counts on 4 vertices
  {
    std::set<std::string> keys;
    bool invariant = true;
    std::mt19937 rng(7);
    for (unsigned mask = 0; mask < 64; ++mask) {
      Graph g(4);
      int bit = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j, ++bit)
          if ((mask >> bit) & 1) g.add_edge(i, j);
      keys.insert(canonical_form(g).key);
      std::vector<int> perm{0, 1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h(4);
      for (auto [u, v] : edges_of(g)) h.add_edge(perm[u], perm[v]);
      if (!(canonical_form(g) == canonical_form(h))) invariant = false;
    }
    check(invariant, "canonical form invariant under relabeling (n=4)");
    check(keys.size() == 11, "11 isomorphism classes on 4 vertices");
  }
  // generator agrees with label-space brute force
  {
    std::set<std::string> brute;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
      Graph g(5);
      int bit = 0;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j, ++bit)
          if ((mask >> bit) & 1) g.add_edge(i, j);
      brute.insert(canonical_form(g).key);
    }
    check(brute.size() == 34 && enumerate_graphs(5).size() == 34,
          "canonical augmentation matches brute-force transversal (n=5)");
  }
  // naive vs reduced regularity agreement on all graphs of order <= 5
  {
    bool agree = true;
    for (int n = 1; n <= 5 && agree; ++n)
      for (const Graph& g : enumerate_graphs(n)) {
        if (is_mn_regular(g, 2, 4, Mode::naive).holds !=
            is_mn_regular(g, 2, 4, Mode::reduced).holds ||
            is_mn_regular(g, 3, 4, Mode::naive).holds !=
                is_mn_regular(g, 3, 4, Mode::reduced).holds) {
          agree = false;
          break;
        }
      }
    check(agree, "naive and reduced regularity agree (orders <= 5)");
  }
  // embedding sum identity on random instances
  {
    std::mt19937 rng(11);
    bool ok = true;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      int n = 4 + static_cast<int>(rng() % 4);
      Graph gamma(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() & 1) gamma.add_edge(i, j);
      const auto& pool = all_types_cached(2, 4).members;
      const GraphType& t = pool[rng() % pool.size()];
      std::uint64_t total = 0;
      for (const auto& kappa : base_embeddings(gamma, t))
        total += count_extensions(gamma, t, kappa);
      if (total != count_embeddings(gamma, t.theta)) ok = false;
    }
    check(ok, "embedding-sum identity on random instances");
  }
  // partition-based vs closure-connectivity irreducibility
  {
    bool ok = true;
    for (int m = 1; m <= 3 && ok; ++m)
      for (int n = m + 2; n <= 5 && ok; ++n)
        for (const GraphType& t : all_types_cached(m, n).members)
          if (is_mn_irreducible(t, m, n) !=
              is_mn_irreducible_via_connectivity(t, m, n)) {
            ok = false;
            break;
          }
    check(ok, "partition and closure-connectivity irreducibility agree");
  }
  // graph6 round trip
  {
    bool ok = true;
    for (const Graph& g : enumerate_graphs(6))
      if (!(from_graph6(to_graph6(g)) == g)) ok = false;
    check(ok, "graph6 round trip (n=6)");
  }

  std::cout << json{{"selftest", failures == 0 ? "pass" : "fail"},
                    {"failures", failures}}
                   .dump()
            << "\n";
  return failures == 0 ? 0 : 1;
}

json graph_info(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  if (g.order() <= 62) j["graph6"] = to_graph6(g);
  if (auto p = srg_parameters(g)) j["srg"] = to_json(*p);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph regularity toolkit: t-vertex conditions, "
               "(m,n)-regularity, graph-type enumeration and finite-geometry "
               "point graphs"};
  app.require_subcommand(1);

  // check-tvc
  auto* tvc = app.add_subcommand("check-tvc", "t-vertex condition");
  InputSpec tvc_in;
  OutputSpec tvc_out;
  int tvc_t = 3;
  std::string tvc_mode = "reduced";
  tvc_in.add_options(tvc);
  tvc_out.add_options(tvc);
  tvc->add_option("--t", tvc_t, "t parameter")->required();
  tvc->add_option("--mode", tvc_mode, "naive|reduced");

  // check-isoregular
  auto* iso = app.add_subcommand("check-isoregular", "k-isoregularity");
  InputSpec iso_in;
  OutputSpec iso_out;
  int iso_k = 2;
  iso_in.add_options(iso);
  iso_out.add_options(iso);
  iso->add_option("--k", iso_k, "k parameter")->required();

  // check-mn-regular
  auto* mn = app.add_subcommand("check-mn-regular", "(m,n)-regularity");
  InputSpec mn_in;
  OutputSpec mn_out;
  int mn_m = 2, mn_n = 3;
  std::string mn_mode = "reduced";
  mn_in.add_options(mn);
  mn_out.add_options(mn);
  mn->add_option("--m", mn_m)->required();
  mn->add_option("--n", mn_n)->required();
  mn->add_option("--mode", mn_mode, "naive|reduced");

  // check-type
  auto* ct = app.add_subcommand("check-type", "T-regularity for one graph-type");
  InputSpec ct_in;
  OutputSpec ct_out;
  std::string ct_type, ct_type_json;
  ct_in.add_options(ct);
  ct_out.add_options(ct);
  auto* ct_text =
      ct->add_option("--type", ct_type, "type text: '<graph6> <base ids>'");
  ct->add_option("--type-json", ct_type_json,
                 "type JSON: {\"n\":..,\"theta\":[[u,v],..],\"base\":[..]}")
      ->excludes(ct_text);

  // enumerate-types
  auto* et = app.add_subcommand("enumerate-types", "graph-type transversals");
  OutputSpec et_out;
  int et_m = 2, et_n = 4;
  bool et_irr = false, et_k4e = false;
  int et_cl = 0;
  et_out.add_options(et);
  et->add_option("--m", et_m)->required();
  et->add_option("--n", et_n)->required();
  et->add_flag("--irreducible", et_irr, "(m,n)-irreducible types only");
  et->add_flag("--theta-k4e-free", et_k4e, "theta without induced K4-e");
  et->add_option("--cl-connected", et_cl, "keep types whose closure is K-connected");

  // construct
  auto* con = app.add_subcommand("construct", "named graphs and quadric point graphs");
  OutputSpec con_out;
  std::string con_name;
  int con_q = 0;
  std::string con_as = "graph6";
  con_out.add_options(con);
  con->add_option("--catalog", con_name, "fixture name");
  con->add_option("--q", con_q, "elliptic quadric GQ(q,q^2) point graph, q in 2..4");
  con->add_option("--as", con_as, "graph6|edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  // analyze-geometry
  auto* geo = app.add_subcommand("analyze-geometry",
                                 "incidence axioms of the clique geometry");
  InputSpec geo_in;
  OutputSpec geo_out;
  int geo_q = 0;
  std::string geo_inc_file;
  bool geo_emit = false;
  geo_in.add_options(geo);
  geo_out.add_options(geo);
  geo->add_option("--q", geo_q, "analyze the elliptic quadric GQ(q,q^2) itself");
  geo->add_option("--incidence-file", geo_inc_file,
                  "incidence text: 'p l' header then one line per geometric line");
  geo->add_flag("--emit-incidence", geo_emit, "print the structure in incidence text");

  // triads
  auto* tri = app.add_subcommand("triads", "triad-center histogram and the triad inequality");
  InputSpec tri_in;
  OutputSpec tri_out;
  int tri_q = 0;
  std::string tri_inc_file;
  tri_in.add_options(tri);
  tri_out.add_options(tri);
  tri->add_option("--q", tri_q, "use the elliptic quadric GQ(q,q^2)");
  tri->add_option("--incidence-file", tri_inc_file, "incidence text file");

  // selftest
  auto* st = app.add_subcommand("selftest", "small-order oracle suites");
  OutputSpec st_out;
  st_out.add_options(st);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tvc->parsed()) {
      std::string label;
      Graph g = tvc_in.load(label);
      return emit_report(
          t_vertex_condition(g, tvc_t, parse_mode(tvc_mode), tvc_out.check_options()),
          label, tvc_out);
    }
    if (iso->parsed()) {
      std::string label;
      Graph g = iso_in.load(label);
      return emit_report(k_isoregular(g, iso_k, iso_out.check_options()), label,
                         iso_out);
    }
    if (mn->parsed()) {
      std::string label;
      Graph g = mn_in.load(label);
      return emit_report(is_mn_regular(g, mn_m, mn_n, parse_mode(mn_mode),
                                       mn_out.check_options()),
                         label, mn_out);
    }
    if (ct->parsed()) {
      std::string label;
      Graph g = ct_in.load(label);
      if (ct_type.empty() == ct_type_json.empty())
        throw std::invalid_argument("check-type needs exactly one of --type/--type-json");
      GraphType t = ct_type.empty()
                        ? type_from_json(json::parse(ct_type_json))
                        : type_from_text(ct_type);
      return emit_report(is_type_regular(g, t, ct_out.check_options()), label,
                         ct_out);
    }
    if (et->parsed()) {
      GraphPredicate theta_filter;
      std::vector<std::string> names;
      if (et_k4e) {
        const Graph k4e = k4_minus_edge();
        theta_filter = [k4e](const Graph& g) { return !contains_induced(g, k4e); };
        names.push_back("theta-k4e-free");
      }
      TypePredicate type_filter;
      if (et_irr && et_cl > 0)
        throw std::invalid_argument("--irreducible and --cl-connected are exclusive");
      if (et_irr) {
        int m = et_m, n = et_n;
        type_filter = [m, n](const GraphType& t) { return is_mn_irreducible(t, m, n); };
        names.push_back("(" + std::to_string(et_m) + "," + std::to_string(et_n) +
                        ")-irreducible");
      } else if (et_cl > 0) {
        int k = et_cl;
        type_filter = [k](const GraphType& t) {
          return is_k_connected(closure_cl(t), k);
        };
        names.push_back("cl-" + std::to_string(et_cl) + "-connected");
      }
      TypeTransversal tv = enumerate_types(et_m, et_n, theta_filter, type_filter,
                                           names, et_k4e, et_out.threads);
      if (et_out.format == "json") {
        json j = to_json(tv);
        j["members_json"] = json::array();
        for (const auto& t : tv.members) j["members_json"].push_back(type_to_json(t));
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& t : tv.members) std::cout << type_to_text(t) << "\n";
        std::cout << to_json(tv, false).dump() << "\n";
      }
      return 0;
    }
    if (con->parsed()) {
      if (con_name.empty() == (con_q == 0))
        throw std::invalid_argument("construct needs exactly one of --catalog/--q");
      Graph g = con_q ? point_graph(elliptic_quadric_gq(con_q)) : catalog(con_name);
      if (con_out.format == "json") {
        json j = graph_info(g);
        if (con_as == "edgelist") j["edgelist"] = to_edge_list(g);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (con_as == "edgelist" ? to_edge_list(g) : to_graph6(g) + "\n");
      }
      return 0;
    }
    if (geo->parsed()) {
      IncidenceStructure inc;
      std::string label;
      if (geo_q) {
        inc = elliptic_quadric_gq(geo_q);
        label = "elliptic-quadric q=" + std::to_string(geo_q);
      } else if (!geo_inc_file.empty()) {
        std::ifstream in(geo_inc_file);
        if (!in) throw std::invalid_argument("cannot open " + geo_inc_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        inc = incidence_from_text(buf.str());
        label = "incidence:" + geo_inc_file;
      } else {
        Graph g = geo_in.load(label);
        inc = lines_from_point_graph(g);
      }
      if (geo_emit) {
        std::cout << incidence_to_text(inc);
        return 0;
      }
      json j;
      j["input"] = label;
      j["points"] = inc.num_points;
      j["lines"] = inc.lines.size();
      j["axioms"] = to_json(axioms_report(inc));
      if (inc.num_points <= Graph::max_vertices) {
        Graph pg = point_graph(inc);
        j["point_graph"] = graph_info(pg);
        j["cameron_characterization"] = cameron_characterization(pg);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (tri->parsed()) {
      IncidenceStructure inc;
      std::string label;
      if (tri_q) {
        inc = elliptic_quadric_gq(tri_q);
        label = "elliptic-quadric q=" + std::to_string(tri_q);
      } else if (!tri_inc_file.empty()) {
        std::ifstream in(tri_inc_file);
        if (!in) throw std::invalid_argument("cannot open " + tri_inc_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        inc = incidence_from_text(buf.str());
        label = "incidence:" + tri_inc_file;
      } else {
        Graph g = tri_in.load(label);
        inc = lines_from_point_graph(g);
      }
      json j;
      j["input"] = label;
      j["histogram"] = histogram_json(triad_center_distribution(inc));
      AxiomsReport rep = axioms_report(inc);
      if (rep.pls && rep.pq) {
        PQParams p{rep.s, rep.t, rep.mu};
        j["pq"] = {{"s", p.s}, {"t", p.t}, {"mu", p.mu}};
        j["cameron"] = to_json(cameron_inequality(p));
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (st->parsed()) return run_selftest(st_out);
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}

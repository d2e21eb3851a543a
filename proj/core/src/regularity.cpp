#include "graphreg/regularity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "graphreg/canonical.hpp"
#include "graphreg/enumerate.hpp"
#include "graphreg/subgraph.hpp"

namespace graphreg {

std::string to_string(Mode m) { return m == Mode::naive ? "naive" : "reduced"; }

namespace {

int effective_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Counts extensions for every kappa, splitting the kappa list over worker
// threads; aggregation is deterministic because results land by index.
std::vector<std::uint64_t> counts_per_kappa(
    const Graph& gamma, const GraphType& t,
    const std::vector<std::vector<int>>& kappas, int threads) {
  std::vector<std::uint64_t> counts(kappas.size());
  threads = std::min<std::size_t>(effective_threads(threads), kappas.size());
  if (threads <= 1) {
    for (size_t i = 0; i < kappas.size(); ++i)
      counts[i] = count_extensions(gamma, t, kappas[i]);
    return counts;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = w; i < kappas.size(); i += threads)
        counts[i] = count_extensions(gamma, t, kappas[i]);
    });
  }
  for (auto& th : pool) th.join();
  return counts;
}

// Host graph facts used to skip types whose theta cannot embed at all: if
// theta contains a forbidden induced subgraph absent from gamma, every
// extension count is 0 and the type is regular with constant 0.
struct HostFacts {
  bool has_k3;
  bool has_k4e;

  explicit HostFacts(const Graph& gamma)
      : has_k3(contains_induced(gamma, Graph::complete(3))),
        has_k4e(contains_induced(gamma, k4_minus_edge())) {}

  bool theta_cannot_embed(const Graph& theta) const {
    if (!has_k3 && contains_induced(theta, Graph::complete(3))) return true;
    if (!has_k4e && contains_induced(theta, k4_minus_edge())) return true;
    return false;
  }
};

struct TypeCheckResult {
  bool holds;
  std::uint64_t constant;
  WitnessPair witness;
};

TypeCheckResult check_type(const Graph& gamma, const GraphType& t,
                           const CheckOptions& opts) {
  auto kappas = base_embeddings(gamma, t);
  if (kappas.empty()) return {true, 0, {}};
  auto counts = counts_per_kappa(gamma, t, kappas, opts.threads);
  for (size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] != counts[0]) {
      WitnessPair w;
      w.kappa1 = kappas[0];
      w.kappa2 = kappas[i];
      w.count1 = counts[0];
      w.count2 = counts[i];
      return {false, 0, w};
    }
  }
  return {true, counts[0], {}};
}

void emit_progress(const CheckOptions& opts, const std::string& msg) {
  if (opts.progress) opts.progress(msg);
}

// Checks one (m,l) layer against the given type list. Returns true when all
// types are regular; otherwise fills the report witness.
bool run_layer(const Graph& gamma, const TypeTransversal& types,
               const HostFacts& facts, const std::string& mode,
               const CheckOptions& opts, RegularityReport& report) {
  LevelReport level;
  level.m = types.m;
  level.n = types.n;
  level.mode = mode;
  level.types_tested = static_cast<int>(types.members.size());
  for (const GraphType& t : types.members) {
    if (facts.theta_cannot_embed(t.theta)) continue;
    TypeCheckResult r = check_type(gamma, t, opts);
    if (!r.holds) {
      level.holds = false;
      level.failing_type = type_to_text(t);
      report.witness = r.witness;
      report.levels.push_back(level);
      return false;
    }
  }
  report.levels.push_back(level);
  emit_progress(opts, "layer (" + std::to_string(types.m) + "," +
                          std::to_string(types.n) + ") ok, " +
                          std::to_string(types.members.size()) + " types");
  return true;
}

void validate_bounds(int m, int n) {
  if (m < 1 || m > 4)
    throw std::invalid_argument("base order m must be in 1..4");
  if (n < 1 || n > max_enumeration_order)
    throw std::invalid_argument("order n must be in 1.." +
                                std::to_string(max_enumeration_order));
}

}  // namespace

RegularityReport is_type_regular(const Graph& gamma, const GraphType& t,
                                 const CheckOptions& opts) {
  t.validate();
  RegularityReport report;
  report.subject = "type-regularity of " + type_to_text(t);
  TypeCheckResult r = check_type(gamma, t, opts);
  report.holds = r.holds;
  if (r.holds)
    report.constant_count = r.constant;
  else
    report.witness = r.witness;
  return report;
}

RegularityReport is_bracket_regular(const Graph& gamma, int m, int n,
                                    const CheckOptions& opts) {
  validate_bounds(m, n);
  if (m > n) throw std::invalid_argument("bracket regularity needs m <= n");
  RegularityReport report;
  report.subject =
      "[" + std::to_string(m) + "," + std::to_string(n) + "]-regularity";
  HostFacts facts(gamma);
  report.holds = run_layer(gamma, all_types_cached(m, n), facts, "naive", opts, report);
  return report;
}

RegularityReport is_mn_regular(const Graph& gamma, int m, int n, Mode mode,
                               const CheckOptions& opts) {
  validate_bounds(m, n);
  RegularityReport report;
  report.subject = "(" + std::to_string(m) + "," + std::to_string(n) +
                   ")-regularity [" + to_string(mode) + "]";
  HostFacts facts(gamma);
  if (mode == Mode::naive) {
    for (int k = 1; k <= m; ++k)
      for (int l = k; l <= n; ++l)
        if (!run_layer(gamma, all_types_cached(k, l), facts, "naive", opts, report)) {
          report.holds = false;
          return report;
        }
    report.holds = true;
    return report;
  }
  // reduced: full layers up to (m,m), then only level-irreducible types
  for (int k = 1; k <= m; ++k)
    for (int l = k; l <= std::min(m, n); ++l)
      if (!run_layer(gamma, all_types_cached(k, l), facts, "naive", opts, report)) {
        report.holds = false;
        return report;
      }
  for (int l = m + 1; l <= n; ++l)
    if (!run_layer(gamma, irreducible_level_types_cached(m, l), facts,
                   "reduced-irreducible", opts, report)) {
      report.holds = false;
      return report;
    }
  report.holds = true;
  return report;
}

RegularityReport t_vertex_condition(const Graph& gamma, int t, Mode mode,
                                    const CheckOptions& opts) {
  if (t < 1) throw std::invalid_argument("t-vertex condition needs t >= 1");
  RegularityReport report = is_mn_regular(gamma, 2, t, mode, opts);
  report.subject = std::to_string(t) + "-vertex condition [" + to_string(mode) + "]";
  return report;
}

RegularityReport k_isoregular(const Graph& gamma, int k,
                              const CheckOptions& opts) {
  if (k < 0) throw std::invalid_argument("k-isoregularity needs k >= 0");
  RegularityReport report;
  report.subject = std::to_string(k) + "-isoregularity";
  int n = gamma.order();
  for (int s = 1; s <= k; ++s) {
    LevelReport level;
    level.m = s;
    level.n = s;
    level.mode = "direct";
    std::map<std::string, std::pair<std::uint64_t, std::vector<int>>> seen;
    std::vector<int> subset(s);
    bool ok = true;
    std::function<void(int, int)> rec = [&](int idx, int first) {
      if (!ok) return;
      if (idx == s) {
        auto sub = induced_subgraph(gamma, subset);
        std::string key = canonical_form(sub.graph).key;
        std::uint64_t cnt = common_neighbors_mask(gamma, subset).count();
        auto it = seen.find(key);
        if (it == seen.end()) {
          seen.emplace(key, std::make_pair(cnt, subset));
          ++level.types_tested;
        } else if (it->second.first != cnt) {
          WitnessPair w;
          w.kappa1 = it->second.second;
          w.kappa2 = subset;
          w.count1 = it->second.first;
          w.count2 = cnt;
          report.witness = w;
          ok = false;
        }
        return;
      }
      for (int v = first; v <= n - (s - idx); ++v) {
        subset[idx] = v;
        rec(idx + 1, v + 1);
      }
    };
    rec(0, 0);
    level.holds = ok;
    report.levels.push_back(level);
    if (!ok) {
      report.holds = false;
      return report;
    }
    emit_progress(opts, "isoregular layer " + std::to_string(s) + " ok");
  }
  report.holds = true;
  return report;
}

RegularityReport subconstituent_regularity_check(const Graph& gamma, int m,
                                                 int n, Mode mode,
                                                 const CheckOptions& opts) {
  if (m < 1) throw std::invalid_argument("subconstituent check needs m >= 1");
  RegularityReport report;
  report.subject = "subconstituent (" + std::to_string(m - 1) + "," +
                   std::to_string(n - 1) + ")-regularity of all Gamma_1(v), Gamma_2(v)";
  RegularityReport pre = is_mn_regular(gamma, m, n, mode, opts);
  if (!pre.holds) {
    report.error = "precondition failed: graph is not (" + std::to_string(m) +
                   "," + std::to_string(n) + ")-regular";
    report.witness = pre.witness;
    report.holds = false;
    return report;
  }
  for (int v = 0; v < gamma.order(); ++v) {
    for (auto which : {Subconstituent::first, Subconstituent::second}) {
      Graph sub = subconstituent(gamma, v, which);
      if (m - 1 < 1) continue;  // nothing to check below base order 1
      RegularityReport r = is_mn_regular(sub, m - 1, n - 1, mode, opts);
      if (!r.holds) {
        report.holds = false;
        report.witness = r.witness;
        report.error = "";
        report.levels = r.levels;
        report.subject += " (fails at vertex " + std::to_string(v) +
                          (which == Subconstituent::first ? ", first" : ", second") +
                          " subconstituent)";
        return report;
      }
    }
    emit_progress(opts, "subconstituents of vertex " + std::to_string(v) + " ok");
  }
  report.holds = true;
  return report;
}

}  // namespace graphreg

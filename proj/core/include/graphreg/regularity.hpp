#pragma once

#include <functional>
#include <optional>
#include <string>

#include "graphreg/counting.hpp"
#include "graphreg/transversal.hpp"

namespace graphreg {

struct WitnessPair {
  std::vector<int> kappa1, kappa2;
  std::uint64_t count1 = 0, count2 = 0;
};

struct LevelReport {
  int m = 0, n = 0;
  std::string mode;
  int types_tested = 0;
  bool holds = true;
  std::string failing_type;  // type text format
};

// Outcome of a regularity check. holds iff no witness; constant_count is
// present exactly when a single-type check holds (0 when the base does not
// embed at all).
struct RegularityReport {
  std::string subject;
  bool holds = false;
  std::optional<std::uint64_t> constant_count;
  std::optional<WitnessPair> witness;
  std::vector<LevelReport> levels;
  std::string error;  // nonempty: the check could not run as posed
};

enum class Mode { naive, reduced };

std::string to_string(Mode m);

struct CheckOptions {
  int threads = 0;  // 0 = all hardware threads
  std::function<void(const std::string&)> progress;
};

// Gamma is T-regular when the extension count is the same for every base
// embedding; vacuously regular with constant 0 when the base does not embed.
RegularityReport is_type_regular(const Graph& gamma, const GraphType& t,
                                 const CheckOptions& opts = {});

// T-regular for every type of order exactly (m, n).
RegularityReport is_bracket_regular(const Graph& gamma, int m, int n,
                                    const CheckOptions& opts = {});

// [k,l]-regular for every k <= m and k <= l <= n. Reduced mode climbs level
// by level testing only the level-irreducible types; naive mode tests full
// transversals. The two modes decide the same predicate.
RegularityReport is_mn_regular(const Graph& gamma, int m, int n,
                               Mode mode = Mode::reduced,
                               const CheckOptions& opts = {});

// Equivalent to (2,t)-regularity.
RegularityReport t_vertex_condition(const Graph& gamma, int t,
                                    Mode mode = Mode::reduced,
                                    const CheckOptions& opts = {});

// Direct definition: for every vertex subset of size <= k the common
// neighbor count depends only on the canonical form of the induced
// subgraph.
RegularityReport k_isoregular(const Graph& gamma, int k,
                              const CheckOptions& opts = {});

// Verifies that both subconstituents of every vertex of an (m,n)-regular
// graph are (m-1,n-1)-regular. A violated precondition is reported in the
// error field, not silently ignored.
RegularityReport subconstituent_regularity_check(const Graph& gamma, int m,
                                                 int n, Mode mode = Mode::reduced,
                                                 const CheckOptions& opts = {});

}  // namespace graphreg

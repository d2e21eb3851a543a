#pragma once

#include <optional>
#include <string>

#include "graphreg/graph.hpp"

namespace graphreg {

// Exact rational on 64-bit integers; enough headroom for every parameter
// set at desk scale.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws on division by zero
  friend bool operator==(const Rational&, const Rational&) = default;
  bool operator<(const Rational& o) const;
  bool operator>=(const Rational& o) const { return !(*this < o); }

  bool is_integer() const { return den == 1; }
  std::string str() const;
};

struct SrgParams {
  long long v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// (v,k,lambda,mu) when the graph is strongly regular (regular, with both an
// edge and a non-edge, and constant common-neighbor counts on each).
std::optional<SrgParams> srg_parameters(const Graph& g);

struct PQParams {
  long long s = 0, t = 0, mu = 0;
};

// Evaluation of the displayed triad inequality for a partial quadrangle of
// order (s,t,mu), exactly as printed, alongside the center-count moment
// identity that detects the constant-center case.
//
// The printed expression reads
//   (s(t-1)+(mu-1)(mu-2)) * ((t+1)ts^2) / (mu-1-(t+1)s+mu) >= mu(t-1)^2 s^2
// whose denominator goes non-positive on standard examples; it is evaluated
// verbatim and flagged, never repaired into a guessed form. The equality
// test instead uses the exact triad moments forced by the axioms: through a
// fixed non-collinear pair there are n2 = s^2 t(t+1)/mu - 1 - (t+1)s + mu
// triads, their center counts sum to S1 = mu s(t-1) and the ordered center
// pairs to S2 = mu(mu-1)(mu-2); all triads share one center count iff
// S1^2 = n2 (S1 + S2).
struct CameronEvaluation {
  std::optional<Rational> lhs;  // printed expression; absent on division by zero
  Rational rhs;
  bool printed_denominator_zero = false;
  bool printed_denominator_nonpositive = false;
  bool printed_holds = false;  // lhs >= rhs when lhs is defined

  bool equality = false;  // constant triad-center count (moment identity)
  Rational triads_per_pair, center_sum, center_pairs;

  std::optional<Rational> c;  // 1 + (mu-1)(mu-2) / (s(t-1))
  bool c_division_by_zero = false;
};

CameronEvaluation cameron_inequality(const PQParams& p);

// True iff g is strongly regular with mu > 0 and without an induced
// K4 minus an edge. When true, the maximal-clique reconstruction is
// verified to be a partial quadrangle of order (lambda+1, k/(lambda+1)-1,
// mu); a mismatch there would be a library defect and throws.
bool cameron_characterization(const Graph& g);

}  // namespace graphreg

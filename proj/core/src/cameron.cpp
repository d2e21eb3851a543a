#include "graphreg/cameron.hpp"

#include <numeric>
#include <stdexcept>

#include "graphreg/incidence.hpp"
#include "graphreg/subgraph.hpp"

namespace graphreg {

Rational::Rational(long long n) : num(n), den(1) {}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::domain_error("rational division by zero");
  return Rational(num * o.den, den * o.num);
}
bool Rational::operator<(const Rational& o) const {
  return num * o.den < o.num * den;
}
std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<SrgParams> srg_parameters(const Graph& g) {
  int n = g.order();
  if (n == 0 || !is_regular(g)) return std::nullopt;
  long long lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      long long c = (g.row(u) & g.row(v)).count();
      if (g.has_edge(u, v)) {
        if (lambda < 0)
          lambda = c;
        else if (lambda != c)
          return std::nullopt;
      } else {
        if (mu < 0)
          mu = c;
        else if (mu != c)
          return std::nullopt;
      }
    }
  if (lambda < 0 || mu < 0) return std::nullopt;  // needs an edge and a non-edge
  return SrgParams{n, g.degree(0), lambda, mu};
}

CameronEvaluation cameron_inequality(const PQParams& p) {
  CameronEvaluation ev;
  const Rational s(p.s), t(p.t), mu(p.mu);

  ev.rhs = mu * (t - 1) * (t - 1) * s * s;

  Rational front = s * (t - 1) + (mu - 1) * (mu - 2);
  Rational numerator = (t + 1) * t * s * s;
  Rational denom = mu - 1 - (t + 1) * s + mu;
  if (denom.num == 0) {
    ev.printed_denominator_zero = true;
    ev.printed_denominator_nonpositive = true;
  } else {
    if (denom < Rational(0)) ev.printed_denominator_nonpositive = true;
    ev.lhs = front * (numerator / denom);
    ev.printed_holds = *ev.lhs >= ev.rhs;
  }

  // triad moments; defined for mu > 0
  if (p.mu > 0) {
    ev.triads_per_pair = s * s * t * (t + 1) / mu - 1 - (t + 1) * s + mu;
    ev.center_sum = mu * s * (t - 1);
    ev.center_pairs = mu * (mu - 1) * (mu - 2);
    if (ev.triads_per_pair == Rational(0))
      ev.equality = true;
    else
      ev.equality = ev.center_sum * ev.center_sum ==
                    ev.triads_per_pair * (ev.center_sum + ev.center_pairs);
  }

  Rational c_denom = s * (t - 1);
  if (c_denom.num == 0) {
    ev.c_division_by_zero = true;
  } else {
    ev.c = Rational(1) + (mu - 1) * (mu - 2) / c_denom;
  }
  return ev;
}

bool cameron_characterization(const Graph& g) {
  auto params = srg_parameters(g);
  if (!params || params->mu <= 0) return false;
  if (contains_induced(g, k4_minus_edge())) return false;

  IncidenceStructure inc = lines_from_point_graph(g);
  AxiomsReport rep = axioms_report(inc);
  long long s = params->lambda + 1;
  if (params->k % s != 0)
    throw std::logic_error("cameron characterization: k not divisible by lambda+1");
  long long t = params->k / s - 1;
  if (!rep.pls || !rep.pq || rep.s != s || rep.t != t || rep.mu != params->mu)
    throw std::logic_error(
        "cameron characterization: reconstructed structure is not the "
        "expected partial quadrangle");
  return true;
}

}  // namespace graphreg

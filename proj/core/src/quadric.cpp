#include "graphreg/quadric.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "graphreg/gf.hpp"

namespace graphreg {

namespace {

using Vec6 = std::array<int, 6>;

// Smallest a such that x^2 + xy + a*y^2 has no nonzero root over GF(q).
int irreducible_coefficient(const GaloisField& F) {
  for (int a = 0; a < F.q(); ++a) {
    bool has_root = false;
    for (int x = 0; x < F.q() && !has_root; ++x)
      for (int y = 0; y < F.q() && !has_root; ++y) {
        if (x == 0 && y == 0) continue;
        int v = F.add(F.add(F.mul(x, x), F.mul(x, y)), F.mul(a, F.mul(y, y)));
        if (v == 0) has_root = true;
      }
    if (!has_root) return a;
  }
  throw std::logic_error("no irreducible binary quadratic found");
}

struct QuadricSpace {
  const GaloisField& F;
  int a;

  explicit QuadricSpace(int q) : F(GaloisField::get(q)), a(irreducible_coefficient(F)) {}

  int quadratic(const Vec6& x) const {
    int v = F.mul(x[0], x[1]);
    v = F.add(v, F.mul(x[2], x[3]));
    v = F.add(v, F.mul(x[4], x[4]));
    v = F.add(v, F.mul(x[4], x[5]));
    v = F.add(v, F.mul(a, F.mul(x[5], x[5])));
    return v;
  }

  Vec6 add(const Vec6& x, const Vec6& y) const {
    Vec6 z;
    for (int i = 0; i < 6; ++i) z[i] = F.add(x[i], y[i]);
    return z;
  }

  Vec6 scale(int c, const Vec6& x) const {
    Vec6 z;
    for (int i = 0; i < 6; ++i) z[i] = F.mul(c, x[i]);
    return z;
  }

  // B(x,y) = Q(x+y) - Q(x) - Q(y)
  int bilinear(const Vec6& x, const Vec6& y) const {
    int v = quadratic(add(x, y));
    v = F.add(v, F.neg(quadratic(x)));
    v = F.add(v, F.neg(quadratic(y)));
    return v;
  }

  // First nonzero coordinate scaled to 1.
  Vec6 normalize(const Vec6& x) const {
    for (int i = 0; i < 6; ++i)
      if (x[i] != 0) return scale(F.inv(x[i]), x);
    throw std::logic_error("cannot normalize the zero vector");
  }

  // All normalized projective points, in lexicographic order.
  std::vector<Vec6> projective_points() const {
    std::vector<Vec6> pts;
    for (int lead = 0; lead < 6; ++lead) {
      Vec6 x{};
      x[lead] = 1;
      int free = 5 - lead;
      std::vector<int> digits(free, 0);
      while (true) {
        for (int i = 0; i < free; ++i) x[lead + 1 + i] = digits[i];
        pts.push_back(x);
        int i = free - 1;
        while (i >= 0 && digits[i] == F.q() - 1) digits[i--] = 0;
        if (i < 0) break;
        ++digits[i];
      }
    }
    return pts;
  }
};

}  // namespace

int elliptic_quadric_point_count(int q) {
  QuadricSpace space(q);
  int count = 0;
  for (const Vec6& x : space.projective_points())
    if (space.quadratic(x) == 0) ++count;
  return count;
}

IncidenceStructure elliptic_quadric_gq(int q) {
  QuadricSpace space(q);

  std::vector<Vec6> points;
  std::map<Vec6, int> index;
  for (const Vec6& x : space.projective_points()) {
    if (space.quadratic(x) == 0) {
      index.emplace(x, static_cast<int>(points.size()));
      points.push_back(x);
    }
  }

  IncidenceStructure inc;
  inc.num_points = static_cast<int>(points.size());
  std::set<std::vector<int>> lines;
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (space.bilinear(points[i], points[j]) != 0) continue;
      // the totally singular line through the two points
      std::vector<int> line{static_cast<int>(i), static_cast<int>(j)};
      for (int lam = 1; lam < space.F.q(); ++lam) {
        Vec6 z = space.normalize(space.add(points[i], space.scale(lam, points[j])));
        line.push_back(index.at(z));
      }
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  }
  inc.lines.assign(lines.begin(), lines.end());
  inc.normalize();
  return inc;
}

}  // namespace graphreg

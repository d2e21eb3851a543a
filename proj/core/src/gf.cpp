#include "graphreg/gf.hpp"

#include <stdexcept>

namespace graphreg {

namespace {

int gf4_mul(int a, int b) {
  // polynomial multiplication of (a1 x + a0)(b1 x + b0) mod x^2 + x + 1
  int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
  int c0 = a0 & b0;
  int c1 = (a1 & b0) ^ (a0 & b1);
  int c2 = a1 & b1;
  // x^2 = x + 1
  c1 ^= c2;
  c0 ^= c2;
  return (c1 << 1) | c0;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (q == 4) {
        add_[a * q + b] = a ^ b;
        mul_[a * q + b] = gf4_mul(a, b);
      } else {
        add_[a * q + b] = (a + b) % q;
        mul_[a * q + b] = (a * b) % q;
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    neg_[a] = 0;
    for (int b = 0; b < q; ++b)
      if (add_[a * q + b] == 0) neg_[a] = b;
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
  }
}

const GaloisField& GaloisField::get(int q) {
  static const GaloisField f2(2), f3(3), f4(4);
  switch (q) {
    case 2:
      return f2;
    case 3:
      return f3;
    case 4:
      return f4;
    default:
      throw std::invalid_argument("supported fields: GF(2), GF(3), GF(4)");
  }
}

}  // namespace graphreg

#pragma once

#include <vector>

namespace graphreg {

// Arithmetic tables for GF(2), GF(3) (prime fields) and GF(4) as
// GF(2)[x]/(x^2+x+1). Elements are 0..q-1; for GF(4), 2 and 3 stand for x
// and x+1.
class GaloisField {
 public:
  static const GaloisField& get(int q);  // throws for unsupported q

  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }  // inv(0) undefined, stored as 0

 private:
  explicit GaloisField(int q);

  int q_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace graphreg

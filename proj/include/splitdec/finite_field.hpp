#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitdec/group.hpp"

namespace splitdec {

// GF(p^m) as polynomials over GF(p) modulo a monic irreducible polynomial.
// An element is the integer sum c_i p^i of its coefficient vector, so 0 is
// zero, 1 is one and p is the class of x (when m > 1).
class FiniteField {
 public:
  static constexpr int kMaxOrder = 1024;

  // modulus lists coefficients from the constant term up, length m + 1, and
  // must be monic. Throws ValidationError on a reducible modulus or bad p.
  FiniteField(int p, int m, std::vector<int> modulus);

  // Prime fields and the shipped moduli: GF(4) x^2+x+1, GF(8) x^3+x+1,
  // GF(9) x^2+1. Other prime powers use the least irreducible monic modulus.
  static FiniteField of_order(int q);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;  // throws PreconditionError on 0
  int pow(int a, long long k) const;
  // Least element of multiplicative order q - 1.
  int primitive() const { return primitive_; }
  // x^i for i < m; these span the field additively.
  std::vector<int> basis() const;

  std::string str(int a) const;

 private:
  int p_, m_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
  int primitive_ = 1;
};

bool is_prime(long long n);
// Monic polynomial (low-to-high coefficients) irreducible over GF(p)?
bool is_irreducible(int p, const std::vector<int>& poly);

// Actions on the projective line: points 0..q-1 are field elements, point q
// is infinity. PSL2 is generated by translations z -> z + b for basis
// elements b, z -> w^2 z and z -> -1/z; PGL2 adds z -> w z (w primitive).
Group psl2(const FiniteField& F);
Group pgl2(const FiniteField& F);

}  // namespace splitdec

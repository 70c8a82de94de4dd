#include "splitdec/finite_field.hpp"

#include <algorithm>

#include "splitdec/errors.hpp"

namespace splitdec {

namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  for (int b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  throw PreconditionError("no inverse mod " + std::to_string(p));
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inv_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int f = a.back() * lead_inv % p;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly decode(int a, int p, int m) {
  Poly c(m, 0);
  for (int i = 0; i < m; ++i, a /= p) c[i] = a % p;
  return c;
}

int encode(const Poly& c, int p) {
  int v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
  return v;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  Poly f = poly;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  // every monic polynomial of degree 1..deg/2 as a trial divisor
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i, c /= p) g[i] = static_cast<int>(c % p);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw ValidationError("extension degree must be at least 1");
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > kMaxOrder) throw ValidationError("field order above " + std::to_string(kMaxOrder));
  }
  if (static_cast<int>(modulus_.size()) != m + 1 || modulus_.back() != 1)
    throw ValidationError("modulus must be monic of degree " + std::to_string(m));
  for (int& c : modulus_) {
    if (c < 0 || c >= p) c = ((c % p) + p) % p;
  }
  if (!is_irreducible(p, modulus_))
    throw ValidationError("modulus is reducible over GF(" + std::to_string(p) + ")");

  const std::size_t qq = static_cast<std::size_t>(q_) * q_;
  add_.resize(qq);
  mul_.resize(qq);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    const Poly ca = decode(a, p, m);
    Poly na(m);
    for (int i = 0; i < m; ++i) na[i] = (p - ca[i]) % p;
    neg_[a] = encode(na, p);
    for (int b = 0; b < q_; ++b) {
      const Poly cb = decode(b, p, m);
      Poly s(m);
      for (int i = 0; i < m; ++i) s[i] = (ca[i] + cb[i]) % p;
      add_[a * q_ + b] = encode(s, p);
      Poly prod(2 * m - 1, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      Poly r = poly_mod(prod, modulus_, p);
      r.resize(m, 0);
      mul_[a * q_ + b] = encode(r, p);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
  for (int a = 1; a < q_; ++a) {
    int k = 1;
    for (int x = a; x != 1; x = mul(x, a)) ++k;
    if (k == q_ - 1) {
      primitive_ = a;
      break;
    }
  }
}

FiniteField FiniteField::of_order(int q) {
  int p = 0, m = 0;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0 || !is_prime(p)) throw ValidationError("field order " + std::to_string(q) + " is not a prime power");
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw ValidationError("field order " + std::to_string(q) + " is not a prime power");
  if (q == 4) return FiniteField(2, 2, {1, 1, 1});
  if (q == 8) return FiniteField(2, 3, {1, 1, 0, 1});
  if (q == 9) return FiniteField(3, 2, {1, 0, 1});
  if (m == 1) return FiniteField(p, 1, {0, 1});
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly f(m + 1, 0);
    long long c = code;
    for (int i = 0; i < m; ++i, c /= p) f[i] = static_cast<int>(c % p);
    f[m] = 1;
    if (is_irreducible(p, f)) return FiniteField(p, m, f);
  }
  throw ValidationError("no irreducible modulus found");
}

int FiniteField::inv(int a) const {
  if (a == 0) throw PreconditionError("zero has no inverse");
  return inv_[a];
}

int FiniteField::pow(int a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::vector<int> FiniteField::basis() const {
  std::vector<int> b;
  int x = 1;
  for (int i = 0; i < m_; ++i, x *= p_) b.push_back(x);
  return b;
}

std::string FiniteField::str(int a) const {
  const Poly c = decode(a, p_, m_);
  std::string out;
  for (int i = m_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

// z -> (a z + b) / (c z + d) on points 0..q-1 and infinity = q
Perm mobius(const FiniteField& F, int a, int b, int c, int d) {
  const int q = F.q();
  std::vector<Perm::Point> img(q + 1);
  for (int z = 0; z < q; ++z) {
    const int num = F.add(F.mul(a, z), b);
    const int den = F.add(F.mul(c, z), d);
    img[z] = static_cast<Perm::Point>(den == 0 ? q : F.mul(num, F.inv(den)));
  }
  img[q] = static_cast<Perm::Point>(c == 0 ? q : F.mul(a, F.inv(c)));
  return Perm(std::move(img));
}

std::vector<Perm> psl2_gens(const FiniteField& F) {
  std::vector<Perm> gens;
  for (int b : F.basis()) gens.push_back(mobius(F, 1, b, 0, 1));
  const int w = F.primitive();
  gens.push_back(mobius(F, F.mul(w, w), 0, 0, 1));
  gens.push_back(mobius(F, 0, F.neg(1), 1, 0));
  return gens;
}

void require_q(const FiniteField& F) {
  if (F.q() < 4) throw ValidationError("projective line groups need q >= 4");
}

}  // namespace

Group psl2(const FiniteField& F) {
  require_q(F);
  return close_generators(F.q() + 1, psl2_gens(F), "L2_" + std::to_string(F.q()));
}

Group pgl2(const FiniteField& F) {
  require_q(F);
  auto gens = psl2_gens(F);
  gens.push_back(mobius(F, F.primitive(), 0, 0, 1));
  return close_generators(F.q() + 1, gens, "PGL2_" + std::to_string(F.q()));
}

}  // namespace splitdec

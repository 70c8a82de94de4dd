#include "splitdec/tables.hpp"

#include <algorithm>
#include <initializer_list>

#include "splitdec/errors.hpp"

namespace splitdec {

namespace {

Elem word(const Group& G, std::initializer_list<Elem> letters) {
  Elem r = 0;
  for (Elem l : letters) r = G.mul(r, l);
  return r;
}

// { s h : s in S }
std::vector<Elem> times(const Group& G, const std::vector<Elem>& S, Elem h) {
  std::vector<Elem> out;
  out.reserve(S.size());
  for (Elem s : S) out.push_back(G.mul(s, h));
  return out;
}

void append(std::vector<Elem>& to, const std::vector<Elem>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

SubgroupRef kernel_from_generators(const Group& G, std::size_t trailing) {
  const auto& gens = G.generators();
  require(gens.size() > trailing, "group has too few generators for this rule");
  std::vector<Elem> k(gens.begin(), gens.end() - static_cast<std::ptrdiff_t>(trailing));
  return subgroup_generated(G, k);
}

Elem least_nonidentity(const Group& G, const SubgroupRef& A, Elem g) {
  for (Elem a : A.members)
    if (a != 0 && G.commute(a, g)) return a;
  throw PreconditionError("C_A(g) is trivial");
}

std::size_t centralizer_size(const Group& G, const SubgroupRef& A, Elem g) {
  return static_cast<std::size_t>(
      std::count_if(A.members.begin(), A.members.end(), [&](Elem a) { return G.commute(a, g); }));
}

}  // namespace

SplitDecomposition order72_split(const Group& G, Elem u, Elem v, Elem x, Elem y) {
  require(G.order() == 72, "order72_split needs a group of order 72");
  require(G.pow(x, 4) == 0 && G.pow(y, 2) == 0 && G.mul(G.conj(x, y), x) == 0,
          "x, y do not satisfy x^4 = y^2 = x^y x = 1");
  require(G.pow(u, 3) == 0 && G.pow(v, 3) == 0 && G.commute(u, v), "u, v do not generate C3 x C3");
  require(G.conj(u, x) == v && G.conj(v, x) == G.inv(u) && G.conj(u, y) == u &&
              G.conj(v, y) == G.inv(v),
          "u, v, x, y do not satisfy the conjugation relations");
  const SubgroupRef A = subgroup_generated(G, {u, v});
  require(A.size() == 9, "<u, v> does not have order 9");
  const Elem u2 = G.mul(u, u), v2 = G.mul(v, v), x2 = G.mul(x, x), x3 = G.mul(x2, x);
  const Elem xy = G.mul(x, y), x2y = G.mul(x2, y), x3y = G.mul(x3, y);
  const auto Ay = commutator_set(G, A, y), Axy = commutator_set(G, A, xy);
  const auto Ax2y = commutator_set(G, A, x2y), Ax3y = commutator_set(G, A, x3y);

  std::vector<std::vector<Elem>> parts(3);
  append(parts[0], times(G, A.members, x));
  append(parts[0], times(G, Ay, y));
  append(parts[0], times(G, Axy, xy));
  append(parts[0], times(G, Ax2y, word(G, {v, x2y})));
  append(parts[0], times(G, Ax3y, word(G, {u, v, x3y})));

  append(parts[1], times(G, A.members, x2));
  append(parts[1], times(G, Ay, word(G, {u, y})));
  append(parts[1], times(G, Axy, word(G, {u2, v, xy})));
  append(parts[1], times(G, Ax2y, word(G, {v2, x2y})));
  append(parts[1], times(G, Ax3y, word(G, {u2, v2, x3y})));

  append(parts[2], times(G, A.members, x3));
  append(parts[2], times(G, Ay, word(G, {u2, y})));
  append(parts[2], times(G, Axy, word(G, {u, v2, xy})));
  append(parts[2], times(G, Ax2y, x2y));
  append(parts[2], times(G, Ax3y, x3y));
  return make_decomposition(G, A, std::move(parts));
}

SplitDecomposition order72_split(const Group& G) {
  const auto& g = G.generators();
  require(g.size() == 4, "order72_split expects generators u, v, x, y");
  return order72_split(G, g[0], g[1], g[2], g[3]);
}

SplitDecomposition frobenius_q8_split(const Group& G, const SubgroupRef& A, Elem i, Elem j) {
  require(A.is_abelian && is_frobenius_with_kernel(G, A), "A is not an abelian Frobenius kernel");
  const Elem minus1 = G.mul(i, i), k = G.mul(i, j);
  require(G.order_of(i) == 4 && G.mul(j, j) == minus1 && G.mul(k, k) == minus1 && minus1 != 0 &&
              G.order() == 8 * A.size(),
          "i, j do not generate a Q8 complement");
  std::vector<std::vector<Elem>> parts(3);
  append(parts[0], times(G, A.members, minus1));
  for (Elem q : {i, j, k}) {
    append(parts[1], times(G, A.members, q));
    append(parts[2], times(G, A.members, G.inv(q)));
  }
  return make_decomposition(G, A, std::move(parts));
}

SplitDecomposition frobenius_q8_split(const Group& G) {
  const auto& g = G.generators();
  SubgroupRef A = kernel_from_generators(G, 2);
  return frobenius_q8_split(G, A, g[g.size() - 2], g[g.size() - 1]);
}

SplitDecomposition klein_complement_split(const Group& G, const SubgroupRef& A, Elem s1, Elem s2) {
  const Elem s3 = G.mul(s1, s2);
  require(A.is_abelian && A.is_normal && A.size() == 27, "A is not a normal abelian subgroup of order 27");
  require(G.order_of(s1) == 2 && G.order_of(s2) == 2 && G.commute(s1, s2) && s3 != 0,
          "s1, s2 do not generate a Klein four-group");
  require(G.order() == 4 * A.size(), "G is not A S");
  for (Elem s : {s1, s2, s3}) require(centralizer_size(G, A, s) == 3, "|C_A(s_k)| is not 3");
  const Elem a1 = least_nonidentity(G, A, s1), a2 = least_nonidentity(G, A, s2),
             a3 = least_nonidentity(G, A, s3);
  const auto C1 = commutator_set(G, A, s1), C2 = commutator_set(G, A, s2),
             C3 = commutator_set(G, A, s3);
  auto sq = [&](Elem a) { return G.mul(a, a); };
  std::vector<std::vector<Elem>> parts(3);
  append(parts[0], times(G, C1, s1));
  append(parts[0], times(G, C2, G.mul(a2, s2)));
  append(parts[0], times(G, C3, G.mul(a3, s3)));
  append(parts[1], times(G, C2, s2));
  append(parts[1], times(G, C1, G.mul(a1, s1)));
  append(parts[1], times(G, C3, G.mul(sq(a3), s3)));
  append(parts[2], times(G, C3, s3));
  append(parts[2], times(G, C1, G.mul(sq(a1), s1)));
  append(parts[2], times(G, C2, G.mul(sq(a2), s2)));
  return make_decomposition(G, A, std::move(parts));
}

SplitDecomposition klein_complement_split(const Group& G) {
  const auto& g = G.generators();
  SubgroupRef A = kernel_from_generators(G, 2);
  return klein_complement_split(G, A, g[g.size() - 2], g[g.size() - 1]);
}

SplitDecomposition cyclic4_complement_split(const Group& G, const SubgroupRef& A, Elem s) {
  require(A.is_abelian && A.is_normal, "A is not a normal abelian subgroup");
  require(G.order_of(s) == 4 && G.order() == 4 * A.size(), "G is not A <s> with s of order 4");
  const Elem t = G.mul(s, s);
  require(centralizer_size(G, A, t) == 3, "|C_A(t)| is not 3");
  const Elem z = least_nonidentity(G, A, t), z2 = G.mul(z, z);
  const auto At = commutator_set(G, A, t);
  require(At.size() > 1, "[A, t] is trivial");
  std::vector<std::vector<Elem>> parts(3);
  append(parts[0], times(G, A.members, s));
  append(parts[0], times(G, At, G.mul(z, t)));
  append(parts[1], times(G, At, t));
  append(parts[2], times(G, A.members, G.inv(s)));
  append(parts[2], times(G, At, G.mul(z2, t)));
  return make_decomposition(G, A, std::move(parts));
}

SplitDecomposition cyclic4_complement_split(const Group& G) {
  const auto& g = G.generators();
  SubgroupRef A = kernel_from_generators(G, 1);
  return cyclic4_complement_split(G, A, g.back());
}

SplitDecomposition central_c3_split(const Group& G, const SubgroupRef& A, Elem t) {
  require(A.is_abelian && A.is_normal && G.order() == 2 * A.size(), "A is not an abelian subgroup of index 2");
  require(G.order_of(t) == 2 && !A.contains(t), "t is not an involution outside A");
  const SubgroupRef Z = center(G);
  require(Z.size() == 3 && is_subset(Z.members, A.members), "Z(G) is not of order 3 inside A");
  const Elem z = Z.members[1], z2 = G.mul(z, z);
  const auto B = commutator_set(G, A, t);
  std::vector<std::vector<Elem>> parts(3);
  parts[0] = times(G, B, t);
  parts[1] = times(G, B, G.mul(z, t));
  parts[2] = times(G, B, G.mul(z2, t));
  return make_decomposition(G, A, std::move(parts));
}

}  // namespace splitdec

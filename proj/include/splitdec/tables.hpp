#pragma once

#include "splitdec/decomposition.hpp"

namespace splitdec {

// Strict 3-splits written as coset rules rather than element tables. Each
// builder checks the structure it relies on and throws PreconditionError
// otherwise; the output is not validated here.

// G = A S with A = <u, v> of order 9 and S = <x, y> = D8, where u^x = v,
// v^x = u^-1, u^y = u, v^y = v^-1:
//   B1 = Ax  ∪ [A,y]y   ∪ [A,xy]xy     ∪ [A,x²y]v x²y  ∪ [A,x³y]uv x³y
//   B2 = Ax² ∪ [A,y]uy  ∪ [A,xy]u²v xy ∪ [A,x²y]v² x²y ∪ [A,x³y]u²v² x³y
//   B3 = Ax³ ∪ [A,y]u²y ∪ [A,xy]uv² xy ∪ [A,x²y]x²y    ∪ [A,x³y]x³y
SplitDecomposition order72_split(const Group& G, Elem u, Elem v, Elem x, Elem y);
// Uses the generators u, v, x, y of the order72 constructor.
SplitDecomposition order72_split(const Group& G);

// Frobenius group with abelian kernel A and complement Q8 = <i, j>:
//   B1 = A(-1), B2 = Ai ∪ Aj ∪ Ak, B3 = A(-i) ∪ A(-j) ∪ A(-k).
SplitDecomposition frobenius_q8_split(const Group& G, const SubgroupRef& A, Elem i, Elem j);
// Kernel = all generators but the last two, which are i and j.
SplitDecomposition frobenius_q8_split(const Group& G);

// G = A S, A elementary abelian of order 27, S = {1, s1, s2, s3} Klein with
// C_A(s_k) = <a_k> of order 3 (a_k its least nonidentity element):
//   B1 = [A,s1]s1 ∪ [A,s2]a2 s2 ∪ [A,s3]a3 s3
//   B2 = [A,s2]s2 ∪ [A,s1]a1 s1 ∪ [A,s3]a3² s3
//   B3 = [A,s3]s3 ∪ [A,s1]a1² s1 ∪ [A,s2]a2² s2
SplitDecomposition klein_complement_split(const Group& G, const SubgroupRef& A, Elem s1, Elem s2);
// Kernel = all generators but the last two, which are s1 and s2.
SplitDecomposition klein_complement_split(const Group& G);

// G = A S, S = <s> cyclic of order 4, t = s², |C_A(t)| = 3 with C_A(t) = <z>:
//   B1 = As ∪ [A,t]zt, B2 = [A,t]t, B3 = As³ ∪ [A,t]z²t.
SplitDecomposition cyclic4_complement_split(const Group& G, const SubgroupRef& A, Elem s);
// Kernel = all generators but the last, which is s.
SplitDecomposition cyclic4_complement_split(const Group& G);

// G = Z × F, Z of order 3 central, F Frobenius with kernel B and involution t;
// A = ZB, z generates Z: parts Bt, Bzt, Bz²t.
SplitDecomposition central_c3_split(const Group& G, const SubgroupRef& A, Elem t);

}  // namespace splitdec

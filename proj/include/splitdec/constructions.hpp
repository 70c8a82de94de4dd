#pragma once

#include <vector>

#include "splitdec/decomposition.hpp"

namespace splitdec {

// C_A(g) a1 == C_A(g) a2, which holds iff a1 g and a2 g commute.
bool commute_coset_criterion(const Group& G, const SubgroupRef& A, Elem g, Elem a1, Elem a2);

// Ag split into |C_A(g)| noncommuting sets of size |A : C_A(g)|:
// B_i = { c_i a_j g } over a transversal {a_j} of least coset elements.
std::vector<std::vector<Elem>> coset_partition(const Group& G, const SubgroupRef& A, Elem g);

// Right cosets Ag of A other than A itself, each as a sorted list, ordered by
// least element.
std::vector<std::vector<Elem>> nontrivial_cosets(const Group& G, const SubgroupRef& A);

// A maximal abelian: every nontrivial coset is cut by coset_partition.
SplitDecomposition maximal_abelian_construction(const Group& G, const SubgroupRef& A);

// A a Frobenius kernel: the nontrivial cosets are the parts.
SplitDecomposition frobenius_coset_construction(const Group& G, const SubgroupRef& A);

// Strict n-split to strict (n+1)-split over the same A. Splits the first part
// of size >= 4, else takes the least noncommuting pair from two parts of size
// >= 3. Throws PreconditionError "not promotable" otherwise.
SplitDecomposition promote(const SplitDecomposition& D);

// Maximal abelian subgroups pairwise trivially intersecting and covering G
// (A among them). Layer i of each conjugacy class of maximal abelian
// subgroups is the i-th nonidentity element of every conjugate other than A;
// part i is the union of the layer-i lists of all classes.
SplitDecomposition ti_cover_construction(const Group& G, const SubgroupRef& A);

// True when the maximal abelian subgroups form a TI cover of G.
bool has_ti_cover(const Group& G);

}  // namespace splitdec

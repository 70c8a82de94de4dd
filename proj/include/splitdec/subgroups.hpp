#pragma once

#include <cstddef>
#include <vector>

#include "splitdec/group.hpp"

namespace splitdec {

struct SubgroupRef {
  std::vector<Elem> members;  // sorted, contains 0
  bool is_abelian = false;
  bool is_normal = false;

  std::size_t size() const { return members.size(); }
  bool contains(Elem x) const;
  bool operator==(const SubgroupRef& o) const { return members == o.members; }
};

// Sorts and dedups members and fills the flags. Throws ValidationError when
// the set is not a subgroup.
SubgroupRef make_subgroup(const Group& G, std::vector<Elem> members);
SubgroupRef subgroup_generated(const Group& G, const std::vector<Elem>& gens);
SubgroupRef trivial_subgroup(const Group& G);
SubgroupRef whole_group(const Group& G);
bool is_subgroup(const Group& G, const std::vector<Elem>& sorted_members);

// Elements commuting with every member of S; all of G when S is empty.
SubgroupRef centralizer(const Group& G, const std::vector<Elem>& S);
SubgroupRef center(const Group& G);
int element_order(const Group& G, Elem g);
const std::vector<std::vector<Elem>>& conjugacy_classes(const Group& G);

std::vector<Elem> conjugate_set(const Group& G, const std::vector<Elem>& S, Elem g);
SubgroupRef normalizer(const Group& G, const SubgroupRef& H);
SubgroupRef intersect(const Group& G, const SubgroupRef& H, const SubgroupRef& K);
std::vector<Elem> sorted_intersection(const std::vector<Elem>& a, const std::vector<Elem>& b);
bool is_subset(const std::vector<Elem>& sorted_a, const std::vector<Elem>& sorted_b);

// One representative per conjugacy class of abelian subgroups, ordered by
// size then by member list. The representative is the lexicographically least
// member list in its class. cap bounds the total number of abelian subgroups
// stored while deduplicating (ResourceError above it).
std::vector<SubgroupRef> abelian_subgroups_up_to_conjugacy(const Group& G, bool include_trivial,
                                                           std::size_t cap = 100'000);

// Every abelian subgroup maximal under inclusion, ordered by size then members.
std::vector<SubgroupRef> maximal_abelian_subgroups(const Group& G);

// A normal, 1 < A < G, gcd(|A|, |G:A|) = 1 and C_A(g) = 1 for all g outside A.
bool is_frobenius_with_kernel(const Group& G, const SubgroupRef& A);

// Deterministic Sylow p-subgroup (grown from the identity by least p-elements
// of the normalizer).
SubgroupRef sylow_subgroup(const Group& G, int p);

// [A, g] = { a^-1 a^g : a in A } for abelian A normalized by g.
std::vector<Elem> commutator_set(const Group& G, const SubgroupRef& A, Elem g);

std::vector<int> prime_factors(long long n);

}  // namespace splitdec

#include "splitdec/constructions.hpp"

#include <algorithm>
#include <map>

#include "splitdec/errors.hpp"

namespace splitdec {

namespace {

std::vector<Elem> centralizer_in(const Group& G, const SubgroupRef& A, Elem g) {
  std::vector<Elem> out;
  for (Elem a : A.members)
    if (G.commute(a, g)) out.push_back(a);
  return out;
}

void require_abelian(const SubgroupRef& A) {
  if (!A.is_abelian) throw PreconditionError("A is not abelian");
}

}  // namespace

bool commute_coset_criterion(const Group& G, const SubgroupRef& A, Elem g, Elem a1, Elem a2) {
  require_abelian(A);
  if (!A.contains(a1) || !A.contains(a2)) throw PreconditionError("a1 and a2 must lie in A");
  Elem q = G.mul(a1, G.inv(a2));
  return G.commute(q, g);
}

std::vector<std::vector<Elem>> coset_partition(const Group& G, const SubgroupRef& A, Elem g) {
  require_abelian(A);
  if (A.contains(g)) throw PreconditionError("g lies in A");
  const std::vector<Elem> C = centralizer_in(G, A, g);
  // Transversal: least element of each coset C a.
  std::vector<Elem> transversal;
  std::vector<char> seen(G.order(), 0);
  for (Elem a : A.members) {
    if (seen[a]) continue;
    transversal.push_back(a);
    for (Elem c : C) seen[G.mul(c, a)] = 1;
  }
  std::vector<std::vector<Elem>> parts;
  for (Elem c : C) {
    std::vector<Elem> B;
    for (Elem a : transversal) B.push_back(G.mul(G.mul(c, a), g));
    std::sort(B.begin(), B.end());
    parts.push_back(std::move(B));
  }
  return parts;
}

std::vector<std::vector<Elem>> nontrivial_cosets(const Group& G, const SubgroupRef& A) {
  std::vector<char> seen(G.order(), 0);
  for (Elem a : A.members) seen[a] = 1;
  std::vector<std::vector<Elem>> out;
  for (Elem g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    std::vector<Elem> coset;
    for (Elem a : A.members) {
      Elem x = G.mul(a, g);
      seen[x] = 1;
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

SplitDecomposition maximal_abelian_construction(const Group& G, const SubgroupRef& A) {
  require_abelian(A);
  if (centralizer(G, A.members).size() != A.size())
    throw PreconditionError("A is not a maximal abelian subgroup");
  std::vector<std::vector<Elem>> parts;
  for (const auto& coset : nontrivial_cosets(G, A))
    for (auto& B : coset_partition(G, A, coset.front())) parts.push_back(std::move(B));
  return make_decomposition(G, A, std::move(parts));
}

SplitDecomposition frobenius_coset_construction(const Group& G, const SubgroupRef& A) {
  if (!A.is_abelian || !is_frobenius_with_kernel(G, A))
    throw PreconditionError("A is not an abelian Frobenius kernel");
  return make_decomposition(G, A, nontrivial_cosets(G, A));
}

SplitDecomposition promote(const SplitDecomposition& D) {
  if (!D.strict) throw PreconditionError("promote needs a strict decomposition");
  const Group& G = D.group;
  SplitDecomposition out = D;
  for (std::size_t i = 0; i < D.parts.size(); ++i) {
    const auto& B = D.parts[i];
    if (B.size() < 4) continue;
    const std::size_t half = (B.size() + 1) / 2;
    out.parts[i].assign(B.begin(), B.begin() + static_cast<std::ptrdiff_t>(half));
    out.parts.emplace_back(B.begin() + static_cast<std::ptrdiff_t>(half), B.end());
    return out;
  }
  // Least (x, y) with x < y from distinct parts of size >= 3.
  std::vector<std::pair<Elem, std::size_t>> pool;
  for (std::size_t i = 0; i < D.parts.size(); ++i)
    if (D.parts[i].size() >= 3)
      for (Elem x : D.parts[i]) pool.push_back({x, i});
  std::sort(pool.begin(), pool.end());
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      auto [x, i] = pool[a];
      auto [y, j] = pool[b];
      if (i == j || G.commute(x, y)) continue;
      std::erase(out.parts[i], x);
      std::erase(out.parts[j], y);
      out.parts.push_back({x, y});
      return out;
    }
  throw PreconditionError("not promotable: no part of size >= 4 and no noncommuting pair "
                          "across parts of size >= 3");
}

bool has_ti_cover(const Group& G) {
  std::size_t total = 0;
  for (const auto& M : maximal_abelian_subgroups(G)) total += M.size() - 1;
  return total == G.order() - 1;
}

SplitDecomposition ti_cover_construction(const Group& G, const SubgroupRef& A) {
  const auto maxab = maximal_abelian_subgroups(G);
  if (!has_ti_cover(G))
    throw PreconditionError("TI cover inapplicable: maximal abelian subgroups of " + G.name() +
                            " do not intersect trivially");
  if (std::find(maxab.begin(), maxab.end(), A) == maxab.end())
    throw PreconditionError("TI cover inapplicable: A is not a maximal abelian subgroup");
  // Group the subgroups into conjugacy classes, keyed by the least conjugate.
  std::map<std::vector<Elem>, std::vector<const SubgroupRef*>> classes;
  std::vector<std::vector<Elem>> key_order;
  for (const auto& M : maxab) {
    std::vector<Elem> key = M.members;
    for (Elem g = 0; g < G.order(); ++g) {
      auto c = conjugate_set(G, M.members, g);
      std::sort(c.begin(), c.end());
      key = std::min(key, c);
    }
    auto [it, fresh] = classes.try_emplace(key);
    if (fresh) key_order.push_back(key);
    it->second.push_back(&M);
  }
  std::vector<std::vector<Elem>> parts;
  for (const auto& key : key_order) {
    for (const SubgroupRef* M : classes[key]) {
      if (M->members == A.members) continue;
      for (std::size_t i = 1; i < M->size(); ++i) {
        if (parts.size() < i) parts.resize(i);
        parts[i - 1].push_back(M->members[i]);
      }
    }
  }
  return make_decomposition(G, A, std::move(parts));
}

}  // namespace splitdec

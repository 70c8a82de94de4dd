#include "splitdec/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "splitdec/errors.hpp"

namespace splitdec {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool normal_in(const Group& G, const std::vector<Elem>& sorted) {
  for (std::size_t k = 0; k < G.generators().size(); ++k) {
    const auto& cg = G.conj_by_generator(k);
    for (Elem x : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), cg[x])) return false;
  }
  return true;
}

bool abelian_set(const Group& G, const std::vector<Elem>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!G.commute(s[i], s[j])) return false;
  return true;
}

SubgroupRef with_flags(const Group& G, std::vector<Elem> sorted) {
  SubgroupRef H;
  H.members = std::move(sorted);
  H.is_abelian = abelian_set(G, H.members);
  H.is_normal = normal_in(G, H.members);
  return H;
}

// Sorted elements of H<g> for abelian H and g centralizing H.
std::vector<Elem> extend_by(const Group& G, const std::vector<Elem>& H, Elem g) {
  std::vector<Elem> out;
  Elem p = 0;
  do {
    for (Elem h : H) out.push_back(G.mul(h, p));
    p = G.mul(p, g);
  } while (!std::binary_search(H.begin(), H.end(), p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool SubgroupRef::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool is_subgroup(const Group& G, const std::vector<Elem>& s) {
  if (s.empty() || s.front() != 0) return false;
  for (Elem a : s) {
    if (!std::binary_search(s.begin(), s.end(), G.inv(a))) return false;
    for (Elem b : s)
      if (!std::binary_search(s.begin(), s.end(), G.mul(a, b))) return false;
  }
  return true;
}

SubgroupRef make_subgroup(const Group& G, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Elem x : members)
    if (x >= G.order()) throw ValidationError("element index out of range");
  if (!is_subgroup(G, members)) throw ValidationError("element set is not a subgroup");
  return with_flags(G, std::move(members));
}

SubgroupRef subgroup_generated(const Group& G, const std::vector<Elem>& gens) {
  std::vector<Elem> list{0};
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem g : gens) {
      Elem y = G.mul(list[i], g);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return with_flags(G, std::move(list));
}

SubgroupRef trivial_subgroup(const Group& G) { return with_flags(G, {0}); }

SubgroupRef whole_group(const Group& G) {
  std::vector<Elem> all(G.order());
  std::iota(all.begin(), all.end(), Elem{0});
  SubgroupRef H;
  H.members = std::move(all);
  H.is_abelian = G.is_abelian();
  H.is_normal = true;
  return H;
}

std::vector<Elem> sorted_intersection(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> out;
  // centralizers are usually tiny next to the set they are cut from
  if (a.size() * 16 < b.size() || b.size() * 16 < a.size()) {
    const auto& small = a.size() < b.size() ? a : b;
    const auto& large = a.size() < b.size() ? b : a;
    for (Elem x : small)
      if (std::binary_search(large.begin(), large.end(), x)) out.push_back(x);
    return out;
  }
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SubgroupRef centralizer(const Group& G, const std::vector<Elem>& S) {
  if (S.empty()) return whole_group(G);
  std::vector<Elem> c = G.centralizer_of(S.front());
  for (std::size_t i = 1; i < S.size() && c.size() > 1; ++i)
    c = sorted_intersection(c, G.centralizer_of(S[i]));
  return with_flags(G, std::move(c));
}

SubgroupRef center(const Group& G) {
  std::vector<Elem> z;
  for (const auto& cls : G.classes())
    if (cls.size() == 1) z.push_back(cls.front());
  std::sort(z.begin(), z.end());
  SubgroupRef H;
  H.members = std::move(z);
  H.is_abelian = true;
  H.is_normal = true;
  return H;
}

int element_order(const Group& G, Elem g) { return G.order_of(g); }

const std::vector<std::vector<Elem>>& conjugacy_classes(const Group& G) { return G.classes(); }

std::vector<Elem> conjugate_set(const Group& G, const std::vector<Elem>& S, Elem g) {
  std::vector<Elem> out;
  out.reserve(S.size());
  Elem gi = G.inv(g);
  for (Elem x : S) out.push_back(G.mul(G.mul(gi, x), g));
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupRef normalizer(const Group& G, const SubgroupRef& H) {
  std::vector<Elem> n;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    Elem gi = G.inv(g);
    for (Elem x : H.members)
      if (!H.contains(G.mul(G.mul(gi, x), g))) {
        ok = false;
        break;
      }
    if (ok) n.push_back(g);
  }
  return with_flags(G, std::move(n));
}

SubgroupRef intersect(const Group& G, const SubgroupRef& H, const SubgroupRef& K) {
  return with_flags(G, sorted_intersection(H.members, K.members));
}

std::vector<SubgroupRef> abelian_subgroups_up_to_conjugacy(const Group& G, bool include_trivial,
                                                           std::size_t cap) {
  // Every abelian subgroup seen so far, mapped to its class id. Filled a whole
  // conjugacy orbit at a time, so a lookup hit means "already classified".
  std::unordered_map<std::vector<Elem>, std::size_t, VecHash> seen;
  std::vector<std::vector<Elem>> reps;

  auto classify = [&](const std::vector<Elem>& H) -> std::pair<std::size_t, bool> {
    if (auto it = seen.find(H); it != seen.end()) return {it->second, false};
    std::size_t id = reps.size();
    std::vector<std::vector<Elem>> orbit{H};
    seen.emplace(H, id);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t k = 0; k < G.generators().size(); ++k) {
        const auto& cg = G.conj_by_generator(k);
        std::vector<Elem> K;
        K.reserve(H.size());
        for (Elem x : orbit[i]) K.push_back(cg[x]);
        std::sort(K.begin(), K.end());
        if (seen.emplace(K, id).second) {
          if (seen.size() > cap)
            throw ResourceError("abelian subgroup enumeration exceeds cap of " +
                                std::to_string(cap));
          orbit.push_back(std::move(K));
        }
      }
    reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
    return {id, true};
  };

  std::vector<std::size_t> frontier{classify({0}).first};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      const std::vector<Elem> H = reps[id];
      std::vector<Elem> C = G.centralizer_of(H.front());
      for (std::size_t i = 1; i < H.size(); ++i) C = sorted_intersection(C, G.centralizer_of(H[i]));
      std::unordered_map<std::vector<Elem>, char, VecHash> local;
      for (Elem g : C) {
        if (std::binary_search(H.begin(), H.end(), g)) continue;
        auto K = extend_by(G, H, g);
        if (!local.emplace(K, 1).second) continue;
        auto [kid, fresh] = classify(K);
        if (fresh) next.push_back(kid);
      }
    }
    frontier = std::move(next);
  }

  std::vector<SubgroupRef> out;
  for (auto& r : reps) {
    if (r.size() == 1 && !include_trivial) continue;
    SubgroupRef H;
    H.members = r;
    H.is_abelian = true;
    H.is_normal = normal_in(G, H.members);
    out.push_back(std::move(H));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<SubgroupRef> maximal_abelian_subgroups(const Group& G) {
  // A maximal abelian subgroup of H that is not all of H lies in C_H(h) for
  // some noncentral h, and is maximal abelian there; recurse on centralizers.
  std::set<std::vector<Elem>> found;
  std::unordered_map<std::vector<Elem>, char, VecHash> visited;
  std::vector<std::vector<Elem>> stack;
  {
    std::vector<Elem> all(G.order());
    std::iota(all.begin(), all.end(), Elem{0});
    stack.push_back(std::move(all));
  }
  while (!stack.empty()) {
    auto H = std::move(stack.back());
    stack.pop_back();
    bool abelian = true;
    std::vector<std::vector<Elem>> subs;
    const bool whole = H.size() == G.order();
    for (Elem h : H) {
      auto c = whole ? G.centralizer_of(h) : sorted_intersection(G.centralizer_of(h), H);
      if (c.size() == H.size()) continue;
      abelian = false;
      if (visited.emplace(c, 1).second) subs.push_back(std::move(c));
    }
    if (abelian) {
      found.insert(std::move(H));
      continue;
    }
    for (auto& s : subs) stack.push_back(std::move(s));
  }
  std::vector<SubgroupRef> out;
  for (const auto& m : found) {
    SubgroupRef H;
    H.members = m;
    H.is_abelian = true;
    H.is_normal = normal_in(G, m);
    out.push_back(std::move(H));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

bool is_frobenius_with_kernel(const Group& G, const SubgroupRef& A) {
  const std::size_t a = A.size(), n = G.order();
  if (a <= 1 || a >= n || !A.is_normal) return false;
  if (std::gcd(a, n / a) != 1) return false;
  for (Elem x : A.members) {
    if (x == 0) continue;
    if (!is_subset(G.centralizer_of(x), A.members)) return false;
  }
  return true;
}

std::vector<int> prime_factors(long long n) {
  std::vector<int> ps;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

SubgroupRef sylow_subgroup(const Group& G, int p) {
  std::size_t target = 1, n = G.order();
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  auto is_p_power = [p](long long k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  SubgroupRef P = trivial_subgroup(G);
  while (P.size() < target) {
    SubgroupRef N = normalizer(G, P);
    bool grown = false;
    for (Elem x : N.members) {
      if (P.contains(x) || !is_p_power(G.order_of(x))) continue;
      // x normalizes P, so P<x> is a p-group
      std::vector<Elem> gens = P.members;
      gens.push_back(x);
      P = subgroup_generated(G, gens);
      grown = true;
      break;
    }
    if (!grown) throw Error("Sylow growth stalled");  // unreachable by Sylow's theorem
  }
  return P;
}

std::vector<Elem> commutator_set(const Group& G, const SubgroupRef& A, Elem g) {
  std::vector<Elem> out;
  for (Elem a : A.members) out.push_back(G.mul(G.inv(a), G.conj(a, g)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace splitdec

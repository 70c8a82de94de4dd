#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitdec/coloring.hpp"
#include "splitdec/decomposition.hpp"

namespace splitdec {

struct BoundCertificate {
  enum class Kind { AbelianOverlap, TiPair, OrderBound };
  enum class Scope { FixedA, Global };
  Kind kind = Kind::AbelianOverlap;
  Scope scope = Scope::FixedA;
  int bound = 0;
  // U for abelian-overlap; H and K for ti-pair; empty for order-bound.
  std::vector<std::vector<Elem>> witnesses;
};

std::string kind_name(BoundCertificate::Kind k);
nlohmann::json to_json(const BoundCertificate& c, const Group& G);

struct MinOptions {
  bool strict = true;
  std::uint64_t budget = Budget::kDefaultNodes;
  // Color one representative per isomorphism class of components and transport.
  bool use_isomorphism = true;
  // OpenMP over components (and over A for min_over_all_A); serial otherwise.
  bool parallel = true;
  // Stop looking above this n (the result is then infeasible-below-cap).
  std::optional<int> n_max;
};

struct MinResult {
  Group group;
  std::vector<Elem> A;
  bool strict = true;
  bool feasible = false;  // some n <= n_max works
  int n = 0;
  std::optional<SplitDecomposition> decomposition;
  std::optional<BoundCertificate> certificate;  // absent: exhaustive search
  bool proven_exact = false;
  std::uint64_t nodes = 0;
};

nlohmann::json to_json(const MinResult& r, const std::string& decomposition_file = "");

// max over abelian U not inside A of |U| - |U ∩ A| (the commuting set U \ A
// needs that many parts). Candidates are the maximal abelian subgroups, or the
// abelian centralizers above kMaximalAbelianLimit.
constexpr std::size_t kMaximalAbelianLimit = 5000;
// Maximal abelian subgroups as sorted member lists: all of them up to
// kMaximalAbelianLimit, the abelian centralizers C(x) above it.
std::vector<std::vector<Elem>> abelian_candidates(const Group& G);
std::optional<BoundCertificate> abelian_overlap_bound(const Group& G, const SubgroupRef& A);

// ti-pair: maximal abelian H, K with H ∩ K = 1, bound min(|H|, |K|) - 1.
// Trivial intersection alone does not give the bound (S4 has such a pair of
// order 4 but a strict 2-split), so the pair must also be separated:
// C(h) ∩ K = 1 for every h in H \ 1, or the same with H and K swapped.
std::optional<BoundCertificate> ti_pair_bound(const Group& G);
// order-bound for simple G: least n with |G| <= (n+1)^(n+1).
std::optional<BoundCertificate> order_bound(const Group& G);
bool is_simple(const Group& G);

// Every certificate: abelian-overlap when A is given, then ti-pair and order-bound.
std::vector<BoundCertificate> certificates(const Group& G, const SubgroupRef* A);

// Least n for which G \ A splits into n noncommuting parts (each of size >= 2
// when strict). Infeasible strict cases return feasible = false, proven.
MinResult exact_min_fixed_A(const Group& G, const SubgroupRef& A, const MinOptions& opt = {});

// Whether a strict split with exactly n parts exists. Feasibility is not
// monotone in n (S3 over C3 splits strictly into 1 part, not 2), so this is a
// separate decision. On success the decomposition is attached.
MinResult strict_feasible(const Group& G, const SubgroupRef& A, int n, const MinOptions& opt = {});

// Minimum over conjugacy-class representatives of abelian A (trivial A included).
MinResult min_over_all_A(const Group& G, const MinOptions& opt = {});

}  // namespace splitdec

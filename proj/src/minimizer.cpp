#include "splitdec/minimizer.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "splitdec/commuting_graph.hpp"
#include "splitdec/errors.hpp"

namespace splitdec {

std::string kind_name(BoundCertificate::Kind k) {
  switch (k) {
    case BoundCertificate::Kind::AbelianOverlap: return "abelian-overlap";
    case BoundCertificate::Kind::TiPair: return "ti-pair";
    case BoundCertificate::Kind::OrderBound: return "order-bound";
  }
  return "unknown";
}

nlohmann::json to_json(const BoundCertificate& c, const Group& G) {
  nlohmann::json j;
  j["kind"] = kind_name(c.kind);
  j["scope"] = c.scope == BoundCertificate::Scope::FixedA ? "fixed-A" : "global";
  j["bound"] = c.bound;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : c.witnesses) {
    nlohmann::json list = nlohmann::json::array();
    for (Elem x : w) list.push_back(G.label(x));
    j["witnesses"].push_back(std::move(list));
  }
  return j;
}

nlohmann::json to_json(const MinResult& r, const std::string& decomposition_file) {
  nlohmann::json j;
  j["group"] = r.group.name();
  j["A"] = nlohmann::json::array();
  for (Elem a : r.A) j["A"].push_back(r.group.label(a));
  j["strict"] = r.strict;
  j["n"] = r.feasible ? nlohmann::json(r.n) : nlohmann::json(nullptr);
  j["proven"] = r.proven_exact;
  j["certificate"] = r.certificate ? to_json(*r.certificate, r.group)
                                   : nlohmann::json{{"kind", "exhaustive"}};
  j["decomposition_file"] =
      decomposition_file.empty() ? nlohmann::json(nullptr) : nlohmann::json(decomposition_file);
  j["nodes"] = r.nodes;
  return j;
}

std::vector<std::vector<Elem>> abelian_candidates(const Group& G) {
  std::vector<std::vector<Elem>> out;
  if (G.order() <= kMaximalAbelianLimit) {
    for (auto& M : maximal_abelian_subgroups(G)) out.push_back(std::move(M.members));
    return out;
  }
  std::vector<char> is_abelian_class(G.classes().size(), 0);
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    const auto& C = G.centralizer_of(G.classes()[c].front());
    bool ab = true;
    for (std::size_t i = 0; i < C.size() && ab; ++i)
      for (std::size_t j = i + 1; j < C.size(); ++j)
        if (!G.commute(C[i], C[j])) {
          ab = false;
          break;
        }
    is_abelian_class[c] = ab;
  }
  for (Elem x = 1; x < G.order(); ++x)
    if (is_abelian_class[G.class_of(x)]) out.push_back(G.centralizer_of(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<BoundCertificate> abelian_overlap_bound(const Group& G, const SubgroupRef& A) {
  std::optional<BoundCertificate> best;
  for (const auto& U : abelian_candidates(G)) {
    if (is_subset(U, A.members)) continue;
    const int b = static_cast<int>(U.size() - sorted_intersection(U, A.members).size());
    if (!best || b > best->bound)
      best = BoundCertificate{BoundCertificate::Kind::AbelianOverlap,
                              BoundCertificate::Scope::FixedA, b, {U}};
  }
  return best;
}

std::optional<BoundCertificate> ti_pair_bound(const Group& G) {
  const auto cand = abelian_candidates(G);
  std::optional<BoundCertificate> best;
  auto trivial_meet = [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::size_t i = 1, j = 1;  // both contain 0 first
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) ++i;
      else ++j;
    }
    return true;
  };
  // Up to conjugacy H may be taken from a set of class representatives: for
  // small groups every candidate is tried, for large ones the centralizers of
  // class representatives.
  std::vector<std::vector<Elem>> firsts;
  if (G.order() <= kMaximalAbelianLimit) {
    firsts = cand;
  } else {
    for (const auto& cls : G.classes()) {
      const auto& C = G.centralizer_of(cls.front());
      if (cls.front() != 0 && std::binary_search(cand.begin(), cand.end(), C)) firsts.push_back(C);
    }
  }
  // An abelian A meeting H nontrivially lies in some C(h); when every such
  // C(h) meets K trivially, A misses H or K and one of them forces the bound.
  auto separated = [&](const std::vector<Elem>& H, const std::vector<Elem>& K) {
    for (std::size_t i = 1; i < H.size(); ++i)
      if (!trivial_meet(G.centralizer_of(H[i]), K)) return false;
    return true;
  };
  for (const auto& H : firsts)
    for (const auto& K : cand) {
      const int b = static_cast<int>(std::min(H.size(), K.size())) - 1;
      if (best && b <= best->bound) continue;
      if (trivial_meet(H, K) && (separated(H, K) || separated(K, H)))
        best = BoundCertificate{BoundCertificate::Kind::TiPair, BoundCertificate::Scope::Global, b,
                                {H, K}};
    }
  return best;
}

bool is_simple(const Group& G) {
  if (G.order() < 2 || G.is_abelian()) return false;
  for (const auto& cls : G.classes()) {
    if (cls.front() == 0) continue;
    // Normal closure: close the generator set under conjugation by G's generators.
    std::vector<Elem> gens{cls.front()};
    SubgroupRef H = subgroup_generated(G, gens);
    bool grew = true;
    while (grew && H.size() < G.order()) {
      grew = false;
      for (std::size_t i = 0; i < gens.size() && !grew; ++i)
        for (Elem t : G.generators()) {
          Elem y = G.conj(gens[i], t);
          if (!H.contains(y)) {
            gens.push_back(y);
            H = subgroup_generated(G, gens);
            grew = true;
            break;
          }
        }
    }
    if (H.size() < G.order()) return false;
  }
  return true;
}

std::optional<BoundCertificate> order_bound(const Group& G) {
  if (!is_simple(G)) return std::nullopt;
  const long double order = static_cast<long double>(G.order());
  int n = 1;
  for (;; ++n) {
    long double p = 1;
    for (int i = 0; i <= n; ++i) p *= n + 1;
    if (order <= p) break;
  }
  return BoundCertificate{BoundCertificate::Kind::OrderBound, BoundCertificate::Scope::Global, n, {}};
}

std::vector<BoundCertificate> certificates(const Group& G, const SubgroupRef* A) {
  std::vector<BoundCertificate> out;
  if (A)
    if (auto c = abelian_overlap_bound(G, *A)) out.push_back(*c);
  if (auto c = ti_pair_bound(G)) out.push_back(*c);
  if (auto c = order_bound(G)) out.push_back(*c);
  return out;
}

namespace {

// One connected component of the search graph.
struct Component {
  std::vector<Elem> elems;  // local id -> element
  SimpleGraph g;
  std::size_t rep = 0;              // index of the component whose data is shared
  std::vector<std::uint32_t> phi;   // rep local -> this local (empty when rep is self)
};

// Data computed once per isomorphism class representative. Vertices adjacent
// to the whole component are always singleton classes, so they are set aside
// and the rest is colored on its own.
struct RepData {
  int m = 0;
  std::vector<std::uint32_t> universal;
  std::vector<std::uint32_t> rest_ids;  // rest local -> component local
  SimpleGraph rest;
  ChromaticResult chi_rest;
  Profile profile;       // over rest, k' = k - |universal|
  int chi() const { return static_cast<int>(universal.size()) + chi_rest.coloring.k; }
  int w() const { return static_cast<int>(universal.size()); }
};

// Coloring of the whole component from a coloring of the rest: universal
// vertices get the colors after the rest's colors.
Coloring lift(const RepData& d, const Coloring& rest) {
  Coloring c;
  c.color.assign(static_cast<std::size_t>(d.m), -1);
  for (std::size_t i = 0; i < d.rest_ids.size(); ++i) c.color[d.rest_ids[i]] = rest.color[i];
  c.k = rest.k;
  for (auto u : d.universal) c.color[u] = c.k++;
  return c;
}

Coloring transport(const Coloring& c, const std::vector<std::uint32_t>& phi) {
  if (phi.empty()) return c;
  Coloring out;
  out.k = c.k;
  out.color.assign(c.color.size(), -1);
  for (std::size_t v = 0; v < phi.size(); ++v) out.color[phi[v]] = c.color[v];
  return out;
}

struct Option {
  int k;
  int bigs;
};

struct Step {
  int prev;
  int option;
  int sz;
};

struct DpLayer {
  std::vector<std::pair<int, int>> states;  // (z, o)
  std::vector<Step> back;
};

// Colors capped at 2 elements: z empty, o holding one. Returns the chosen
// (option, singletons-to-empty) per component when (0, 0) is reachable.
std::optional<std::vector<std::pair<int, int>>> strict_dp(
    int n, const std::vector<std::vector<Option>>& options) {
  std::vector<DpLayer> layers;
  layers.push_back({{{n, 0}}, {{-1, -1, 0}}});
  for (const auto& opts : options) {
    const DpLayer& cur = layers.back();
    std::map<std::pair<int, int>, Step> next;
    for (std::size_t si = 0; si < cur.states.size(); ++si) {
      const auto [z, o] = cur.states[si];
      const int t = n - z - o;
      for (std::size_t oi = 0; oi < opts.size(); ++oi) {
        const int b = opts[oi].bigs, s = opts[oi].k - b;
        const int bz = std::min(b, z), bo = std::min(b - bz, o), bt = b - bz - bo;
        if (bt > t) continue;
        const int z1 = z - bz, o1 = o - bo, t1 = t - bt;
        for (int sz = 0; sz <= std::min(s, z1); ++sz) {
          const int so = std::min(s - sz, o1), st = s - sz - so;
          if (st > t1) continue;
          std::pair<int, int> key{z1 - sz, o1 - so + sz};
          next.try_emplace(key, Step{static_cast<int>(si), static_cast<int>(oi), sz});
        }
      }
    }
    // Keep the Pareto front: (z, o) beats (z', o') when z <= z' and z+o <= z'+o'.
    std::vector<std::pair<std::pair<int, int>, Step>> cand(next.begin(), next.end());
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
      const int sa = a.first.first + a.first.second, sb = b.first.first + b.first.second;
      return a.first.first != b.first.first ? a.first.first < b.first.first : sa < sb;
    });
    DpLayer layer;
    int best_sum = std::numeric_limits<int>::max();
    for (const auto& [st, step] : cand) {
      const int sum = st.first + st.second;
      if (sum >= best_sum) continue;
      best_sum = sum;
      layer.states.push_back(st);
      layer.back.push_back(step);
    }
    if (layer.states.empty()) return std::nullopt;
    layers.push_back(std::move(layer));
  }
  const auto& last = layers.back();
  auto it = std::find(last.states.begin(), last.states.end(), std::pair<int, int>{0, 0});
  if (it == last.states.end()) return std::nullopt;
  std::vector<std::pair<int, int>> choice(options.size());
  int idx = static_cast<int>(it - last.states.begin());
  for (std::size_t c = options.size(); c-- > 0;) {
    const Step& s = layers[c + 1].back[static_cast<std::size_t>(idx)];
    choice[c] = {s.option, s.sz};
    idx = s.prev;
  }
  return choice;
}

class FixedASolver {
 public:
  FixedASolver(const Group& G, const SubgroupRef& A, const MinOptions& opt)
      : G_(G), A_(A), opt_(opt), budget_(opt.budget) {}

  MinResult run();
  // Strict feasibility at exactly n.
  MinResult decide(int n);

 private:
  const Group& G_;
  const SubgroupRef& A_;
  const MinOptions& opt_;
  Budget budget_;
  std::vector<Component> comps_;
  std::vector<std::size_t> reps_;       // component indices that own data
  std::map<std::size_t, RepData> data_;  // by component index
  std::size_t vcount_ = 0;

  void build_components();
  void color_components();
  void ensure_profiles(int n, bool exact);
  bool profiles_exact(int n) const;
  std::vector<std::vector<Option>> options(int n) const;
  Coloring witness(std::size_t comp, int k) const;
  SplitDecomposition nonstrict_witness(int n) const;
  SplitDecomposition strict_witness(int n, const std::vector<std::pair<int, int>>& choice) const;
  MinResult base_result() const;
  bool strict_precheck(MinResult& r);
};

void FixedASolver::build_components() {
  std::vector<Elem> verts;
  for (Elem x = 0; x < G_.order(); ++x)
    if (!A_.contains(x)) verts.push_back(x);
  vcount_ = verts.size();
  CommutingGraph cg = opt_.parallel ? CommutingGraph::build(G_, verts)
                                    : CommutingGraph::build_serial(G_, verts);
  const auto locals = component_locals(cg);
  std::vector<std::vector<std::uint32_t>> adj(cg.size());
  for (CommutingGraph::Local v = 0; v < cg.size(); ++v) adj[v] = cg.neighbors(v);
  SimpleGraph whole(std::move(adj));
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<std::size_t>> bins;
  for (const auto& loc : locals) {
    Component c;
    for (auto v : loc) c.elems.push_back(cg.element(v));
    c.g = whole.induced(loc);
    const std::size_t idx = comps_.size();
    c.rep = idx;
    if (opt_.use_isomorphism) {
      std::vector<std::size_t> degs;
      for (std::uint32_t v = 0; v < c.g.size(); ++v) degs.push_back(c.g.degree(v));
      std::sort(degs.begin(), degs.end());
      auto& bin = bins[{c.g.size(), degs}];
      for (std::size_t r : bin) {
        if (auto phi = find_graph_isomorphism(comps_[r].g, c.g)) {
          c.rep = r;
          c.phi = std::move(*phi);
          break;
        }
      }
      if (c.rep == idx) bin.push_back(idx);
    }
    if (c.rep == idx) reps_.push_back(idx);
    comps_.push_back(std::move(c));
  }
}

void FixedASolver::color_components() {
  for (std::size_t r : reps_) data_[r];
  std::vector<RepData*> slots;
  for (std::size_t r : reps_) slots.push_back(&data_[r]);
  const long count = static_cast<long>(reps_.size());
#pragma omp parallel for schedule(dynamic) if (opt_.parallel)
  for (long i = 0; i < count; ++i) {
    const Component& c = comps_[reps_[static_cast<std::size_t>(i)]];
    RepData& d = *slots[static_cast<std::size_t>(i)];
    d.m = static_cast<int>(c.g.size());
    for (std::uint32_t v = 0; v < c.g.size(); ++v) {
      if (c.g.degree(v) + 1 == c.g.size()) d.universal.push_back(v);
      else d.rest_ids.push_back(v);
    }
    d.rest = c.g.induced(d.rest_ids);
    d.chi_rest = chromatic_number(d.rest, budget_);
  }
}

// Heuristic profiles for k up to n, then (when exact is set) exact entries for
// every k <= n that the heuristic did not settle.
void FixedASolver::ensure_profiles(int n, bool exact) {
  std::vector<std::pair<RepData*, int>> work;
  for (auto& [idx, d] : data_) {
    const int k_rest_max = std::min(static_cast<int>(d.rest.size()), n - d.w());
    if (k_rest_max < d.chi_rest.coloring.k) continue;
    if (d.profile.bigs.empty() || d.profile.last_k() < k_rest_max) {
      if (d.profile.bigs.empty() || d.profile.last_k() < static_cast<int>(d.rest.size()))
        d.profile = heuristic_profile(d.rest, d.chi_rest.coloring, static_cast<int>(d.rest.size()));
    }
    if (!exact) continue;
    for (int k = d.profile.first_k; k <= k_rest_max; ++k)
      if (!d.profile.exact[static_cast<std::size_t>(k - d.profile.first_k)]) work.push_back({&d, k});
  }
  const long count = static_cast<long>(work.size());
#pragma omp parallel for schedule(dynamic) if (opt_.parallel)
  for (long i = 0; i < count; ++i) {
    auto [d, k] = work[static_cast<std::size_t>(i)];
    const std::size_t at = static_cast<std::size_t>(k - d->profile.first_k);
    int best = d->profile.bigs[at];
    Coloring w = d->profile.witness[at];
    const bool done = exact_bigs(d->rest, k, budget_, best, w);
    d->profile.bigs[at] = best;
    d->profile.witness[at] = std::move(w);
    d->profile.exact[at] = done;
  }
}

bool FixedASolver::profiles_exact(int n) const {
  for (const auto& [idx, d] : data_) {
    if (!d.chi_rest.exact) return false;
    const int k_rest_max = std::min(static_cast<int>(d.rest.size()), n - d.w());
    for (int k = d.chi_rest.coloring.k; k <= k_rest_max; ++k)
      if (!d.profile.exact[static_cast<std::size_t>(k - d.profile.first_k)]) return false;
  }
  return true;
}

std::vector<std::vector<Option>> FixedASolver::options(int n) const {
  std::vector<std::vector<Option>> out;
  for (const auto& c : comps_) {
    const RepData& d = data_.at(c.rep);
    std::vector<Option> opts;
    if (d.rest.size() == 0) {
      if (d.w() <= n) opts.push_back({d.w(), 0});
    } else {
      const int k_rest_max = std::min(static_cast<int>(d.rest.size()), n - d.w());
      for (int k = d.chi_rest.coloring.k; k <= k_rest_max; ++k) opts.push_back({k + d.w(), d.profile.at(k)});
    }
    out.push_back(std::move(opts));
  }
  return out;
}

Coloring FixedASolver::witness(std::size_t comp, int k) const {
  const Component& c = comps_[comp];
  const RepData& d = data_.at(c.rep);
  Coloring rest;
  if (d.rest.size() > 0)
    rest = d.profile.witness[static_cast<std::size_t>(k - d.w() - d.profile.first_k)];
  return transport(lift(d, rest), c.phi);
}

MinResult FixedASolver::base_result() const {
  MinResult r;
  r.group = G_;
  r.A = A_.members;
  r.strict = opt_.strict;
  return r;
}

SplitDecomposition FixedASolver::nonstrict_witness(int n) const {
  std::vector<std::vector<Elem>> parts(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const Component& c = comps_[i];
    const RepData& d = data_.at(c.rep);
    Coloring col = transport(lift(d, d.chi_rest.coloring), c.phi);
    for (std::size_t v = 0; v < c.elems.size(); ++v)
      parts[static_cast<std::size_t>(col.color[v])].push_back(c.elems[v]);
  }
  return make_decomposition(G_, A_, std::move(parts));
}

SplitDecomposition FixedASolver::strict_witness(int n, const std::vector<std::pair<int, int>>& choice) const {
  const auto opts = options(n);
  std::vector<std::vector<Elem>> parts(static_cast<std::size_t>(n));
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const Option& o = opts[i][static_cast<std::size_t>(choice[i].first)];
    int sz = choice[i].second;
    const Coloring col = witness(i, o.k);
    auto classes = color_classes(col);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto take = [&](int lvl) {
      for (int c = 0; c < n; ++c)
        if (!used[static_cast<std::size_t>(c)] && std::min(level[static_cast<std::size_t>(c)], 2) == lvl) return c;
      return -1;
    };
    auto place = [&](const std::vector<std::uint32_t>& cls, int c) {
      used[static_cast<std::size_t>(c)] = 1;
      level[static_cast<std::size_t>(c)] += static_cast<int>(cls.size());
      for (auto v : cls) parts[static_cast<std::size_t>(c)].push_back(comps_[i].elems[v]);
    };
    for (const auto& cls : classes) {
      if (cls.size() < 2) continue;
      int c = take(0);
      if (c < 0) c = take(1);
      if (c < 0) c = take(2);
      place(cls, c);
    }
    for (const auto& cls : classes) {
      if (cls.size() != 1) continue;
      int c = -1;
      if (sz > 0) {
        c = take(0);
        --sz;
      }
      if (c < 0) c = take(1);
      if (c < 0) c = take(2);
      place(cls, c);
    }
  }
  return make_decomposition(G_, A_, std::move(parts));
}

// Cases with no strict split at any n. Builds the components otherwise.
bool FixedASolver::strict_precheck(MinResult& r) {
  // A central element outside A commutes with everything, so it is alone.
  if (!is_subset(center(G_).members, A_.members) || G_.order() - A_.size() < 2) {
    r.proven_exact = true;
    return false;
  }
  build_components();
  // A vertex commuting with all of G \ A can only be a singleton.
  for (const auto& c : comps_)
    if (c.g.size() == vcount_)
      for (std::uint32_t v = 0; v < c.g.size(); ++v)
        if (c.g.degree(v) + 1 == vcount_) {
          r.proven_exact = true;
          return false;
        }
  return true;
}

MinResult FixedASolver::decide(int n) {
  MinResult r = base_result();
  if (!A_.is_abelian) throw PreconditionError("A is not abelian");
  if (n < 1) throw PreconditionError("n must be positive");
  r.n = n;
  if (!strict_precheck(r)) return r;
  if (2 * static_cast<std::size_t>(n) > vcount_) {
    r.proven_exact = true;
    return r;
  }
  color_components();
  bool proven = true;
  int chi_max = 0;
  for (const auto& [idx, d] : data_) {
    chi_max = std::max(chi_max, d.chi());
    proven = proven && d.chi_rest.exact;
  }
  if (chi_max > n) {
    r.proven_exact = proven;
    r.nodes = budget_.used();
    return r;
  }
  ensure_profiles(n, false);
  auto choice = strict_dp(n, options(n));
  if (!choice && !profiles_exact(n)) {
    ensure_profiles(n, true);
    choice = strict_dp(n, options(n));
  }
  if (choice) {
    r.feasible = true;
    r.decomposition = strict_witness(n, *choice);
    r.proven_exact = true;
  } else {
    r.proven_exact = proven && profiles_exact(n) && !budget_.exhausted();
  }
  r.nodes = budget_.used();
  return r;
}

MinResult FixedASolver::run() {
  MinResult r = base_result();
  if (!A_.is_abelian) throw PreconditionError("A is not abelian");
  if (opt_.strict) {
    if (!strict_precheck(r)) return r;
  } else {
    build_components();
  }
  if (vcount_ == 0) {
    r.feasible = true;
    r.proven_exact = true;
    r.decomposition = make_decomposition(G_, A_, {});
    return r;
  }
  color_components();
  int chi_max = 0;
  bool chi_exact = true;
  for (const auto& [idx, d] : data_) {
    chi_max = std::max(chi_max, d.chi());
    chi_exact = chi_exact && d.chi_rest.exact;
  }
  const int cap = opt_.n_max.value_or(std::numeric_limits<int>::max());

  if (!opt_.strict) {
    r.nodes = budget_.used();
    if (chi_max > cap) {
      r.proven_exact = chi_exact;
      return r;
    }
    r.feasible = true;
    r.n = chi_max;
    r.proven_exact = chi_exact;
    r.decomposition = nonstrict_witness(chi_max);
    if (auto c = abelian_overlap_bound(G_, A_); c && c->bound == chi_max) r.certificate = c;
    return r;
  }

  bool proven = chi_exact;
  const int top = std::min(cap, static_cast<int>(vcount_ / 2));
  for (int n = chi_max; n <= top; ++n) {
    ensure_profiles(n, false);
    auto choice = strict_dp(n, options(n));
    if (!choice && !profiles_exact(n)) {
      ensure_profiles(n, true);
      choice = strict_dp(n, options(n));
      proven = proven && profiles_exact(n);
    }
    if (choice) {
      r.feasible = true;
      r.n = n;
      r.decomposition = strict_witness(n, *choice);
      break;
    }
  }
  r.proven_exact = proven && !budget_.exhausted();
  r.nodes = budget_.used();
  if (r.feasible)
    if (auto c = abelian_overlap_bound(G_, A_); c && c->bound == r.n) r.certificate = c;
  return r;
}

void check_witness(const MinResult& r) {
  if (!r.decomposition) return;
  ValidationReport v = validate(*r.decomposition);
  if (!v.valid || (r.strict && !v.strict) || static_cast<int>(v.n) != r.n)
    throw std::logic_error("minimizer produced an invalid decomposition:\n" +
                           v.summary(r.decomposition->group));
}

}  // namespace

MinResult exact_min_fixed_A(const Group& G, const SubgroupRef& A, const MinOptions& opt) {
  FixedASolver solver(G, A, opt);
  MinResult r = solver.run();
  check_witness(r);
  return r;
}

MinResult strict_feasible(const Group& G, const SubgroupRef& A, int n, const MinOptions& opt) {
  MinOptions o = opt;
  o.strict = true;
  FixedASolver solver(G, A, o);
  MinResult r = solver.decide(n);
  check_witness(r);
  return r;
}

MinResult min_over_all_A(const Group& G, const MinOptions& opt) {
  if (G.is_abelian()) throw PreconditionError(G.name() + " is abelian");
  const SubgroupRef Z = center(G);
  struct Candidate {
    SubgroupRef A;
    int lower;
  };
  std::vector<Candidate> cands;
  for (auto& A : abelian_subgroups_up_to_conjugacy(G, true)) {
    if (opt.strict && !is_subset(Z.members, A.members)) continue;
    auto c = abelian_overlap_bound(G, A);
    cands.push_back({std::move(A), c ? std::max(c->bound, 1) : 1});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.A.size() < b.A.size();
  });

  std::vector<BoundCertificate> global;
  if (auto c = ti_pair_bound(G)) global.push_back(*c);
  if (auto c = order_bound(G)) global.push_back(*c);
  int global_lower = 0;
  for (const auto& c : global) global_lower = std::max(global_lower, c.bound);

  MinResult best;
  best.group = G;
  best.strict = opt.strict;
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  for (const auto& cand : cands) {
    if (best.feasible && cand.lower >= best.n) break;  // sorted: no later A can do better
    MinOptions o = opt;
    if (best.feasible) o.n_max = best.n - 1;
    MinResult r = exact_min_fixed_A(G, cand.A, o);
    nodes += r.nodes;
    exhaustive = exhaustive && r.proven_exact;
    if (r.feasible && (!best.feasible || r.n < best.n)) best = std::move(r);
    if (best.feasible && best.n <= global_lower) break;
  }
  best.nodes = nodes;
  best.certificate.reset();
  best.proven_exact = exhaustive;
  if (best.feasible)
    for (const auto& c : global)
      if (c.bound == best.n) {
        best.certificate = c;
        best.proven_exact = true;
        break;
      }
  return best;
}

}  // namespace splitdec

#include "splitdec/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace splitdec {

bool Budget::spend(std::uint64_t nodes) {
  if (exhausted_.load(std::memory_order_relaxed)) return false;
  if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > cap_) {
    exhausted_.store(true, std::memory_order_relaxed);
    return false;
  }
  return true;
}

SimpleGraph::SimpleGraph(std::vector<std::vector<std::uint32_t>> adj) : adj_(std::move(adj)) {
  const std::size_t n = adj_.size();
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  if (n <= kDenseLimit) {
    dense_.assign(n * n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (auto v : adj_[u]) dense_[u * n + v] = 1;
  }
}

bool SimpleGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
  if (!dense_.empty()) return dense_[u * adj_.size() + v] != 0;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

SimpleGraph SimpleGraph::induced(const std::vector<std::uint32_t>& vertices) const {
  std::vector<std::int64_t> pos(adj_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<std::int64_t>(i);
  std::vector<std::vector<std::uint32_t>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (auto w : adj_[vertices[i]])
      if (pos[w] >= 0) adj[i].push_back(static_cast<std::uint32_t>(pos[w]));
  return SimpleGraph(std::move(adj));
}

bool SimpleGraph::is_clique() const {
  for (const auto& a : adj_)
    if (a.size() + 1 != adj_.size()) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> color_classes(const Coloring& c) {
  std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(c.k));
  for (std::size_t v = 0; v < c.color.size(); ++v) out[static_cast<std::size_t>(c.color[v])].push_back(static_cast<std::uint32_t>(v));
  return out;
}

bool is_proper(const SimpleGraph& g, const Coloring& c) {
  if (c.color.size() != g.size()) return false;
  std::vector<char> used(static_cast<std::size_t>(std::max(c.k, 0)), 0);
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (c.color[v] < 0 || c.color[v] >= c.k) return false;
    used[static_cast<std::size_t>(c.color[v])] = 1;
    for (auto w : g.neighbors(v))
      if (c.color[w] == c.color[v]) return false;
  }
  return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

std::vector<std::uint32_t> greedy_clique(const SimpleGraph& g) {
  std::vector<std::uint32_t> best;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) + 1 <= best.size()) continue;
    std::vector<std::uint32_t> cand = g.neighbors(v);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
    std::vector<std::uint32_t> clique{v};
    for (auto u : cand)
      if (std::all_of(clique.begin(), clique.end(), [&](auto w) { return g.adjacent(u, w); }))
        clique.push_back(u);
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

Coloring dsatur_greedy(const SimpleGraph& g, bool balanced) {
  const std::size_t n = g.size();
  Coloring c;
  c.color.assign(n, -1);
  std::vector<std::vector<char>> seen(n);  // seen[v][col]: a neighbor of v has col
  std::vector<int> sat(n, 0);
  std::vector<int> class_size;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t v = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (c.color[u] >= 0) continue;
      if (v == n || sat[u] > sat[v] || (sat[u] == sat[v] && g.degree(static_cast<std::uint32_t>(u)) > g.degree(static_cast<std::uint32_t>(v))))
        v = u;
    }
    int pick = -1;
    for (int col = 0; col < c.k; ++col) {
      if (col < static_cast<int>(seen[v].size()) && seen[v][static_cast<std::size_t>(col)]) continue;
      if (pick < 0 || (balanced && class_size[static_cast<std::size_t>(col)] < class_size[static_cast<std::size_t>(pick)])) pick = col;
      if (!balanced) break;
    }
    if (pick < 0) {
      pick = c.k++;
      class_size.push_back(0);
    }
    c.color[v] = pick;
    ++class_size[static_cast<std::size_t>(pick)];
    for (auto w : g.neighbors(static_cast<std::uint32_t>(v))) {
      auto& s = seen[w];
      if (s.size() <= static_cast<std::size_t>(pick)) s.resize(static_cast<std::size_t>(pick) + 1, 0);
      if (!s[static_cast<std::size_t>(pick)]) {
        s[static_cast<std::size_t>(pick)] = 1;
        ++sat[w];
      }
    }
  }
  return c;
}

namespace {

class ChromaticSearch {
 public:
  ChromaticSearch(const SimpleGraph& g, Budget& budget, Coloring initial, int lb)
      : g_(g), budget_(budget), n_(g.size()), width_(static_cast<std::size_t>(initial.k)),
        ub_(initial.k), lb_(lb), best_(std::move(initial)) {
    color_.assign(n_, -1);
    count_.assign(n_ * width_, 0);
    sat_.assign(n_, 0);
  }

  void run() { search(0, 0); }
  bool aborted() const { return aborted_; }
  const Coloring& best() const { return best_; }

 private:
  const SimpleGraph& g_;
  Budget& budget_;
  std::size_t n_, width_;
  int ub_, lb_;
  Coloring best_;
  std::vector<int> color_;
  std::vector<int> count_;  // count_[v * width + c]: neighbors of v colored c
  std::vector<int> sat_;
  bool aborted_ = false;

  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (auto w : g_.neighbors(static_cast<std::uint32_t>(v)))
      if (count_[w * width_ + static_cast<std::size_t>(c)]++ == 0) ++sat_[w];
  }
  void unassign(std::size_t v, int c) {
    color_[v] = -1;
    for (auto w : g_.neighbors(static_cast<std::uint32_t>(v)))
      if (--count_[w * width_ + static_cast<std::size_t>(c)] == 0) --sat_[w];
  }

  bool done() const { return aborted_ || ub_ <= lb_; }

  void search(std::size_t colored, int used) {
    if (used >= ub_ || done()) return;
    if (!budget_.spend()) {
      aborted_ = true;
      return;
    }
    if (colored == n_) {
      best_.color = color_;
      best_.k = used;
      ub_ = used;
      return;
    }
    std::size_t v = n_;
    for (std::size_t u = 0; u < n_; ++u) {
      if (color_[u] >= 0) continue;
      if (v == n_ || sat_[u] > sat_[v] ||
          (sat_[u] == sat_[v] && g_.degree(static_cast<std::uint32_t>(u)) > g_.degree(static_cast<std::uint32_t>(v))))
        v = u;
    }
    for (int c = 0; c < used; ++c) {
      if (count_[v * width_ + static_cast<std::size_t>(c)] != 0) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v, c);
      if (done()) return;
    }
    if (used + 1 < ub_) {
      assign(v, used);
      search(colored + 1, used + 1);
      unassign(v, used);
    }
  }
};

}  // namespace

ChromaticResult chromatic_number(const SimpleGraph& g, Budget& budget) {
  ChromaticResult r;
  if (g.size() == 0) {
    r.exact = true;
    return r;
  }
  r.clique_bound = static_cast<int>(greedy_clique(g).size());
  r.coloring = dsatur_greedy(g);
  if (r.coloring.k == r.clique_bound) {
    r.exact = true;
    return r;
  }
  ChromaticSearch s(g, budget, r.coloring, r.clique_bound);
  s.run();
  r.coloring = s.best();
  r.exact = !s.aborted();
  return r;
}

int bigs_upper_bound(int m, int k) { return std::max(0, std::min(k, m - k)); }

int split_bigs(const std::vector<int>& sizes, int k, std::vector<int>* pieces) {
  const int q = static_cast<int>(sizes.size());
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (k < q || k > total) return -1;
  auto f = [](int p, int s) { return std::min(p, s - p); };
  std::vector<int> p(sizes.size(), 1);
  int bigs = 0;
  for (int s : sizes) bigs += f(1, s);
  for (int step = q; step < k; ++step) {
    int best = -1, gain = -2;
    for (int i = 0; i < q; ++i) {
      if (p[i] >= sizes[i]) continue;
      int d = f(p[i] + 1, sizes[i]) - f(p[i], sizes[i]);
      if (d > gain) {
        gain = d;
        best = i;
      }
    }
    ++p[best];
    bigs += gain;
  }
  if (pieces) *pieces = std::move(p);
  return bigs;
}

namespace {

// Splits each class of base into pieces[i] parts with the most parts of size >= 2.
Coloring refine(const Coloring& base, const std::vector<int>& pieces) {
  Coloring out;
  out.color.assign(base.color.size(), -1);
  auto classes = color_classes(base);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    const int s = static_cast<int>(cls.size()), p = pieces[i];
    std::vector<int> piece_sizes;
    if (2 * p <= s) {
      piece_sizes.assign(static_cast<std::size_t>(p - 1), 2);
      piece_sizes.push_back(s - 2 * (p - 1));
    } else {
      piece_sizes.assign(static_cast<std::size_t>(s - p), 2);
      piece_sizes.insert(piece_sizes.end(), static_cast<std::size_t>(2 * p - s), 1);
    }
    std::size_t at = 0;
    for (int len : piece_sizes) {
      for (int j = 0; j < len; ++j) out.color[cls[at++]] = out.k;
      ++out.k;
    }
  }
  return out;
}

// Moves vertices from the largest class to the smallest admissible one while
// that narrows the size gap.
Coloring rebalance(const SimpleGraph& g, Coloring c) {
  if (c.k < 2) return c;
  std::vector<int> size(static_cast<std::size_t>(c.k), 0);
  for (int col : c.color) ++size[static_cast<std::size_t>(col)];
  bool moved = true;
  for (std::size_t round = 0; moved && round < g.size() * static_cast<std::size_t>(c.k); ++round) {
    moved = false;
    for (std::uint32_t v = 0; v < g.size() && !moved; ++v) {
      const int from = c.color[v];
      int to = -1;
      for (int col = 0; col < c.k; ++col) {
        if (col == from || size[static_cast<std::size_t>(col)] + 2 > size[static_cast<std::size_t>(from)]) continue;
        bool ok = std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                               [&](auto w) { return c.color[w] == col; });
        if (ok && (to < 0 || size[static_cast<std::size_t>(col)] < size[static_cast<std::size_t>(to)])) to = col;
      }
      if (to >= 0) {
        c.color[v] = to;
        --size[static_cast<std::size_t>(from)];
        ++size[static_cast<std::size_t>(to)];
        moved = true;
      }
    }
  }
  return c;
}

}  // namespace

Profile heuristic_profile(const SimpleGraph& g, const Coloring& optimal, int k_max) {
  const int m = static_cast<int>(g.size());
  Profile p;
  p.first_k = optimal.k;
  const int last = std::min(m, k_max);
  if (last < optimal.k) return p;
  const std::vector<Coloring> bases{optimal, rebalance(g, optimal), dsatur_greedy(g, true)};
  std::vector<std::vector<int>> sizes;
  for (const auto& b : bases) {
    std::vector<int> s(static_cast<std::size_t>(b.k), 0);
    for (int col : b.color) ++s[static_cast<std::size_t>(col)];
    sizes.push_back(std::move(s));
  }
  for (int k = optimal.k; k <= last; ++k) {
    int best = -1;
    Coloring witness;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      std::vector<int> pieces;
      int b = split_bigs(sizes[i], k, &pieces);
      if (b > best) {
        best = b;
        witness = refine(bases[i], pieces);
      }
    }
    p.bigs.push_back(best);
    p.exact.push_back(best == bigs_upper_bound(m, k));
    p.witness.push_back(std::move(witness));
  }
  return p;
}

namespace {

class BigsSearch {
 public:
  BigsSearch(const SimpleGraph& g, int k, Budget& budget, int best)
      : g_(g), k_(k), budget_(budget), m_(static_cast<int>(g.size())), best_(best),
        ub_(bigs_upper_bound(static_cast<int>(g.size()), k)) {
    order_ = adjacency_order();
    color_.assign(g.size(), -1);
    size_.assign(static_cast<std::size_t>(k), 0);
  }

  void run() { search(0); }
  bool aborted() const { return aborted_; }
  int best() const { return best_; }
  bool improved() const { return improved_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  const SimpleGraph& g_;
  int k_;
  Budget& budget_;
  int m_, best_, ub_;
  std::vector<std::uint32_t> order_;
  std::vector<int> color_, size_, witness_;
  int used_ = 0, bigs_ = 0, singles_ = 0;
  bool aborted_ = false, improved_ = false;

  // Highest degree first, then the vertex with most already-ordered neighbors.
  std::vector<std::uint32_t> adjacency_order() const {
    const std::size_t n = g_.size();
    std::vector<std::uint32_t> order;
    std::vector<int> links(n, 0);
    std::vector<char> placed(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t v = n;
      for (std::size_t u = 0; u < n; ++u) {
        if (placed[u]) continue;
        if (v == n || links[u] > links[v] ||
            (links[u] == links[v] && g_.degree(static_cast<std::uint32_t>(u)) > g_.degree(static_cast<std::uint32_t>(v))))
          v = u;
      }
      placed[v] = 1;
      order.push_back(static_cast<std::uint32_t>(v));
      for (auto w : g_.neighbors(static_cast<std::uint32_t>(v))) ++links[w];
    }
    return order;
  }

  bool done() const { return aborted_ || best_ >= ub_; }

  void search(int i) {
    if (done()) return;
    if (!budget_.spend()) {
      aborted_ = true;
      return;
    }
    const int r = m_ - i, u = k_ - used_;
    if (r < u) return;
    if (bigs_ + std::min(singles_ + u, r - u) <= best_) return;
    if (i == m_) {
      best_ = bigs_;
      witness_ = color_;
      improved_ = true;
      return;
    }
    const std::uint32_t v = order_[static_cast<std::size_t>(i)];
    for (int c = 0; c < used_; ++c) {
      bool ok = std::none_of(g_.neighbors(v).begin(), g_.neighbors(v).end(),
                             [&](auto w) { return color_[w] == c; });
      if (!ok) continue;
      const int before = size_[static_cast<std::size_t>(c)]++;
      if (before == 1) {
        --singles_;
        ++bigs_;
      }
      color_[v] = c;
      search(i + 1);
      color_[v] = -1;
      if (before == 1) {
        ++singles_;
        --bigs_;
      }
      --size_[static_cast<std::size_t>(c)];
      if (done()) return;
    }
    if (used_ < k_) {
      color_[v] = used_;
      size_[static_cast<std::size_t>(used_)] = 1;
      ++used_;
      ++singles_;
      search(i + 1);
      --singles_;
      --used_;
      size_[static_cast<std::size_t>(used_)] = 0;
      color_[v] = -1;
    }
  }
};

}  // namespace

bool exact_bigs(const SimpleGraph& g, int k, Budget& budget, int& best, Coloring& witness) {
  const int m = static_cast<int>(g.size());
  if (k < 1 || k > m) return true;
  if (best >= bigs_upper_bound(m, k)) return true;
  BigsSearch s(g, k, budget, best);
  s.run();
  if (s.improved()) {
    best = s.best();
    witness.color = s.witness();
    witness.k = k;
  }
  return !s.aborted();
}

std::optional<std::vector<std::uint32_t>> find_graph_isomorphism(const SimpleGraph& a,
                                                                 const SimpleGraph& b,
                                                                 std::uint64_t node_cap) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<std::size_t> da, db;
  for (std::uint32_t v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  if (n == 0) return std::vector<std::uint32_t>{};

  // Breadth-first order of a, remembering each vertex's parent.
  constexpr std::uint32_t kNone = ~0u;
  std::vector<std::uint32_t> order, parent(n, kNone);
  std::vector<char> queued(n, 0);
  for (std::uint32_t root = 0; root < n; ++root) {
    if (queued[root]) continue;
    queued[root] = 1;
    order.push_back(root);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (auto w : a.neighbors(order[i]))
        if (!queued[w]) {
          queued[w] = 1;
          parent[w] = order[i];
          order.push_back(w);
        }
  }

  std::vector<std::uint32_t> phi(n, kNone);
  std::vector<char> taken(n, 0);
  std::uint64_t nodes = 0;
  bool gave_up = false;

  auto consistent = [&](std::size_t depth, std::uint32_t x, std::uint32_t y) {
    if (taken[y] || a.degree(x) != b.degree(y)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      std::uint32_t w = order[i];
      if (a.adjacent(x, w) != b.adjacent(y, phi[w])) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    if (++nodes > node_cap) {
      gave_up = true;
      return false;
    }
    const std::uint32_t x = order[depth];
    auto attempt = [&](std::uint32_t y) {
      if (!consistent(depth, x, y)) return false;
      phi[x] = y;
      taken[y] = 1;
      if (self(self, depth + 1)) return true;
      taken[y] = 0;
      phi[x] = kNone;
      return false;
    };
    if (parent[x] != kNone) {
      for (auto y : b.neighbors(phi[parent[x]])) {
        if (attempt(y)) return true;
        if (gave_up) return false;
      }
    } else {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (attempt(y)) return true;
        if (gave_up) return false;
      }
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return phi;
}

}  // namespace splitdec

#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

namespace splitdec {

// Search-node budget shared by every search in one minimization. Spending is
// atomic so concurrent component searches draw from the same pool.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultNodes = 100'000'000;

  explicit Budget(std::uint64_t cap = kDefaultNodes) : cap_(cap) {}
  // False once the cap is reached; the caller must then abandon its search.
  bool spend(std::uint64_t nodes = 1);
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

// Undirected simple graph on 0..size()-1 with sorted adjacency lists, plus a
// dense adjacency matrix for constant-time tests up to kDenseLimit vertices.
class SimpleGraph {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::vector<std::uint32_t>> adj);

  std::size_t size() const { return adj_.size(); }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }
  std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  // Induced subgraph on the given vertices, relabelled 0..k-1 in list order.
  SimpleGraph induced(const std::vector<std::uint32_t>& vertices) const;
  bool is_clique() const;

 private:
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint8_t> dense_;
};

// A proper coloring: color[v] in 0..k-1, every color used.
struct Coloring {
  std::vector<int> color;
  int k = 0;
};

std::vector<std::vector<std::uint32_t>> color_classes(const Coloring& c);
bool is_proper(const SimpleGraph& g, const Coloring& c);

// Largest clique found by growing greedily from every vertex's neighborhood.
std::vector<std::uint32_t> greedy_clique(const SimpleGraph& g);

// Greedy DSATUR. balanced = among admissible existing colors take the one with
// the fewest vertices (rather than the lowest index), opening a new color only
// when none is admissible.
Coloring dsatur_greedy(const SimpleGraph& g, bool balanced = false);

struct ChromaticResult {
  Coloring coloring;  // optimal when exact
  int clique_bound = 0;
  bool exact = false;
};

// Exact branch and bound: DSATUR order (saturation, then degree, then least
// index), colors tried in ascending order, clique lower bound.
ChromaticResult chromatic_number(const SimpleGraph& g, Budget& budget);

// Class-count frontier of one component: for k = first_k .. last_k, bigs[k]
// is the largest number of classes of size >= 2 in a proper coloring with
// exactly k classes, and witness[k] attains it.
struct Profile {
  int first_k = 0;
  std::vector<int> bigs;
  std::vector<bool> exact;
  std::vector<Coloring> witness;

  int last_k() const { return first_k + static_cast<int>(bigs.size()) - 1; }
  int at(int k) const { return bigs[k - first_k]; }
};

// An upper bound on bigs with k classes on m vertices: min(k, m - k).
int bigs_upper_bound(int m, int k);

// Best split of classes of the given sizes into exactly k pieces, maximizing
// pieces of size >= 2. Returns -1 when k is outside [sizes.size(), sum].
int split_bigs(const std::vector<int>& sizes, int k, std::vector<int>* pieces = nullptr);

// Profile from refinements of a few base colorings (the optimal one, a
// rebalanced copy and a balanced DSATUR coloring), for k up to k_max.
Profile heuristic_profile(const SimpleGraph& g, const Coloring& optimal, int k_max);

// Exact bigs for exactly k classes by branch and bound, starting from a known
// lower bound (and its witness). Returns false when the budget ran out; best
// and witness then hold the best found.
bool exact_bigs(const SimpleGraph& g, int k, Budget& budget, int& best, Coloring& witness);

// Vertex map phi with a ~ b iff phi(a) ~ phi(b), by backtracking with degree
// and adjacency pruning. nullopt when none is found within node_cap.
std::optional<std::vector<std::uint32_t>> find_graph_isomorphism(const SimpleGraph& a,
                                                                 const SimpleGraph& b,
                                                                 std::uint64_t node_cap = 200'000);

}  // namespace splitdec

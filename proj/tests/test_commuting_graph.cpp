#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>

#include "helpers.hpp"
#include "splitdec/commuting_graph.hpp"

using namespace splitdec;
using namespace testutil;

namespace {

std::vector<Elem> all_but(const Group& G, const std::vector<Elem>& excluded) {
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x)
    if (std::find(excluded.begin(), excluded.end(), x) == excluded.end()) out.push_back(x);
  return out;
}

std::map<std::size_t, int> size_histogram(const CommutingGraph& g) {
  std::map<std::size_t, int> h;
  for (const auto& c : component_locals(g)) ++h[c.size()];
  return h;
}

bool is_clique(const CommutingGraph& g, const std::vector<CommutingGraph::Local>& c) {
  for (auto v : c)
    if (g.neighbors(v).size() != c.size() - 1) return false;
  return true;
}

}  // namespace

TEST_CASE("abelian group on G minus Z is empty") {
  Group C6 = cyclic(6);
  auto Z = center(C6);
  CommutingGraph g = CommutingGraph::build(C6, all_but(C6, Z.members));
  CHECK(g.size() == 0);
  CHECK(components(g).empty());
  CHECK(export_dot(g) == "graph { }\n");
}

TEST_CASE("S3 on its nonidentity elements") {
  Group S3 = symmetric(3);
  CommutingGraph g = CommutingGraph::build(S3, all_but(S3, {0}));
  CHECK(g.size() == 5);
  CHECK(g.edge_count() == 1);
  CHECK(size_histogram(g) == std::map<std::size_t, int>{{1, 3}, {2, 1}});
  Elem c = S3.parse_element("(1 2 3)"), d = S3.parse_element("(1 3 2)");
  CHECK(g.adjacent(*g.local(c), *g.local(d)));
  std::string dot = export_dot(g);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 5 + 1 + 1);
  CHECK(dot.find(" -- ") != std::string::npos);
  CHECK(dot.find("label=\"(1 2 3)\"") != std::string::npos);
}

TEST_CASE("D8 on G minus Z is three disjoint edges") {
  Group D8 = dihedral(8);
  CommutingGraph g = CommutingGraph::build(D8, all_but(D8, center(D8).members));
  CHECK(g.size() == 6);
  for (CommutingGraph::Local v = 0; v < g.size(); ++v) CHECK(g.neighbors(v).size() == 1);
  CHECK(size_histogram(g) == std::map<std::size_t, int>{{2, 3}});
}

TEST_CASE("A5 components are cliques from the maximal abelian subgroups") {
  Group A5 = alternating(5);
  CommutingGraph g = CommutingGraph::build(A5, all_but(A5, {0}));
  CHECK(size_histogram(g) == std::map<std::size_t, int>{{2, 10}, {3, 5}, {4, 6}});
  for (const auto& c : component_locals(g)) CHECK(is_clique(g, c));
}

TEST_CASE("components are cliques for TI self-centralizing covers") {
  for (const char* name : {"A5", "L2_7", "A6"}) {
    CAPTURE(name);
    Group G = Catalog::builtin().get(name);
    CommutingGraph g = CommutingGraph::build(G, all_but(G, {0}));
    bool all_cliques = true;
    for (const auto& c : component_locals(g)) all_cliques = all_cliques && is_clique(g, c);
    // Only A5 has a TI cover; L2(7) and A6 have dihedral involution centralizers.
    CHECK(all_cliques == (std::string(name) == "A5"));
  }
}

TEST_CASE("graph matches brute force and degree formula") {
  for (const Group& G : small_catalog(24)) {
    CAPTURE(G.name());
    CommutingGraph g = CommutingGraph::build(G, all_but(G, {0}));
    for (CommutingGraph::Local u = 0; u < g.size(); ++u) {
      Elem x = g.element(u);
      CHECK(g.neighbors(u).size() == G.centralizer_of(x).size() - 2);
      CHECK(std::is_sorted(g.neighbors(u).begin(), g.neighbors(u).end()));
      for (CommutingGraph::Local v = 0; v < g.size(); ++v) {
        auto p = raw(G.element(x)), q = raw(G.element(g.element(v)));
        bool expect = u != v && oracle::commute(p, q);
        CHECK(g.adjacent(u, v) == expect);
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      }
    }
  }
}

TEST_CASE("independent sets are noncommuting sets") {
  Group S4 = symmetric(4);
  auto A = center(S4);
  CommutingGraph g = CommutingGraph::build(S4, all_but(S4, A.members));
  std::vector<Elem> set = elems(S4, {"(1 2 3)", "(1 2 4)", "(1 3 4)", "(1 2)"});
  bool independent = true;
  for (Elem x : set)
    for (Elem y : set)
      if (x != y && g.adjacent(*g.local(x), *g.local(y))) independent = false;
  bool noncommuting = true;
  for (Elem x : set)
    for (Elem y : set)
      if (x != y && S4.commute(x, y)) noncommuting = false;
  CHECK(independent == noncommuting);
}

TEST_CASE("parallel and serial builds agree") {
  for (const char* name : {"S4", "A5", "L2_7", "G72", "E125a"}) {
    CAPTURE(name);
    Group G = Catalog::builtin().get(name);
    auto verts = all_but(G, center(G).members);
    CHECK(CommutingGraph::build(G, verts) == CommutingGraph::build_serial(G, verts));
    CHECK(components(CommutingGraph::build(G, verts)) ==
          components(CommutingGraph::build_serial(G, verts)));
  }
}

TEST_CASE("Sz8 component sizes") {
  if (std::getenv("SPLITDEC_SKIP_SLOW")) return;
  Group G = Catalog::builtin().get("Sz8");
  CommutingGraph g = CommutingGraph::build(G, all_but(G, {0}));
  auto h = size_histogram(g);
  std::vector<std::size_t> sizes;
  for (auto [s, c] : h) sizes.push_back(s);
  CHECK(sizes == std::vector<std::size_t>{4, 6, 12, 63});
  // Normalizer orders 64*7, 14, 20, 52 give 65, 2080, 1456, 560 components.
  std::size_t total = 0;
  for (auto [s, c] : h) total += s * c;
  CHECK(total == 29119);
  CHECK(h[63] == 65);
  CHECK(h[6] == 2080);
  CHECK(h[4] == 1456);
  CHECK(h[12] == 560);
}

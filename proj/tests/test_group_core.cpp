#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "splitdec/errors.hpp"
#include "splitdec/iso.hpp"

using namespace splitdec;
using namespace testutil;

namespace {

std::multiset<std::size_t> sizes_of(const std::vector<SubgroupRef>& subs) {
  std::multiset<std::size_t> out;
  for (const auto& s : subs) out.insert(s.size());
  return out;
}

}  // namespace

TEST_CASE("permutation text round trip and errors") {
  Perm p = Perm::parse("(1 2 3)(4 5)", 6);
  CHECK(p.str() == "(1 2 3)(4 5)");
  CHECK(Perm::parse("()", 3).is_identity());
  CHECK(Perm::parse("( 1, 3 )", 3) == Perm::parse("(1 3)", 3));
  CHECK(p.order() == 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(Perm::parse("(1 2", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1 2 1)", 3), ParseError);
  // right action: (1 2) then (2 3) sends 1 -> 2 -> 3
  CHECK(Perm::parse("(1 2)", 3) * Perm::parse("(2 3)", 3) == Perm::parse("(1 3 2)", 3));
}

TEST_CASE("close_generators examples") {
  CHECK(close_generators(3, {cyc0(3, {{0, 1, 2}})}).order() == 3);
  Group D8 = close_generators(4, {cyc0(4, {{0, 1, 2, 3}}), cyc0(4, {{0, 2}})});
  CHECK(D8.order() == 8);
  Group A5 = close_generators(5, {cyc0(5, {{0, 1, 2, 3, 4}}), cyc0(5, {{2, 3, 4}})});
  CHECK(A5.order() == 60);
  CHECK(A5.element(0).is_identity());
  CHECK_THROWS_AS(close_generators(5, {cyc0(5, {{0, 1}}), cyc0(5, {{0, 1, 2, 3, 4}})}, "", 100), ResourceError);
  CHECK_THROWS_AS(close_generators(4, {cyc0(3, {{0, 1}})}), ValidationError);
}

TEST_CASE("closure agrees with the oracle and ordering is deterministic") {
  for (const Group& G : small_catalog()) {
    CAPTURE(G.name());
    auto ref = oracle::closure(raw_generators(G), G.degree());
    std::vector<Elem> all(G.order());
    std::iota(all.begin(), all.end(), 0);
    CHECK(raw_set(G, all) == ref);
    std::vector<Perm> gens;
    for (Elem g : G.generators()) gens.push_back(G.element(g));
    Group again = close_generators(G.degree(), gens);
    CHECK(again.elements() == G.elements());
  }
}

TEST_CASE("multiplication is associative with a two-sided identity") {
  std::mt19937 rng(7);
  for (const Group& G : small_catalog(200)) {
    CAPTURE(G.name());
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(G.order() - 1));
    for (int t = 0; t < 1000; ++t) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
      REQUIRE(G.mul(a, 0) == a);
      REQUIRE(G.mul(0, a) == a);
      REQUIRE(G.mul(a, G.inv(a)) == 0);
      REQUIRE(G.element(G.mul(a, b)) == G.element(a) * G.element(b));
    }
  }
}

TEST_CASE("centralizer and center examples") {
  Group D8 = close_generators(4, {cyc0(4, {{0, 1, 2, 3}}), cyc0(4, {{0, 2}})});
  CHECK(centralizer(D8, {0}).size() == 8);
  CHECK(centralizer(D8, {}).size() == 8);
  CHECK(centralizer(D8, {D8.index_of(cyc0(4, {{0, 2}}))}).size() == 4);
  CHECK(center(D8).size() == 2);
  Group S3 = symmetric(3);
  SubgroupRef c = centralizer(S3, {S3.parse_element("(1 2 3)")});
  CHECK(c.size() == 3);
  CHECK(c.is_abelian);
  CHECK(center(symmetric(4)).size() == 1);
  CHECK(center(cyclic(6)).size() == 6);
}

TEST_CASE("element orders") {
  Group D8 = close_generators(4, {cyc0(4, {{0, 1, 2, 3}}), cyc0(4, {{0, 2}})});
  CHECK(element_order(D8, 0) == 1);
  CHECK(element_order(D8, D8.index_of(cyc0(4, {{0, 1, 2, 3}}))) == 4);
  Group E = extraspecial_p3(3, ExtraspecialType::ExponentP);
  for (Elem x = 0; x < E.order(); ++x) CHECK((element_order(E, x) == 1 || element_order(E, x) == 3));
  Group F = extraspecial_p3(3, ExtraspecialType::ExponentP2);
  int max_order = 0;
  for (Elem x = 0; x < F.order(); ++x) max_order = std::max(max_order, element_order(F, x));
  CHECK(max_order == 9);
}

TEST_CASE("conjugacy class examples") {
  auto sizes = [](const Group& G) {
    std::multiset<std::size_t> s;
    for (const auto& c : conjugacy_classes(G)) s.insert(c.size());
    return s;
  };
  CHECK(sizes(symmetric(3)) == std::multiset<std::size_t>{1, 2, 3});
  CHECK(sizes(symmetric(4)) == std::multiset<std::size_t>{1, 3, 6, 6, 8});
  CHECK(sizes(cyclic(5)) == std::multiset<std::size_t>{1, 1, 1, 1, 1});
}

TEST_CASE("conjugacy classes agree with the oracle, sizes divide |G|") {
  for (const Group& G : small_catalog()) {
    CAPTURE(G.name());
    std::multiset<std::size_t> mine;
    std::size_t total = 0;
    Elem prev_least = 0;
    bool first = true;
    for (const auto& cls : conjugacy_classes(G)) {
      mine.insert(cls.size());
      total += cls.size();
      CHECK(G.order() % cls.size() == 0);
      CHECK(std::is_sorted(cls.begin(), cls.end()));
      if (!first) CHECK(cls.front() > prev_least);
      prev_least = cls.front();
      first = false;
      for (Elem x : cls) CHECK(G.conj(cls.front(), G.conjugator(x)) == x);
    }
    CHECK(total == G.order());
    CHECK(mine == oracle::class_sizes(oracle::closure(raw_generators(G), G.degree())));
  }
}

TEST_CASE("centralizers contain <g> and Z(G), orders divide |G|") {
  for (const Group& G : small_catalog(200)) {
    CAPTURE(G.name());
    SubgroupRef Z = center(G);
    for (Elem g = 0; g < G.order(); ++g) {
      CHECK(G.order() % static_cast<std::size_t>(element_order(G, g)) == 0);
      SubgroupRef C = centralizer(G, {g});
      CHECK(is_subset(Z.members, C.members));
      CHECK(is_subset(subgroup_generated(G, {g}).members, C.members));
    }
  }
}

TEST_CASE("centralizers agree with the oracle") {
  for (const Group& G : small_catalog()) {
    CAPTURE(G.name());
    auto ref = oracle::closure(raw_generators(G), G.degree());
    for (Elem g = 0; g < G.order(); ++g)
      CHECK(raw_set(G, centralizer(G, {g}).members) == oracle::centralizer(ref, raw(G.element(g))));
  }
}

TEST_CASE("abelian subgroup examples") {
  CHECK(abelian_subgroups_up_to_conjugacy(symmetric(3), true).size() == 3);
  CHECK(sizes_of(abelian_subgroups_up_to_conjugacy(symmetric(3), true)) == std::multiset<std::size_t>{1, 2, 3});
  auto d8 = abelian_subgroups_up_to_conjugacy(dihedral(8), true);
  CHECK(d8.size() == 7);
  CHECK(sizes_of(d8) == std::multiset<std::size_t>{1, 2, 2, 2, 4, 4, 4});
  CHECK(abelian_subgroups_up_to_conjugacy(dihedral(8), false).size() == 6);
  for (auto t : {ExtraspecialType::ExponentP, ExtraspecialType::ExponentP2}) {
    auto M = maximal_abelian_subgroups(extraspecial_p3(3, t));
    CHECK(M.size() == 4);
    for (const auto& m : M) CHECK(m.size() == 9);
  }
  CHECK_THROWS_AS(abelian_subgroups_up_to_conjugacy(symmetric(4), true, 5), ResourceError);
}

TEST_CASE("abelian subgroup representatives are complete and pairwise non-conjugate") {
  for (const Group& G : small_catalog()) {
    CAPTURE(G.name());
    auto reps = abelian_subgroups_up_to_conjugacy(G, true);
    auto ref_all = oracle::abelian_subgroups(oracle::closure(raw_generators(G), G.degree()));
    auto ref = oracle::closure(raw_generators(G), G.degree());
    CHECK(reps.size() == oracle::count_conjugacy_classes(ref_all, ref));
    std::vector<std::set<oracle::P>> rep_sets;
    for (const auto& r : reps) {
      CHECK(r.is_abelian);
      CHECK(is_subgroup(G, r.members));
      rep_sets.push_back(raw_set(G, r.members));
    }
    // every oracle abelian subgroup is conjugate to exactly one representative
    for (const auto& H : ref_all) {
      int hits = 0;
      for (const auto& R : rep_sets) {
        if (R.size() != H.size()) continue;
        for (const auto& g : ref)
          if (oracle::conjugate(R, g) == H) {
            ++hits;
            break;
          }
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("maximal abelian subgroup examples") {
  auto s3 = maximal_abelian_subgroups(symmetric(3));
  CHECK(sizes_of(s3) == std::multiset<std::size_t>{2, 2, 2, 3});
  auto a5 = maximal_abelian_subgroups(alternating(5));
  std::map<std::size_t, int> counts;
  for (const auto& m : a5) counts[m.size()]++;
  CHECK(counts == std::map<std::size_t, int>{{3, 10}, {4, 5}, {5, 6}});
  auto c6 = maximal_abelian_subgroups(cyclic(6));
  REQUIRE(c6.size() == 1);
  CHECK(c6[0].size() == 6);
}

TEST_CASE("maximal abelian subgroups are self-centralizing and match the oracle") {
  for (const Group& G : small_catalog()) {
    CAPTURE(G.name());
    auto M = maximal_abelian_subgroups(G);
    std::set<std::set<oracle::P>> mine;
    for (const auto& m : M) {
      CHECK(centralizer(G, m.members).members == m.members);
      mine.insert(raw_set(G, m.members));
    }
    auto all = oracle::abelian_subgroups(oracle::closure(raw_generators(G), G.degree()));
    std::set<std::set<oracle::P>> maximal;
    for (const auto& H : all) {
      bool is_max = true;
      for (const auto& K : all)
        if (K.size() > H.size() && std::includes(K.begin(), K.end(), H.begin(), H.end())) is_max = false;
      if (is_max) maximal.insert(H);
    }
    CHECK(mine == maximal);
  }
}

TEST_CASE("frobenius kernel examples") {
  Group S3 = symmetric(3);
  CHECK(is_frobenius_with_kernel(S3, subgroup_generated(S3, {S3.parse_element("(1 2 3)")})));
  Group A4 = alternating(4);
  CHECK(is_frobenius_with_kernel(A4, subgroup_generated(A4, elems(A4, {"(1 2)(3 4)", "(1 3)(2 4)"}))));
  Group D8 = dihedral(8);
  CHECK_FALSE(is_frobenius_with_kernel(D8, subgroup_generated(D8, {D8.parse_element("(1 2 3 4)")})));
  CHECK_FALSE(is_frobenius_with_kernel(S3, trivial_subgroup(S3)));
}

TEST_CASE("sylow subgroups") {
  Group S4 = symmetric(4);
  CHECK(sylow_subgroup(S4, 2).size() == 8);
  CHECK(sylow_subgroup(S4, 3).size() == 3);
  CHECK(sylow_subgroup(alternating(5), 2).size() == 4);
  CHECK(sylow_subgroup(S4, 5).size() == 1);
}

TEST_CASE("small isomorphism type examples") {
  Group Q8 = generalized_quaternion(8);
  int involutions = 0;
  for (Elem x = 0; x < Q8.order(); ++x) involutions += element_order(Q8, x) == 2;
  CHECK(involutions == 1);
  CHECK(small_iso_type(Q8, parse_iso_target("Q8")));
  CHECK_FALSE(small_iso_type(dihedral(8), parse_iso_target("Q8")));
  CHECK(small_iso_type(dihedral(8), parse_iso_target("D8")));
  CHECK(small_iso_type(direct_product(symmetric(3), symmetric(3)), parse_iso_target("S3xS3")));
  CHECK(small_iso_type(Catalog::builtin().get("Q8"), parse_iso_target("Q8")));
  CHECK(small_iso_type(klein(), parse_iso_target("klein")));
  CHECK(small_iso_type(klein(), parse_iso_target("elementary-abelian-2")));
  CHECK_FALSE(small_iso_type(cyclic(4), parse_iso_target("klein")));
  CHECK(small_iso_type(cyclic(4), parse_iso_target("C4")));
  CHECK(small_iso_type(cyclic(12), parse_iso_target("cyclic")));
  CHECK(small_iso_type(symmetric(4), parse_iso_target("S4")));
  CHECK_FALSE(small_iso_type(Catalog::builtin().get("SL2_3"), parse_iso_target("S4")));
  CHECK(small_iso_type(Catalog::builtin().get("SD16"), parse_iso_target("semidihedral-16")));
  CHECK(small_iso_type(Catalog::builtin().get("Q16"), parse_iso_target("generalized-quaternion-16")));
  CHECK(small_iso_type(Catalog::builtin().get("D12"), parse_iso_target("dihedral-12")));
  CHECK_FALSE(small_iso_type(Catalog::builtin().get("M16"), parse_iso_target("semidihedral-16")));
  CHECK(small_iso_type(Catalog::builtin().get("S3"), parse_iso_target("S3")));
  CHECK(small_iso_type(Catalog::builtin().get("A4"), parse_iso_target("A4")));
  CHECK_THROWS_AS(small_iso_type(symmetric(5), parse_iso_target("S4")), ResourceError);
  CHECK_THROWS_AS(parse_iso_target("D9x"), ParseError);
}

TEST_CASE("subgroup as group keeps the member set") {
  Group S4 = symmetric(4);
  SubgroupRef P = sylow_subgroup(S4, 2);
  Group H = subgroup_as_group(S4, P);
  CHECK(H.order() == 8);
  CHECK(small_iso_type(H, parse_iso_target("D8")));
  for (Elem x = 0; x < H.order(); ++x) CHECK(P.contains(S4.index_of(H.element(x))));
}

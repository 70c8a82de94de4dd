#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "helpers.hpp"
#include "splitdec/constructions.hpp"
#include "splitdec/errors.hpp"
#include "splitdec/tables.hpp"

using namespace splitdec;
using namespace testutil;

namespace {

std::string fixture(const std::string& name) {
  return std::string(SPLITDEC_FIXTURES_DIR) + "/" + name + ".json";
}

SubgroupRef gen(const Group& G, const std::vector<std::string>& cycles) {
  return subgroup_generated(G, elems(G, cycles));
}

void check_valid_strict(const SplitDecomposition& D, std::size_t n) {
  ValidationReport r = validate(D);
  CAPTURE(r.summary(D.group));
  CHECK(r.valid);
  CHECK(r.strict);
  CHECK(r.n == n);
}

}  // namespace

TEST_CASE("coset criterion examples") {
  Group D8 = make("dihedral(8)");
  // Points written 0-based in the examples: (0 1 2 3) is (1 2 3 4).
  SubgroupRef A = subgroup_generated(D8, {D8.index_of(cyc0(4, {{0, 1, 2, 3}}))});
  Elem g = D8.index_of(cyc0(4, {{0, 2}}));
  Elem r2 = D8.index_of(cyc0(4, {{0, 2}, {1, 3}}));
  Elem r = D8.index_of(cyc0(4, {{0, 1, 2, 3}}));
  CHECK(commute_coset_criterion(D8, A, g, 0, 0));
  CHECK(commute_coset_criterion(D8, A, g, 0, r2));
  CHECK_FALSE(commute_coset_criterion(D8, A, g, 0, r));
}

TEST_CASE("coset criterion agrees with the commuting test") {
  for (const Group& G : small_catalog(24)) {
    CAPTURE(G.name());
    for (const auto& A : abelian_subgroups_up_to_conjugacy(G, true))
      for (Elem g = 0; g < G.order(); ++g)
        for (Elem a1 : A.members)
          for (Elem a2 : A.members) {
            bool direct = G.commute(G.mul(a1, g), G.mul(a2, g));
            if (commute_coset_criterion(G, A, g, a1, a2) != direct) {
              FAIL("mismatch at g = " << G.label(g));
            }
          }
  }
}

TEST_CASE("coset partition examples") {
  Group D8 = make("dihedral(8)");
  SubgroupRef C4 = subgroup_generated(D8, {D8.index_of(cyc0(4, {{0, 1, 2, 3}}))});
  auto parts = coset_partition(D8, C4, D8.index_of(cyc0(4, {{0, 2}})));
  CHECK(parts.size() == 2);
  for (const auto& B : parts) CHECK(B.size() == 2);

  Group E = Catalog::builtin().get("E27a");
  SubgroupRef A;
  for (const auto& M : maximal_abelian_subgroups(E))
    if (M.size() == 9) A = M;
  REQUIRE(A.size() == 9);
  Elem g = 0;
  while (A.contains(g)) ++g;
  parts = coset_partition(E, A, g);
  CHECK(parts.size() == 3);
  for (const auto& B : parts) CHECK(B.size() == 3);

  Group Q8 = Catalog::builtin().get("Q8");
  SubgroupRef I;
  for (const auto& M : maximal_abelian_subgroups(Q8)) I = M;
  Elem j = 0;
  while (I.contains(j)) ++j;
  parts = coset_partition(Q8, I, j);
  CHECK(parts.size() == 2);
  for (const auto& B : parts) CHECK(B.size() == 2);
  CHECK_THROWS_AS(coset_partition(Q8, I, I.members[1]), PreconditionError);
}

TEST_CASE("coset partition shape and independence") {
  for (const Group& G : small_catalog(24)) {
    CAPTURE(G.name());
    for (const auto& A : abelian_subgroups_up_to_conjugacy(G, true))
      for (Elem g = 0; g < G.order(); ++g) {
        if (A.contains(g)) continue;
        auto parts = coset_partition(G, A, g);
        std::size_t c = 0;
        for (Elem a : A.members) c += G.commute(a, g);
        REQUIRE(parts.size() == c);
        std::vector<Elem> all;
        for (const auto& B : parts) {
          CHECK(B.size() == A.size() / c);
          for (Elem x : B)
            for (Elem y : B)
              if (x != y) CHECK_FALSE(G.commute(x, y));
          all.insert(all.end(), B.begin(), B.end());
        }
        std::vector<Elem> coset;
        for (Elem a : A.members) coset.push_back(G.mul(a, g));
        std::sort(all.begin(), all.end());
        std::sort(coset.begin(), coset.end());
        CHECK(all == coset);
      }
  }
}

TEST_CASE("maximal abelian construction") {
  Group S3 = Catalog::builtin().get("S3");
  SplitDecomposition D = maximal_abelian_construction(S3, gen(S3, {"(1 2 3)"}));
  check_valid_strict(D, 1);
  CHECK(D.parts[0].size() == 3);

  Group Q8 = Catalog::builtin().get("Q8");
  for (const auto& M : maximal_abelian_subgroups(Q8)) check_valid_strict(maximal_abelian_construction(Q8, M), 2);

  for (const char* name : {"E27a", "E27b"}) {
    Group E = Catalog::builtin().get(name);
    for (const auto& M : maximal_abelian_subgroups(E)) {
      SplitDecomposition De = maximal_abelian_construction(E, M);
      check_valid_strict(De, 6);
      for (const auto& B : De.parts) CHECK(B.size() == 3);
    }
  }
  CHECK_THROWS_AS(maximal_abelian_construction(S3, trivial_subgroup(S3)), PreconditionError);
}

TEST_CASE("maximal abelian construction property") {
  for (const Group& G : small_catalog(24)) {
    CAPTURE(G.name());
    for (const auto& M : maximal_abelian_subgroups(G)) {
      SplitDecomposition D = maximal_abelian_construction(G, M);
      ValidationReport r = validate(D);
      CHECK(r.valid);
      CHECK(r.strict);
      CHECK(D.n() >= G.order() / M.size() - 1);
    }
  }
}

TEST_CASE("frobenius coset construction") {
  Group D10 = Catalog::builtin().get("D10");
  SplitDecomposition D = frobenius_coset_construction(D10, sylow_subgroup(D10, 5));
  check_valid_strict(D, 1);
  CHECK(D.parts[0].size() == 5);

  Group A4 = Catalog::builtin().get("A4");
  check_valid_strict(frobenius_coset_construction(A4, sylow_subgroup(A4, 2)), 2);

  Group F21 = make("frobenius_semidirect([7], [[2]], 3)");
  D = frobenius_coset_construction(F21, sylow_subgroup(F21, 7));
  check_valid_strict(D, 2);
  for (const auto& B : D.parts) CHECK(B.size() == 7);

  Group S3 = Catalog::builtin().get("S3");
  CHECK_THROWS_AS(frobenius_coset_construction(S3, center(S3)), PreconditionError);
}

TEST_CASE("frobenius coset construction property") {
  for (const Group& G : small_catalog(24))
    for (const auto& A : abelian_subgroups_up_to_conjugacy(G, false)) {
      if (!is_frobenius_with_kernel(G, A)) continue;
      CAPTURE(G.name());
      SplitDecomposition D = frobenius_coset_construction(G, A);
      check_valid_strict(D, G.order() / A.size() - 1);
    }
}

TEST_CASE("promote") {
  Group D10 = Catalog::builtin().get("D10");
  SplitDecomposition D = promote(frobenius_coset_construction(D10, sylow_subgroup(D10, 5)));
  check_valid_strict(D, 2);
  std::multiset<std::size_t> sizes{D.parts[0].size(), D.parts[1].size()};
  CHECK(sizes == std::multiset<std::size_t>{2, 3});

  SplitDecomposition S3pair = read_decomposition(fixture("s3_order2_2split"));
  CHECK_THROWS_WITH_AS(promote(S3pair), doctest::Contains("not promotable"), PreconditionError);

  Group A5 = Catalog::builtin().get("A5");
  SplitDecomposition T = ti_cover_construction(A5, sylow_subgroup(A5, 5));
  check_valid_strict(T, 4);
  check_valid_strict(promote(T), 5);
}

TEST_CASE("promote property") {
  for (const Group& G : small_catalog(24))
    for (const auto& M : maximal_abelian_subgroups(G)) {
      SplitDecomposition D = maximal_abelian_construction(G, M);
      SplitDecomposition P;
      try {
        P = promote(D);
      } catch (const PreconditionError&) {
        continue;
      }
      CAPTURE(G.name());
      CHECK(P.A == D.A);
      check_valid_strict(P, D.n() + 1);
    }
}

TEST_CASE("TI cover construction") {
  for (auto [name, n] : std::vector<std::pair<const char*, std::size_t>>{{"A5", 4}, {"L2_4", 4}, {"L2_5", 4}}) {
    CAPTURE(name);
    Group G = Catalog::builtin().get(name);
    REQUIRE(has_ti_cover(G));
    std::size_t best = 0;
    for (const auto& M : maximal_abelian_subgroups(G)) best = std::max(best, M.size());
    for (const auto& M : maximal_abelian_subgroups(G)) {
      if (M.size() != best) continue;
      SplitDecomposition D = ti_cover_construction(G, M);
      check_valid_strict(D, n);
      for (const auto& B : D.parts)
        for (Elem x : B) CHECK_FALSE(M.contains(x));
      break;
    }
  }
  for (const char* name : {"L2_7", "A6", "PGL2_5"}) {
    CAPTURE(name);
    Group G = Catalog::builtin().get(name);
    CHECK_FALSE(has_ti_cover(G));
    CHECK_THROWS_WITH_AS(ti_cover_construction(G, sylow_subgroup(G, 3)),
                         doctest::Contains("TI cover inapplicable"), PreconditionError);
  }
}

TEST_CASE("printed tables validate") {
  struct Case {
    const char* file;
    std::size_t n;
  };
  for (Case c : std::vector<Case>{{"s3_order2_2split", 2},
                                  {"s4_klein_2split", 2},
                                  {"a4_order2_2split", 2},
                                  {"s4_trivial_3split", 3},
                                  {"a4_trivial_3split", 3},
                                  {"a4_order3_3split", 3},
                                  {"s3xs3_3split", 3},
                                  {"s4_order2_3split", 3},
                                  {"s4_transposition_3split", 3},
                                  {"s4_order3_3split", 3},
                                  {"s4_klein_nonnormal_3split", 3},
                                  {"s4_cyclic4_3split_corrected", 3}}) {
    CAPTURE(c.file);
    check_valid_strict(read_decomposition(fixture(c.file)), c.n);
    ValidationReport t = validate(read_decomposition(fixture(std::string(c.file) + "_tampered")));
    CHECK_FALSE(t.valid);
    CHECK(t.has(Violation::Kind::CommutingPair));
  }
}

TEST_CASE("printed cyclic-4 table for S4 has a commuting pair") {
  SplitDecomposition D = read_decomposition(fixture("s4_cyclic4_3split"));
  ValidationReport r = validate(D);
  CHECK_FALSE(r.valid);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == Violation::Kind::CommutingPair);
  std::set<std::string> pair{D.group.label(r.violations[0].elements[0]),
                             D.group.label(r.violations[0].elements[1])};
  CHECK(pair == std::set<std::string>{"(3 4)", "(1 2)(3 4)"});
}

TEST_CASE("rule-based tables validate") {
  check_valid_strict(order72_split(Catalog::builtin().get("G72")), 3);
  check_valid_strict(frobenius_q8_split(Catalog::builtin().get("FrobQ8_72")), 3);
  check_valid_strict(klein_complement_split(Catalog::builtin().get("G108")), 3);
  check_valid_strict(cyclic4_complement_split(Catalog::builtin().get("C15sC4")), 3);
  Group C3xS3 = Catalog::builtin().get("C3xS3");
  SubgroupRef A;
  for (const auto& M : maximal_abelian_subgroups(C3xS3))
    if (M.size() == 9) A = M;
  Elem t = 1;
  while (C3xS3.order_of(t) != 2) ++t;
  check_valid_strict(central_c3_split(C3xS3, A, t), 3);
  CHECK_THROWS_AS(order72_split(Catalog::builtin().get("FrobQ8_72")), PreconditionError);
}

TEST_CASE("exported rule fixtures match the builders") {
  CHECK(to_json(read_decomposition(fixture("g72_3split"))) ==
        to_json(order72_split(Catalog::builtin().get("G72"))));
  CHECK(to_json(read_decomposition(fixture("frobq8_72_3split"))) ==
        to_json(frobenius_q8_split(Catalog::builtin().get("FrobQ8_72"))));
}

TEST_CASE("validate reports each kind of violation") {
  Group S3 = Catalog::builtin().get("S3");
  SplitDecomposition D = read_decomposition(fixture("s3_order2_2split"));
  SplitDecomposition bad = D;
  bad.parts[1].push_back(bad.parts[0][0]);
  CHECK(validate(bad).has(Violation::Kind::Overlap));
  bad = D;
  bad.parts[1].pop_back();
  CHECK(validate(bad).has(Violation::Kind::Missing));
  CHECK(validate(bad).has(Violation::Kind::StrictFlag));
  bad = D;
  bad.parts.push_back({});
  CHECK(validate(bad).has(Violation::Kind::EmptyPart));
  bad = D;
  bad.A = {0, S3.parse_element("(1 2 3)")};
  CHECK(validate(bad).has(Violation::Kind::NotSubgroup));
  Group S4 = Catalog::builtin().get("S4");
  SplitDecomposition big;
  big.group = S4;
  big.A = subgroup_generated(S4, elems(S4, {"(1 2)", "(1 3)"})).members;
  CHECK(validate(big).has(Violation::Kind::NotAbelian));
}

TEST_CASE("decomposition JSON round trip") {
  SplitDecomposition D = read_decomposition(fixture("s4_klein_2split"));
  const auto path = (std::filesystem::temp_directory_path() / "splitdec_rt.json").string();
  write_decomposition(D, path);
  SplitDecomposition back = read_decomposition(path);
  CHECK(to_json(back) == to_json(D));
  CHECK(std::set<Elem>(back.A.begin(), back.A.end()) == std::set<Elem>(D.A.begin(), D.A.end()));
  std::filesystem::remove(path);
  const auto unknown = nlohmann::json::parse(R"j({"group":"S3","A":["()"],"parts":[["(1 4)"]]})j");
  const auto no_parts = nlohmann::json::parse(R"j({"group":"S3","A":["()"]})j");
  CHECK_THROWS_AS(decomposition_from_json(unknown), ParseError);
  CHECK_THROWS_AS(decomposition_from_json(no_parts), ParseError);
}

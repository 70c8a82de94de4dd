// Writes the rule-based 3-split tables and their tampered copies as JSON.
// usage: gen_fixtures <fixtures dir>
#include <algorithm>
#include <iostream>

#include "splitdec/catalog.hpp"
#include "splitdec/errors.hpp"
#include "splitdec/subgroups.hpp"
#include "splitdec/tables.hpp"

using namespace splitdec;

namespace {

// Moves the first element of B1 that commutes with something in B2 into B2.
SplitDecomposition tamper(SplitDecomposition D) {
  for (Elem x : D.parts[0])
    for (Elem y : D.parts[1])
      if (D.group.commute(x, y)) {
        std::erase(D.parts[0], x);
        D.parts[1].push_back(x);
        return D;
      }
  throw PreconditionError("no tampering move found");
}

void emit(const std::string& dir, const std::string& name, const SplitDecomposition& D) {
  write_decomposition(D, dir + "/" + name + ".json");
  write_decomposition(tamper(D), dir + "/" + name + "_tampered.json");
  std::cout << name << ": n=" << D.n() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <fixtures dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  const Catalog& cat = Catalog::builtin();
  try {
    emit(dir, "g72_3split", order72_split(cat.get("G72")));
    emit(dir, "frobq8_72_3split", frobenius_q8_split(cat.get("FrobQ8_72")));
    emit(dir, "g108_3split", klein_complement_split(cat.get("G108")));
    emit(dir, "c15sc4_3split", cyclic4_complement_split(cat.get("C15sC4")));
    Group G = cat.get("C3xS3");
    SubgroupRef A;
    for (const auto& M : maximal_abelian_subgroups(G))
      if (M.size() == 9) A = M;
    Elem t = 1;
    while (G.order_of(t) != 2) ++t;
    emit(dir, "c3xs3_3split", central_c3_split(G, A, t));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

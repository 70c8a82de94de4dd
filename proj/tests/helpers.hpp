#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "splitdec/catalog.hpp"
#include "splitdec/group.hpp"
#include "splitdec/subgroups.hpp"

namespace testutil {

using namespace splitdec;

// 0-based images, as written in the examples: (0 1 2 3) on 4 points.
inline Perm cyc0(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<Perm::Point> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<Perm::Point>(i);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = static_cast<Perm::Point>(c[(i + 1) % c.size()]);
  return Perm(img);
}

inline oracle::P raw(const Perm& p) { return {p.images().begin(), p.images().end()}; }

inline std::vector<oracle::P> raw_generators(const Group& G) {
  std::vector<oracle::P> out;
  for (Elem g : G.generators()) out.push_back(raw(G.element(g)));
  return out;
}

inline std::set<oracle::P> raw_set(const Group& G, const std::vector<Elem>& members) {
  std::set<oracle::P> out;
  for (Elem x : members) out.insert(raw(G.element(x)));
  return out;
}

inline std::vector<Group> small_catalog(std::size_t max_order = 24) {
  std::vector<Group> out;
  for (const auto& e : Catalog::builtin().entries())
    if (e.order <= max_order) out.push_back(Catalog::builtin().get(e.name));
  return out;
}

inline std::vector<Elem> elems(const Group& G, const std::vector<std::string>& cycles) {
  std::vector<Elem> out;
  for (const auto& c : cycles) out.push_back(G.parse_element(c));
  return out;
}

}  // namespace testutil

#include "splitdec/iso.hpp"

#include <algorithm>
#include <map>

#include "splitdec/catalog.hpp"
#include "splitdec/errors.hpp"

namespace splitdec {

std::string IsoTarget::str() const {
  switch (kind) {
    case IsoKind::CyclicOfOrder: return "C" + std::to_string(param);
    case IsoKind::Cyclic: return "cyclic";
    case IsoKind::Klein: return "klein";
    case IsoKind::D8: return "D8";
    case IsoKind::Q8: return "Q8";
    case IsoKind::S3: return "S3";
    case IsoKind::S4: return "S4";
    case IsoKind::A4: return "A4";
    case IsoKind::S3xS3: return "S3xS3";
    case IsoKind::ElementaryAbelian: return "elementary-abelian-" + std::to_string(param);
    case IsoKind::Dihedral: return "dihedral-" + std::to_string(param);
    case IsoKind::GeneralizedQuaternion: return "generalized-quaternion-" + std::to_string(param);
    case IsoKind::Semidihedral: return "semidihedral-" + std::to_string(param);
  }
  return {};
}

IsoTarget parse_iso_target(std::string_view name) {
  auto number = [&](std::string_view prefix) {
    const std::string rest(name.substr(prefix.size()));
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 6)
      throw ParseError("bad isomorphism target " + std::string(name));
    return std::stoi(rest);
  };
  auto starts = [&](std::string_view p) { return name.substr(0, p.size()) == p && name.size() > p.size(); };
  if (name == "cyclic") return {IsoKind::Cyclic};
  if (name == "klein") return {IsoKind::Klein};
  if (name == "D8") return {IsoKind::D8};
  if (name == "Q8") return {IsoKind::Q8};
  if (name == "S3") return {IsoKind::S3};
  if (name == "S4") return {IsoKind::S4};
  if (name == "A4") return {IsoKind::A4};
  if (name == "S3xS3") return {IsoKind::S3xS3};
  if (starts("elementary-abelian-")) return {IsoKind::ElementaryAbelian, number("elementary-abelian-")};
  if (starts("dihedral-")) return {IsoKind::Dihedral, number("dihedral-")};
  if (starts("generalized-quaternion-")) return {IsoKind::GeneralizedQuaternion, number("generalized-quaternion-")};
  if (starts("semidihedral-")) return {IsoKind::Semidihedral, number("semidihedral-")};
  if (starts("C")) return {IsoKind::CyclicOfOrder, number("C")};
  throw ParseError("unknown isomorphism target " + std::string(name));
}

namespace {

void check_cap(const Group& G) {
  if (G.order() > kRecognitionCap)
    throw ResourceError("isomorphism recognition is limited to order " + std::to_string(kRecognitionCap) +
                        ", got " + std::to_string(G.order()));
}

std::vector<int> order_profile(const Group& G) {
  std::vector<int> v;
  for (Elem x = 0; x < G.order(); ++x) v.push_back(G.order_of(x));
  std::sort(v.begin(), v.end());
  return v;
}

bool is_cyclic(const Group& G) {
  for (Elem x = 0; x < G.order(); ++x)
    if (static_cast<std::size_t>(G.order_of(x)) == G.order()) return true;
  return false;
}

// Reference group for the structured targets, or nothing when the parameter
// is outside the family's domain.
std::optional<Group> model(const IsoTarget& t) {
  try {
    switch (t.kind) {
      case IsoKind::Klein: return klein();
      case IsoKind::D8: return dihedral(8);
      case IsoKind::Q8: return generalized_quaternion(8);
      case IsoKind::S3: return symmetric(3);
      case IsoKind::S4: return symmetric(4);
      case IsoKind::A4: return alternating(4);
      case IsoKind::S3xS3: return direct_product(symmetric(3), symmetric(3));
      case IsoKind::Dihedral:
        if (t.param == 4) return klein();
        return dihedral(t.param);
      case IsoKind::GeneralizedQuaternion: return generalized_quaternion(t.param);
      case IsoKind::Semidihedral: return semidihedral(t.param);
      default: return std::nullopt;
    }
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const Group& H, const Group& G) {
  check_cap(G);
  check_cap(H);
  if (H.order() != G.order() || H.is_abelian() != G.is_abelian() || order_profile(H) != order_profile(G))
    return std::nullopt;
  const std::size_t n = H.order();
  // spanning tree of H's Cayley graph: word for every element
  const auto& hg = H.generators();
  const std::size_t k = hg.size();
  std::vector<Elem> parent(n, 0), via(n, 0), bfs{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem y = H.right_gen(bfs[i], j);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = bfs[i];
        via[y] = static_cast<Elem>(j);
        bfs.push_back(y);
      }
    }

  std::vector<std::vector<Elem>> cand(k);
  for (std::size_t j = 0; j < k; ++j)
    for (Elem x = 0; x < n; ++x)
      if (G.order_of(x) == H.order_of(hg[j])) cand[j].push_back(x);

  std::vector<Elem> img(k), phi(n);
  std::vector<char> used(n);
  auto check = [&]() {
    phi[0] = 0;
    for (std::size_t i = 1; i < n; ++i) phi[bfs[i]] = G.mul(phi[parent[bfs[i]]], img[via[bfs[i]]]);
    std::fill(used.begin(), used.end(), 0);
    for (Elem x = 0; x < n; ++x) {
      if (used[phi[x]]) return false;
      used[phi[x]] = 1;
    }
    for (Elem x = 0; x < n; ++x)
      for (std::size_t j = 0; j < k; ++j)
        if (phi[H.right_gen(x, j)] != G.mul(phi[x], img[j])) return false;
    return true;
  };
  // generator images must also respect the pairwise commuting pattern
  auto consistent = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      if (H.commute(hg[i], hg[j]) != G.commute(img[i], img[j])) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t j) -> bool {
    if (j == k) return check();
    for (Elem x : cand[j]) {
      img[j] = x;
      if (consistent(j) && self(self, j + 1)) return true;
    }
    return false;
  };
  if (rec(rec, 0)) return img;
  return std::nullopt;
}

bool small_iso_type(const Group& G, const IsoTarget& t) {
  check_cap(G);
  switch (t.kind) {
    case IsoKind::Cyclic:
      return is_cyclic(G);
    case IsoKind::CyclicOfOrder:
      return G.order() == static_cast<std::size_t>(t.param) && is_cyclic(G);
    case IsoKind::ElementaryAbelian: {
      if (!G.is_abelian() || G.order() < 2) return false;
      for (Elem x = 1; x < G.order(); ++x)
        if (G.order_of(x) != t.param) return false;
      return true;
    }
    default: {
      auto M = model(t);
      return M && M->order() == G.order() && find_isomorphism(*M, G).has_value();
    }
  }
}

Group subgroup_as_group(const Group& G, const SubgroupRef& H, std::string name) {
  std::vector<Perm> gens;
  std::vector<Elem> span{0};
  for (Elem x : H.members) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    std::vector<Elem> g;
    for (const auto& p : gens) g.push_back(G.index_of(p));
    g.push_back(x);
    span = subgroup_generated(G, g).members;
    gens.push_back(G.element(x));
  }
  return close_generators(G.degree(), gens, std::move(name));
}

}  // namespace splitdec

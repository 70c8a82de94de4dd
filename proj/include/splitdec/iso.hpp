#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitdec/group.hpp"
#include "splitdec/subgroups.hpp"

namespace splitdec {

enum class IsoKind {
  CyclicOfOrder,   // C_k, param = k
  Cyclic,          // any cyclic group
  Klein,
  D8,
  Q8,
  S3,
  S4,
  A4,
  S3xS3,
  ElementaryAbelian,      // param = p
  Dihedral,               // param = order 2k
  GeneralizedQuaternion,  // param = order 2^k
  Semidihedral,           // param = order 2^k
};

struct IsoTarget {
  IsoKind kind;
  int param = 0;
  std::string str() const;
};

// Names: C<k>, cyclic, klein, D8, Q8, S3, S4, A4, S3xS3,
// elementary-abelian-<p>, dihedral-<2k>, generalized-quaternion-<2^k>,
// semidihedral-<2^k>.
IsoTarget parse_iso_target(std::string_view name);

constexpr std::size_t kRecognitionCap = 100;

// Throws ResourceError when |G| > kRecognitionCap.
bool small_iso_type(const Group& G, const IsoTarget& target);

// Generator-image backtracking: an isomorphism H -> G as images of H's
// generators, or nothing. Throws ResourceError above kRecognitionCap.
std::optional<std::vector<Elem>> find_isomorphism(const Group& H, const Group& G);

// The subgroup as a group in its own right (on the same points), generated
// by a small greedy generating set of members.
Group subgroup_as_group(const Group& G, const SubgroupRef& H, std::string name = "");

}  // namespace splitdec

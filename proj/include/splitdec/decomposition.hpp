#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitdec/catalog.hpp"
#include "splitdec/group.hpp"
#include "splitdec/subgroups.hpp"

namespace splitdec {

// G = A ⊎ B_1 ⊎ ... ⊎ B_n. A is kept as a plain sorted element list so that a
// decomposition read from a file can be reported on even when A is not a
// subgroup.
struct SplitDecomposition {
  Group group;
  std::vector<Elem> A;
  std::vector<std::vector<Elem>> parts;
  bool strict = false;

  std::size_t n() const { return parts.size(); }
  // strict = every part has at least two elements.
  void set_strict_from_parts();
};

SplitDecomposition make_decomposition(const Group& G, const SubgroupRef& A,
                                      std::vector<std::vector<Elem>> parts);

struct Violation {
  enum class Kind {
    NotSubgroup,
    NotAbelian,
    ForeignElement,
    Overlap,
    Missing,
    EmptyPart,
    CommutingPair,
    StrictFlag,
  };
  Kind kind;
  std::string message;
  std::vector<Elem> elements;
};

std::string kind_name(Violation::Kind k);

struct ValidationReport {
  bool valid = true;
  bool strict = false;  // every part has at least two elements
  std::size_t n = 0;
  std::vector<Violation> violations;

  bool has(Violation::Kind k) const;
  std::string summary(const Group& G) const;
};

// Checks every invariant and lists each violation; never throws.
ValidationReport validate(const SplitDecomposition& D);

// {"group", "A", "parts", "strict"}; cycle strings, sorted by element index
// inside A and inside each part.
nlohmann::json to_json(const SplitDecomposition& D);
// "group" is looked up as a catalog name first, then as a spec or file path.
// Unknown elements raise ParseError.
SplitDecomposition decomposition_from_json(const nlohmann::json& j,
                                           const Catalog& catalog = Catalog::builtin());
SplitDecomposition read_decomposition(const std::string& path,
                                      const Catalog& catalog = Catalog::builtin());
void write_decomposition(const SplitDecomposition& D, const std::string& path);

// Group named by a catalog entry when possible, otherwise through resolve_group.
Group resolve_named_group(const std::string& source, const Catalog& catalog = Catalog::builtin());

}  // namespace splitdec

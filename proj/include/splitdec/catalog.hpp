#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "splitdec/group.hpp"

namespace splitdec {

// Family constructors. Orders are the group orders, not parameters like k.
Group cyclic(int k);
Group dihedral(int order);                // order 2k, k >= 3
Group generalized_quaternion(int order);  // order 2^k >= 8
Group semidihedral(int order);            // order 2^k >= 16
Group dicyclic(int order);                // order 4m, m >= 2
Group symmetric(int k);
Group alternating(int k);                 // k >= 3
Group klein();

enum class ExtraspecialType { ExponentP, ExponentP2, D8, Q8 };
// Odd p: Heisenberg group (exponent p) or C_{p^2} x| C_p (exponent p^2),
// both acting on p^2 points. p = 2: D8 or Q8.
Group extraspecial_p3(int p, ExtraspecialType type);

Group direct_product(const Group& G, const Group& H);

// Right regular representation of a group given by its multiplication rule on
// 0..n-1 (0 need not be the identity) and generator indices.
Group regular_group(int n, const std::function<int(int, int)>& mul, const std::vector<int>& gens,
                    std::string name);

// Kernel K = Z_{n_1} x ... x Z_{n_r} extended by the group generated by the
// integer matrices (acting on column vectors), realized as affine maps
// x -> Mx + b on the |K| kernel points. complement_order must equal the order
// of the matrix group. With require_fpf every nonidentity complement element
// must fix only 0, so the result is Frobenius with kernel K.
using IntMatrix = std::vector<std::vector<int>>;
Group affine_semidirect(const std::vector<int>& invariants, const std::vector<IntMatrix>& matrices,
                        std::size_t complement_order, bool require_fpf, std::string name = "");
Group frobenius_semidirect(const std::vector<int>& invariants, const std::vector<IntMatrix>& matrices,
                           std::size_t complement_order);

// (C3 x C3) x| D8 with D8 = <x, y | x^4 = y^2 = x^y x = 1>, u^x = v,
// v^x = u^-1, u^y = u, v^y = v^-1. Generators in order: u, v, x, y.
Group order72();

// Spec strings: value := int | ident | '[' values ']' | ident '(' values ')'.
struct SpecValue {
  enum class Kind { Int, Ident, List, Call };
  Kind kind = Kind::Int;
  long long number = 0;
  std::string name;               // Ident and Call
  std::vector<SpecValue> items;   // List elements and Call arguments
  std::string str() const;
};

SpecValue parse_spec(std::string_view text);  // throws ParseError
Group make(const SpecValue& spec);            // throws ValidationError
Group make(std::string_view spec_text);

// Group file: "name: X", "degree: d", then one "gen: <cycles>" per generator.
// Blank lines and lines starting with '#' are skipped.
Group load_group_file(const std::string& path);
Group parse_group_text(std::string_view text);
void save_group_file(const Group& G, const std::string& path);
std::string group_text(const Group& G);

struct CatalogEntry {
  std::string name;
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::string source;  // "file:<path relative to the data dir>" or a spec string
};

// Manifest lines: "name, order, |Z|, file-or-constructor". Groups are built
// on first request, checked against the listed order and center order, and
// cached. Thread safe.
class Catalog {
 public:
  explicit Catalog(std::string data_dir);
  // The data directory compiled in, overridable by SPLITDEC_DATA_DIR.
  static const Catalog& builtin();

  const std::string& data_dir() const { return dir_; }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(std::string_view name) const;
  Group get(std::string_view name) const;  // throws ValidationError when unknown

 private:
  std::string dir_;
  std::vector<CatalogEntry> entries_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Group, std::less<>> cache_;
};

// "catalog:NAME", an existing file path, or a spec string.
Group resolve_group(std::string_view source, const Catalog& catalog = Catalog::builtin());

}  // namespace splitdec

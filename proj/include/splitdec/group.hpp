#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitdec/permutation.hpp"

namespace splitdec {

using Elem = std::uint32_t;

// A fully enumerated permutation group. Element 0 is the identity, the rest
// follow breadth-first discovery order under right multiplication by the
// generators, so every index is reproducible from (degree, generator list).
// Immutable after construction and cheap to copy (shared storage).
class Group {
 public:
  static constexpr std::size_t kDefaultElementCap = 1'000'000;
  // Above this order products go through a permutation hash instead of a table.
  static constexpr std::size_t kTableLimit = 4096;

  Group() = default;

  const std::string& name() const { return name_; }
  Group renamed(std::string name) const;

  int degree() const;
  std::size_t order() const;
  const Perm& element(Elem x) const;
  const std::vector<Perm>& elements() const;
  const std::vector<Elem>& generators() const;
  bool has_table() const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  // x^g = g^-1 x g
  Elem conj(Elem x, Elem g) const;
  Elem pow(Elem x, long long k) const;
  bool commute(Elem a, Elem b) const;
  int order_of(Elem x) const;
  bool is_abelian() const;

  std::optional<Elem> find(const Perm& p) const;
  Elem index_of(const Perm& p) const;                  // throws ValidationError
  Elem parse_element(std::string_view cycles) const;   // throws ParseError
  std::string label(Elem x) const { return element(x).str(); }

  // x * generator(k) and g_k^-1 x g_k without hashing.
  Elem right_gen(Elem x, std::size_t k) const;
  const std::vector<Elem>& conj_by_generator(std::size_t k) const;

  // Conjugacy classes, ordered by least member; each class sorted.
  const std::vector<std::vector<Elem>>& classes() const;
  std::uint32_t class_of(Elem x) const;
  // c with rep^c = x, where rep is the least member of x's class.
  Elem conjugator(Elem x) const;

  // Sorted C_G(x); computed for all elements on first use.
  const std::vector<Elem>& centralizer_of(Elem x) const;

  friend Group close_generators(int, const std::vector<Perm>&, std::string, std::size_t);

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  std::string name_;
};

// Breadth-first closure. Throws ResourceError above cap elements and
// ValidationError if a generator has the wrong degree.
Group close_generators(int degree, const std::vector<Perm>& gens, std::string name = "",
                       std::size_t cap = Group::kDefaultElementCap);

}  // namespace splitdec

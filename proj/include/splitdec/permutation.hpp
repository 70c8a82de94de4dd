#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace splitdec {

// Bijection on {0..d-1}. Products act on the right: (a*b)(i) = b(a(i)),
// matching the usual cycle-notation convention for permutation groups.
class Perm {
 public:
  using Point = std::uint16_t;

  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(int degree);
  // 1-based cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the identity.
  // Commas between points are accepted, whitespace is ignored.
  static Perm parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  Point operator[](int i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  Perm operator*(const Perm& b) const;
  Perm inverse() const;
  bool is_identity() const;
  int order() const;
  // Same permutation on a larger point set, extra points fixed.
  Perm extended(int degree) const;
  Perm shifted(int offset, int degree) const;

  std::string str() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace splitdec

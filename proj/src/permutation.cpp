#include "splitdec/permutation.hpp"

#include <numeric>
#include <string>

#include "splitdec/errors.hpp"

namespace splitdec {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point p : img_) {
    if (p >= img_.size() || seen[p])
      throw ValidationError("image list is not a bijection");
    seen[p] = 1;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), Point{0});
  return p;
}

Perm Perm::parse(std::string_view text, int degree) {
  Perm p = identity(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
      ++i;
  };
  skip();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip();
      if (i == text.size())
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') { ++i; break; }
      if (text[i] == ',') { ++i; continue; }
      if (text[i] < '0' || text[i] > '9')
        throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in \"" +
                         std::string(text) + "\"");
      long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > 65535) throw ParseError("point out of range");
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<int>(v - 1));
    }
    for (int pt : cycle) {
      if (used[pt])
        throw ParseError("point " + std::to_string(pt + 1) + " repeated in \"" +
                         std::string(text) + "\"");
      used[pt] = 1;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.img_[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    skip();
  }
  return p;
}

Perm Perm::operator*(const Perm& b) const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = b.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Perm::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(img_.size(), 0);
  long long l = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return static_cast<int>(l);
}

Perm Perm::extended(int degree) const { return shifted(0, degree); }

Perm Perm::shifted(int offset, int degree) const {
  Perm r = identity(degree);
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[i + offset] = static_cast<Point>(img_[i] + offset);
  return r;
}

std::string Perm::str() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image bytes
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace splitdec

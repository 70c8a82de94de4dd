#pragma once

// Brute-force reference computations on raw image vectors. Deliberately
// shares no code with the library: elements are std::vector<int>, products
// are recomputed every time and sets are std::set.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using P = std::vector<int>;

inline P compose(const P& a, const P& b) {  // apply a, then b
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline P inverse(const P& a) {
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline std::set<P> closure(const std::vector<P>& gens, int degree) {
  P id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<P> seen{id};
  std::vector<P> todo{id};
  while (!todo.empty()) {
    P x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      P y = compose(x, g);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

inline bool commute(const P& a, const P& b) { return compose(a, b) == compose(b, a); }

inline std::set<P> centralizer(const std::set<P>& G, const P& x) {
  std::set<P> c;
  for (const auto& g : G)
    if (commute(g, x)) c.insert(g);
  return c;
}

inline int order(const P& x) {
  P y = x;
  int k = 1;
  P id(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) id[i] = static_cast<int>(i);
  while (y != id) {
    y = compose(y, x);
    ++k;
  }
  return k;
}

inline std::multiset<std::size_t> class_sizes(const std::set<P>& G) {
  std::set<P> done;
  std::multiset<std::size_t> out;
  for (const auto& x : G) {
    if (done.count(x)) continue;
    std::set<P> cls;
    for (const auto& g : G) cls.insert(compose(compose(inverse(g), x), g));
    done.insert(cls.begin(), cls.end());
    out.insert(cls.size());
  }
  return out;
}

inline bool is_abelian(const std::set<P>& S) {
  for (const auto& a : S)
    for (const auto& b : S)
      if (!commute(a, b)) return false;
  return true;
}

// Every abelian subgroup generated by at most three elements (enough for
// all groups of order <= 24, whose abelian subgroups have rank <= 3).
inline std::set<std::set<P>> abelian_subgroups(const std::set<P>& G) {
  std::vector<P> el(G.begin(), G.end());
  const int d = static_cast<int>(el[0].size());
  std::set<std::set<P>> out;
  const std::size_t n = el.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!commute(el[i], el[j])) continue;
      for (std::size_t k = j; k < n; ++k) {
        if (!commute(el[i], el[k]) || !commute(el[j], el[k])) continue;
        out.insert(closure({el[i], el[j], el[k]}, d));
      }
    }
  return out;
}

inline std::set<P> conjugate(const std::set<P>& H, const P& g) {
  std::set<P> out;
  for (const auto& h : H) out.insert(compose(compose(inverse(g), h), g));
  return out;
}

inline std::size_t count_conjugacy_classes(const std::set<std::set<P>>& subs, const std::set<P>& G) {
  std::set<std::set<P>> done;
  std::size_t classes = 0;
  for (const auto& H : subs) {
    if (done.count(H)) continue;
    ++classes;
    for (const auto& g : G) done.insert(conjugate(H, g));
  }
  return classes;
}

}  // namespace oracle

#include "splitdec/group.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "splitdec/errors.hpp"

namespace splitdec {

struct Group::Data {
  int degree = 0;
  std::vector<Perm> elems;
  std::vector<Elem> gens;
  std::unordered_map<Perm, Elem, PermHash> index;
  std::vector<Elem> right;  // right[x * ngens + k] = x * g_k
  std::size_t ngens = 0;
  std::vector<std::uint16_t> table;  // only when order <= kTableLimit
  std::vector<Elem> inverse;
  std::vector<int> orders;
  std::vector<std::vector<Elem>> conj_gen;
  std::vector<std::vector<Elem>> classes;
  std::vector<std::uint32_t> class_id;
  std::vector<Elem> conjugator;
  bool abelian = false;

  mutable std::once_flag cent_once;
  mutable std::vector<std::vector<Elem>> cent;

  Elem lookup(const Perm& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw ValidationError("permutation " + p.str() + " not in group");
    return it->second;
  }
  Elem mul(Elem a, Elem b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * elems.size() + b];
    return lookup(elems[a] * elems[b]);
  }
  bool commute(Elem a, Elem b) const {
    if (!table.empty()) return mul(a, b) == mul(b, a);
    const auto& x = elems[a].images();
    const auto& y = elems[b].images();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (y[x[i]] != x[y[i]]) return false;
    return true;
  }
};

Group Group::renamed(std::string name) const {
  Group g = *this;
  g.name_ = std::move(name);
  return g;
}

int Group::degree() const { return d_->degree; }
std::size_t Group::order() const { return d_->elems.size(); }
const Perm& Group::element(Elem x) const { return d_->elems[x]; }
const std::vector<Perm>& Group::elements() const { return d_->elems; }
const std::vector<Elem>& Group::generators() const { return d_->gens; }
bool Group::has_table() const { return !d_->table.empty(); }
Elem Group::mul(Elem a, Elem b) const { return d_->mul(a, b); }
Elem Group::inv(Elem a) const { return d_->inverse[a]; }
Elem Group::conj(Elem x, Elem g) const { return d_->mul(d_->mul(d_->inverse[g], x), g); }
bool Group::commute(Elem a, Elem b) const { return d_->commute(a, b); }
int Group::order_of(Elem x) const { return d_->orders[x]; }
bool Group::is_abelian() const { return d_->abelian; }

Elem Group::pow(Elem x, long long k) const {
  long long o = d_->orders[x];
  k %= o;
  if (k < 0) k += o;
  Elem r = 0, b = x;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::optional<Elem> Group::find(const Perm& p) const {
  if (p.degree() != d_->degree) return std::nullopt;
  auto it = d_->index.find(p);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

Elem Group::index_of(const Perm& p) const {
  if (p.degree() != d_->degree)
    throw ValidationError("permutation degree " + std::to_string(p.degree()) +
                          " does not match group degree " + std::to_string(d_->degree));
  return d_->lookup(p);
}

Elem Group::parse_element(std::string_view cycles) const {
  Perm p = Perm::parse(cycles, d_->degree);
  auto e = find(p);
  if (!e) throw ParseError("element " + std::string(cycles) + " is not in " + name_);
  return *e;
}

Elem Group::right_gen(Elem x, std::size_t k) const { return d_->right[x * d_->ngens + k]; }

const std::vector<Elem>& Group::conj_by_generator(std::size_t k) const { return d_->conj_gen[k]; }

const std::vector<std::vector<Elem>>& Group::classes() const { return d_->classes; }
std::uint32_t Group::class_of(Elem x) const { return d_->class_id[x]; }
Elem Group::conjugator(Elem x) const { return d_->conjugator[x]; }

const std::vector<Elem>& Group::centralizer_of(Elem x) const {
  const Data& d = *d_;
  std::call_once(d.cent_once, [&d] {
    const std::size_t n = d.elems.size();
    d.cent.assign(n, {});
    for (const auto& cls : d.classes) {
      Elem rep = cls.front();
      std::vector<Elem> base;
      for (Elem y = 0; y < n; ++y)
        if (d.commute(rep, y)) base.push_back(y);
      for (Elem x : cls) {
        Elem c = d.conjugator[x];
        Elem ci = d.inverse[c];
        std::vector<Elem> cx;
        cx.reserve(base.size());
        for (Elem y : base) cx.push_back(d.mul(d.mul(ci, y), c));
        std::sort(cx.begin(), cx.end());
        d.cent[x] = std::move(cx);
      }
    }
  });
  return d.cent[x];
}

Group close_generators(int degree, const std::vector<Perm>& gens, std::string name,
                       std::size_t cap) {
  if (degree < 1) throw ValidationError("degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw ValidationError("generator " + g.str() + " has degree " + std::to_string(g.degree()) +
                            ", expected " + std::to_string(degree));
  auto d = std::make_shared<Group::Data>();
  d->degree = degree;
  d->ngens = gens.size();
  d->elems.push_back(Perm::identity(degree));
  d->index.emplace(d->elems[0], 0);
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> via{0};

  for (std::size_t x = 0; x < d->elems.size(); ++x) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm y = d->elems[x] * gens[k];
      auto [it, fresh] = d->index.emplace(y, static_cast<Elem>(d->elems.size()));
      if (fresh) {
        if (d->elems.size() >= cap)
          throw ResourceError("closure exceeds element cap of " + std::to_string(cap));
        d->elems.push_back(std::move(y));
        parent.push_back(static_cast<Elem>(x));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      d->right.push_back(it->second);
    }
  }
  const std::size_t n = d->elems.size();
  for (const auto& g : gens) d->gens.push_back(d->index.at(g));

  if (n <= Group::kTableLimit) {
    // Column e of the table follows from column parent[e] by one generator step.
    d->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) d->table[a * n] = static_cast<std::uint16_t>(a);
    for (std::size_t e = 1; e < n; ++e) {
      std::size_t pe = parent[e], k = via[e];
      for (std::size_t a = 0; a < n; ++a)
        d->table[a * n + e] =
            static_cast<std::uint16_t>(d->right[d->table[a * n + pe] * d->ngens + k]);
    }
  }

  d->inverse.resize(n);
  d->orders.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    d->inverse[x] = d->index.at(d->elems[x].inverse());
    d->orders[x] = d->elems[x].order();
  }

  d->abelian = true;
  for (std::size_t i = 0; i < d->gens.size() && d->abelian; ++i)
    for (std::size_t j = i + 1; j < d->gens.size(); ++j)
      if (!d->commute(d->gens[i], d->gens[j])) {
        d->abelian = false;
        break;
      }

  d->conj_gen.assign(gens.size(), std::vector<Elem>(n));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Elem g = d->gens[k], gi = d->inverse[g];
    for (std::size_t x = 0; x < n; ++x)
      d->conj_gen[k][x] = d->mul(d->mul(gi, static_cast<Elem>(x)), g);
  }

  constexpr std::uint32_t kNone = ~0u;
  d->class_id.assign(n, kNone);
  d->conjugator.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (d->class_id[x] != kNone) continue;
    auto id = static_cast<std::uint32_t>(d->classes.size());
    std::vector<Elem> cls{x};
    d->class_id[x] = id;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      Elem y = cls[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem z = d->conj_gen[k][y];
        if (d->class_id[z] == kNone) {
          d->class_id[z] = id;
          d->conjugator[z] = d->right[d->conjugator[y] * d->ngens + k];
          cls.push_back(z);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    d->classes.push_back(std::move(cls));
  }

  Group G;
  G.d_ = std::move(d);
  G.name_ = std::move(name);
  return G;
}

}  // namespace splitdec

#include "splitdec/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "splitdec/errors.hpp"
#include "splitdec/finite_field.hpp"
#include "splitdec/subgroups.hpp"

#ifndef SPLITDEC_DATA_DIR
#define SPLITDEC_DATA_DIR "data"
#endif

namespace splitdec {

namespace {

using Point = Perm::Point;

Perm perm_from(std::vector<int> img) {
  std::vector<Point> p(img.begin(), img.end());
  return Perm(std::move(p));
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int imod(long long a, long long n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

Group cyclic(int k) {
  require(k >= 1, "cyclic group needs k >= 1");
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) img[i] = (i + 1) % k;
  return close_generators(k, {perm_from(img)}, "C" + std::to_string(k));
}

Group dihedral(int order) {
  require(order >= 6 && order % 2 == 0, "dihedral group needs even order >= 6");
  const int k = order / 2;
  std::vector<int> rot(k), ref(k);
  for (int i = 0; i < k; ++i) {
    rot[i] = (i + 1) % k;
    ref[i] = (k - i) % k;
  }
  return close_generators(k, {perm_from(rot), perm_from(ref)}, "D" + std::to_string(order));
}

Group regular_group(int n, const std::function<int(int, int)>& mul, const std::vector<int>& gens,
                    std::string name) {
  std::vector<Perm> perms;
  for (int g : gens) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = mul(x, g);
    perms.push_back(perm_from(img));
  }
  Group G = close_generators(n, perms, std::move(name));
  require(G.order() == static_cast<std::size_t>(n), "multiplication rule is not a group of order " +
                                                        std::to_string(n));
  return G;
}

Group dicyclic(int order) {
  require(order >= 8 && order % 4 == 0, "dicyclic group needs order 4m with m >= 2");
  const int m = order / 4, r = 2 * m;
  // element a + r b stands for x^a y^b with y x = x^-1 y, y^2 = x^m
  auto mul = [=](int u, int v) {
    const int a1 = u % r, b1 = u / r, a2 = v % r, b2 = v / r;
    const int a = imod(a1 + (b1 ? -a2 : a2), r);
    if (b1 && b2) return imod(a + m, r);
    return a + r * (b1 ^ b2);
  };
  return regular_group(order, mul, {1, r}, "Dic" + std::to_string(order));
}

Group generalized_quaternion(int order) {
  require(order >= 8 && is_power_of_two(order), "generalized quaternion group needs order 2^k >= 8");
  return dicyclic(order).renamed("Q" + std::to_string(order));
}

Group semidihedral(int order) {
  require(order >= 16 && is_power_of_two(order), "semidihedral group needs order 2^k >= 16");
  // affine maps z -> z + 1 and z -> (n/2 - 1) z on Z_n, n = order / 2
  const int n = order / 2;
  std::vector<int> t(n), s(n);
  for (int z = 0; z < n; ++z) {
    t[z] = (z + 1) % n;
    s[z] = imod(static_cast<long long>(n / 2 - 1) * z, n);
  }
  return close_generators(n, {perm_from(t), perm_from(s)}, "SD" + std::to_string(order));
}

Group symmetric(int k) {
  require(k >= 1, "symmetric group needs k >= 1");
  if (k == 1) return close_generators(1, {}, "S1");
  std::vector<int> cyc(k), tr(k);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  for (int i = 0; i < k; ++i) cyc[i] = (i + 1) % k;
  return close_generators(k, {perm_from(cyc), perm_from(tr)}, "S" + std::to_string(k));
}

Group alternating(int k) {
  require(k >= 3, "alternating group needs k >= 3");
  std::vector<Perm> gens;
  for (int i = 2; i < k; ++i) {
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 0);
    img[0] = 1;
    img[1] = i;
    img[i] = 0;
    gens.push_back(perm_from(img));
  }
  return close_generators(k, gens, "A" + std::to_string(k));
}

Group klein() {
  return close_generators(4, {perm_from({1, 0, 3, 2}), perm_from({2, 3, 0, 1})}, "V4");
}

Group extraspecial_p3(int p, ExtraspecialType type) {
  require(is_prime(p), "extraspecial group needs a prime p, got " + std::to_string(p));
  if (p == 2) {
    require(type == ExtraspecialType::D8 || type == ExtraspecialType::Q8,
            "extraspecial groups of order 8 are D8 or Q8");
    return type == ExtraspecialType::D8 ? dihedral(8) : generalized_quaternion(8);
  }
  require(type == ExtraspecialType::ExponentP || type == ExtraspecialType::ExponentP2,
          "odd p needs exponent p or exponent p^2");
  const int n = p * p;
  std::vector<int> a(n), b(n);
  if (type == ExtraspecialType::ExponentP) {
    // Heisenberg group on F_p^2: (x, y) -> (x + y, y) and (x, y) -> (x, y + 1)
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) {
        a[x + p * y] = (x + y) % p + p * y;
        b[x + p * y] = x + p * ((y + 1) % p);
      }
  } else {
    // on Z_{p^2}: z -> z + 1 and z -> (1 + p) z
    for (int z = 0; z < n; ++z) {
      a[z] = (z + 1) % n;
      b[z] = (1 + p) * z % n;
    }
  }
  const std::string name = "E" + std::to_string(p * n) + (type == ExtraspecialType::ExponentP ? "a" : "b");
  return close_generators(n, {perm_from(a), perm_from(b)}, name);
}

Group direct_product(const Group& G, const Group& H) {
  const int d = G.degree() + H.degree();
  std::vector<Perm> gens;
  for (Elem g : G.generators()) gens.push_back(G.element(g).shifted(0, d));
  for (Elem h : H.generators()) gens.push_back(H.element(h).shifted(G.degree(), d));
  return close_generators(d, gens, G.name() + "x" + H.name());
}

Group affine_semidirect(const std::vector<int>& invariants, const std::vector<IntMatrix>& matrices,
                        std::size_t complement_order, bool require_fpf, std::string name) {
  const int r = static_cast<int>(invariants.size());
  require(r >= 1, "kernel needs at least one invariant");
  long long size = 1;
  for (int n : invariants) {
    require(n >= 2, "kernel invariants must be >= 2");
    size *= n;
    require(size <= 60000, "kernel too large");
  }
  const int K = static_cast<int>(size);
  auto decode = [&](int x) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) {
      v[i] = x % invariants[i];
      x /= invariants[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int x = 0;
    for (int i = r - 1; i >= 0; --i) x = x * invariants[i] + v[i];
    return x;
  };

  std::vector<Perm> gens;
  for (int i = 0; i < r; ++i) {
    std::vector<int> img(K);
    for (int x = 0; x < K; ++x) {
      auto v = decode(x);
      v[i] = (v[i] + 1) % invariants[i];
      img[x] = encode(v);
    }
    gens.push_back(perm_from(img));
  }

  std::vector<Perm> linear;
  for (const auto& M : matrices) {
    require(static_cast<int>(M.size()) == r, "action matrix must be " + std::to_string(r) + "x" +
                                                 std::to_string(r));
    for (const auto& row : M) require(static_cast<int>(row.size()) == r, "action matrix row has wrong length");
    // column j must be killed by n_j so the map is well defined on the kernel
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        require(static_cast<long long>(M[i][j]) * invariants[j] % invariants[i] == 0,
                "action is not an automorphism of the kernel");
    std::vector<int> img(K);
    std::vector<char> hit(K, 0);
    for (int x = 0; x < K; ++x) {
      const auto v = decode(x);
      std::vector<int> w(r);
      for (int i = 0; i < r; ++i) {
        long long s = 0;
        for (int j = 0; j < r; ++j) s += static_cast<long long>(M[i][j]) * v[j];
        w[i] = imod(s, invariants[i]);
      }
      img[x] = encode(w);
      require(!hit[img[x]], "action is not an automorphism of the kernel");
      hit[img[x]] = 1;
    }
    linear.push_back(perm_from(img));
  }

  Group C = close_generators(K, linear, "", 1'000'000);
  require(C.order() == complement_order, "action matrices generate a group of order " +
                                             std::to_string(C.order()) + ", expected " +
                                             std::to_string(complement_order));
  if (require_fpf) {
    for (Elem c = 1; c < C.order(); ++c) {
      const Perm& p = C.element(c);
      for (int x = 1; x < K; ++x)
        require(p[x] != x, "action is not fixed-point-free");
    }
  }
  gens.insert(gens.end(), linear.begin(), linear.end());
  Group G = close_generators(K, gens, std::move(name));
  require(G.order() == static_cast<std::size_t>(K) * complement_order, "semidirect product has wrong order");
  return G;
}

Group frobenius_semidirect(const std::vector<int>& invariants, const std::vector<IntMatrix>& matrices,
                           std::size_t complement_order) {
  std::string name = "F";
  long long k = 1;
  for (int n : invariants) k *= n;
  name += std::to_string(k * static_cast<long long>(complement_order));
  return affine_semidirect(invariants, matrices, complement_order, true, name);
}

Group order72() {
  // translations u = e1, v = e2 on F_3^2; tau_a^M = tau_{Ma} under x -> Mx
  Group G = affine_semidirect({3, 3}, {{{0, 2}, {1, 0}}, {{1, 0}, {0, 2}}}, 8, false, "G72");
  return G;
}

// ---- spec strings ----

std::string SpecValue::str() const {
  switch (kind) {
    case Kind::Int:
      return std::to_string(number);
    case Kind::Ident:
      return name;
    case Kind::List:
    case Kind::Call: {
      std::string out = kind == Kind::Call ? name + "(" : "[";
      for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i].str();
      return out + (kind == Kind::Call ? ")" : "]");
    }
  }
  return {};
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view t) : t_(t) {}

  SpecValue parse_all() {
    SpecValue v = value();
    skip();
    if (i_ != t_.size()) fail("trailing input");
    return v;
  }

 private:
  std::string_view t_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(i_) + " in \"" + std::string(t_) + "\"");
  }
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::vector<SpecValue> values(char close) {
    std::vector<SpecValue> out;
    if (eat(close)) return out;
    for (;;) {
      out.push_back(value());
      if (eat(close)) return out;
      if (!eat(',')) fail(std::string("expected ',' or '") + close + "'");
    }
  }
  SpecValue value() {
    skip();
    if (i_ == t_.size()) fail("unexpected end");
    SpecValue v;
    const char c = t_[i_];
    if (c == '[') {
      ++i_;
      v.kind = SpecValue::Kind::List;
      v.items = values(']');
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_ + (c == '-');
      if (j == t_.size() || !std::isdigit(static_cast<unsigned char>(t_[j]))) fail("bad number");
      while (j < t_.size() && std::isdigit(static_cast<unsigned char>(t_[j]))) ++j;
      v.kind = SpecValue::Kind::Int;
      v.number = std::stoll(std::string(t_.substr(i_, j - i_)));
      i_ = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[j])) || t_[j] == '_')) ++j;
      v.name = std::string(t_.substr(i_, j - i_));
      i_ = j;
      v.kind = SpecValue::Kind::Ident;
      if (eat('(')) {
        v.kind = SpecValue::Kind::Call;
        v.items = values(')');
      }
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    return v;
  }
};

const std::vector<SpecValue>& args_of(const SpecValue& s) {
  static const std::vector<SpecValue> none;
  return s.kind == SpecValue::Kind::Call ? s.items : none;
}

int int_arg(const SpecValue& s, std::size_t i) {
  const auto& a = args_of(s);
  require(i < a.size() && a[i].kind == SpecValue::Kind::Int,
          s.name + ": argument " + std::to_string(i + 1) + " must be an integer");
  require(a[i].number >= -1'000'000 && a[i].number <= 1'000'000, s.name + ": argument out of range");
  return static_cast<int>(a[i].number);
}

std::vector<int> int_list(const SpecValue& v, const std::string& what) {
  require(v.kind == SpecValue::Kind::List, what + " must be a list of integers");
  std::vector<int> out;
  for (const auto& x : v.items) {
    require(x.kind == SpecValue::Kind::Int, what + " must be a list of integers");
    out.push_back(static_cast<int>(x.number));
  }
  return out;
}

IntMatrix matrix(const SpecValue& v) {
  require(v.kind == SpecValue::Kind::List, "action matrix must be a list of rows");
  IntMatrix M;
  for (const auto& row : v.items) M.push_back(int_list(row, "matrix row"));
  return M;
}

// A single matrix [[..]] or a list of matrices [[[..]], ...].
std::vector<IntMatrix> matrices(const SpecValue& v) {
  require(v.kind == SpecValue::Kind::List && !v.items.empty(), "action must be a matrix or list of matrices");
  const auto& first = v.items[0];
  require(first.kind == SpecValue::Kind::List, "action must be a matrix or list of matrices");
  if (!first.items.empty() && first.items[0].kind == SpecValue::Kind::List) {
    std::vector<IntMatrix> out;
    for (const auto& m : v.items) out.push_back(matrix(m));
    return out;
  }
  return {matrix(v)};
}

void arity(const SpecValue& s, std::size_t n) {
  require(args_of(s).size() == n, s.name + " takes " + std::to_string(n) + " argument(s)");
}

}  // namespace

SpecValue parse_spec(std::string_view text) { return SpecParser(text).parse_all(); }

Group make(const SpecValue& s) {
  require(s.kind == SpecValue::Kind::Ident || s.kind == SpecValue::Kind::Call,
          "group spec must be a constructor name, got " + s.str());
  const std::string& f = s.name;
  const auto& a = args_of(s);
  if (f == "klein") return klein();
  if (f == "order72") return order72();
  if (f == "cyclic") return arity(s, 1), cyclic(int_arg(s, 0));
  if (f == "dihedral") return arity(s, 1), dihedral(int_arg(s, 0));
  if (f == "generalized_quaternion" || f == "quaternion") return arity(s, 1), generalized_quaternion(int_arg(s, 0));
  if (f == "semidihedral") return arity(s, 1), semidihedral(int_arg(s, 0));
  if (f == "dicyclic") return arity(s, 1), dicyclic(int_arg(s, 0));
  if (f == "symmetric") return arity(s, 1), symmetric(int_arg(s, 0));
  if (f == "alternating") return arity(s, 1), alternating(int_arg(s, 0));
  if (f == "psl2" || f == "pgl2") {
    FiniteField F = [&] {
      if (a.size() == 1) return FiniteField::of_order(int_arg(s, 0));
      arity(s, 3);
      return FiniteField(int_arg(s, 0), int_arg(s, 1), int_list(a[2], "modulus"));
    }();
    return f == "psl2" ? psl2(F) : pgl2(F);
  }
  if (f == "extraspecial_p3") {
    arity(s, 2);
    require(a[1].kind == SpecValue::Kind::Ident, "extraspecial_p3 type must be a name");
    const std::string& t = a[1].name;
    ExtraspecialType type;
    if (t == "exponent_p" || t == "p") type = ExtraspecialType::ExponentP;
    else if (t == "exponent_p2" || t == "p2") type = ExtraspecialType::ExponentP2;
    else if (t == "D8" || t == "d8") type = ExtraspecialType::D8;
    else if (t == "Q8" || t == "q8") type = ExtraspecialType::Q8;
    else throw ValidationError("unknown extraspecial type " + t);
    return extraspecial_p3(int_arg(s, 0), type);
  }
  if (f == "direct_product") {
    require(a.size() >= 2, "direct_product takes at least two groups");
    Group G = make(a[0]);
    for (std::size_t i = 1; i < a.size(); ++i) G = direct_product(G, make(a[i]));
    return G;
  }
  if (f == "frobenius_semidirect" || f == "affine_semidirect") {
    arity(s, 3);
    const auto inv = a[0].kind == SpecValue::Kind::Int ? std::vector<int>{static_cast<int>(a[0].number)}
                                                       : int_list(a[0], "kernel invariants");
    const auto mats = matrices(a[1]);
    const int order = int_arg(s, 2);
    require(order >= 1, "complement order must be positive");
    if (f == "frobenius_semidirect") return frobenius_semidirect(inv, mats, static_cast<std::size_t>(order));
    return affine_semidirect(inv, mats, static_cast<std::size_t>(order), false);
  }
  throw ValidationError("unknown group family " + f);
}

Group make(std::string_view spec_text) {
  return make(parse_spec(spec_text)).renamed(std::string(spec_text));
}

// ---- group files ----

Group parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, name;
  int degree = -1, lineno = 0;
  bool have_name = false;
  std::vector<Perm> gens;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineno);
    const std::string key = trim(line.substr(0, colon));
    const std::string val = trim(line.substr(colon + 1));
    if (key == "name") {
      if (have_name) throw ParseError("duplicate name", lineno);
      name = val;
      have_name = true;
    } else if (key == "degree") {
      if (!have_name) throw ParseError("degree before name", lineno);
      if (degree >= 0) throw ParseError("duplicate degree", lineno);
      char* end = nullptr;
      const long d = std::strtol(val.c_str(), &end, 10);
      if (val.empty() || *end != '\0' || d < 1 || d > 65535) throw ParseError("bad degree '" + val + "'", lineno);
      degree = static_cast<int>(d);
    } else if (key == "gen") {
      if (degree < 0) throw ParseError("gen before degree", lineno);
      try {
        gens.push_back(Perm::parse(val, degree));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
    } else {
      throw ParseError("unknown key '" + key + "'", lineno);
    }
  }
  if (!have_name) throw ParseError("missing name line");
  if (degree < 0) throw ParseError("missing degree line");
  return close_generators(degree, gens, name);
}

Group load_group_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open group file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_group_text(ss.str());
}

std::string group_text(const Group& G) {
  std::string out = "name: " + (G.name().empty() ? std::string("G") : G.name()) + "\n";
  out += "degree: " + std::to_string(G.degree()) + "\n";
  for (Elem g : G.generators()) out += "gen: " + G.label(g) + "\n";
  return out;
}

void save_group_file(const Group& G, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << group_text(G);
  if (!f) throw Error("write failed for " + path);
}

// ---- catalog ----

Catalog::Catalog(std::string data_dir) : dir_(std::move(data_dir)) {
  const std::string path = dir_ + "/catalog.txt";
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open catalog manifest " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
      const auto c = line.find(',', pos);
      if (c == std::string::npos) throw ParseError("expected 'name, order, |Z|, source'", lineno);
      fields.push_back(line.substr(pos, c - pos));
      pos = c + 1;
    }
    fields.push_back(line.substr(pos));
    for (auto& s : fields) {
      const auto s0 = s.find_first_not_of(" \t\r");
      const auto s1 = s.find_last_not_of(" \t\r");
      s = s0 == std::string::npos ? "" : s.substr(s0, s1 - s0 + 1);
    }
    CatalogEntry e;
    e.name = fields[0];
    try {
      e.order = std::stoull(fields[1]);
      e.center_order = std::stoull(fields[2]);
    } catch (const std::exception&) {
      throw ParseError("bad order or center field", lineno);
    }
    e.source = fields[3];
    if (e.name.empty() || e.source.empty()) throw ParseError("empty name or source", lineno);
    if (find(e.name)) throw ParseError("duplicate catalog name " + e.name, lineno);
    entries_.push_back(std::move(e));
  }
}

const Catalog& Catalog::builtin() {
  static const Catalog c = [] {
    const char* env = std::getenv("SPLITDEC_DATA_DIR");
    return Catalog(env && *env ? env : SPLITDEC_DATA_DIR);
  }();
  return c;
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

Group Catalog::get(std::string_view name) const {
  const CatalogEntry* e = find(name);
  if (!e) throw ValidationError("unknown catalog group " + std::string(name));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
  }
  Group G = e->source.rfind("file:", 0) == 0 ? load_group_file(dir_ + "/" + e->source.substr(5))
                                               : make(e->source);
  G = G.renamed(e->name);
  if (G.order() != e->order)
    throw ValidationError(e->name + ": order " + std::to_string(G.order()) + ", manifest says " +
                          std::to_string(e->order));
  const std::size_t z = center(G).size();
  if (z != e->center_order)
    throw ValidationError(e->name + ": center order " + std::to_string(z) + ", manifest says " +
                          std::to_string(e->center_order));
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(e->name, G).first->second;
}

Group resolve_group(std::string_view source, const Catalog& catalog) {
  if (source.rfind("catalog:", 0) == 0) return catalog.get(source.substr(8));
  std::error_code ec;
  if (std::filesystem::is_regular_file(std::filesystem::path(std::string(source)), ec))
    return load_group_file(std::string(source));
  return make(source);
}

}  // namespace splitdec

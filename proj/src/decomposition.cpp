#include "splitdec/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "splitdec/errors.hpp"

namespace splitdec {

void SplitDecomposition::set_strict_from_parts() {
  strict = std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.size() >= 2; });
}

SplitDecomposition make_decomposition(const Group& G, const SubgroupRef& A,
                                      std::vector<std::vector<Elem>> parts) {
  SplitDecomposition D;
  D.group = G;
  D.A = A.members;
  for (auto& p : parts) std::sort(p.begin(), p.end());
  D.parts = std::move(parts);
  D.set_strict_from_parts();
  return D;
}

std::string kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::NotSubgroup: return "not-subgroup";
    case Violation::Kind::NotAbelian: return "not-abelian";
    case Violation::Kind::ForeignElement: return "foreign-element";
    case Violation::Kind::Overlap: return "overlap";
    case Violation::Kind::Missing: return "missing";
    case Violation::Kind::EmptyPart: return "empty-part";
    case Violation::Kind::CommutingPair: return "commuting-pair";
    case Violation::Kind::StrictFlag: return "strict-flag";
  }
  return "unknown";
}

bool ValidationReport::has(Violation::Kind k) const {
  return std::any_of(violations.begin(), violations.end(),
                     [k](const Violation& v) { return v.kind == k; });
}

std::string ValidationReport::summary(const Group& G) const {
  std::ostringstream out;
  out << (valid ? "valid" : "invalid") << " n=" << n << " strict=" << (strict ? "yes" : "no")
      << "\n";
  for (const auto& v : violations) {
    out << "  " << kind_name(v.kind) << ": " << v.message;
    for (Elem x : v.elements) out << " " << G.label(x);
    out << "\n";
  }
  return out.str();
}

namespace {

void add(ValidationReport& r, Violation::Kind k, std::string msg, std::vector<Elem> elems = {}) {
  r.valid = false;
  r.violations.push_back({k, std::move(msg), std::move(elems)});
}

}  // namespace

ValidationReport validate(const SplitDecomposition& D) {
  const Group& G = D.group;
  const std::size_t N = G.order();
  ValidationReport r;
  r.n = D.parts.size();

  std::vector<Elem> A = D.A;
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  if (A.empty() || A.front() != 0 || A.back() >= N || !is_subgroup(G, A)) {
    add(r, Violation::Kind::NotSubgroup, "A is not a subgroup");
  } else {
    bool abelian = true;
    for (std::size_t i = 0; i < A.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < A.size(); ++j)
        if (!G.commute(A[i], A[j])) {
          add(r, Violation::Kind::NotAbelian, "A is not abelian", {A[i], A[j]});
          abelian = false;
          break;
        }
  }

  // owner[x] = 0 for A, i + 1 for part i.
  constexpr std::uint32_t kFree = ~0u;
  std::vector<std::uint32_t> owner(N, kFree);
  auto place = [&](Elem x, std::uint32_t who, const std::string& where) {
    if (x >= N) {
      add(r, Violation::Kind::ForeignElement, "element index out of range in " + where);
      return false;
    }
    if (owner[x] != kFree) {
      std::string first = owner[x] == 0 ? "A" : "B" + std::to_string(owner[x]);
      add(r, Violation::Kind::Overlap, "element in both " + first + " and " + where, {x});
      return false;
    }
    owner[x] = who;
    return true;
  };
  for (Elem a : D.A) place(a, 0, "A");
  for (std::size_t i = 0; i < D.parts.size(); ++i) {
    const std::string where = "B" + std::to_string(i + 1);
    if (D.parts[i].empty()) add(r, Violation::Kind::EmptyPart, where + " is empty");
    for (Elem x : D.parts[i]) place(x, static_cast<std::uint32_t>(i + 1), where);
  }
  std::vector<Elem> missing;
  for (Elem x = 0; x < N; ++x)
    if (owner[x] == kFree) missing.push_back(x);
  if (!missing.empty())
    add(r, Violation::Kind::Missing, std::to_string(missing.size()) + " element(s) not covered:",
        missing);

  // Commuting pairs inside a part, found through centralizers.
  for (std::size_t i = 0; i < D.parts.size(); ++i) {
    const auto id = static_cast<std::uint32_t>(i + 1);
    for (Elem x : D.parts[i]) {
      if (x >= N) continue;
      for (Elem y : G.centralizer_of(x))
        if (y > x && owner[y] == id)
          add(r, Violation::Kind::CommutingPair, "commuting pair in B" + std::to_string(i + 1),
              {x, y});
    }
  }

  r.strict = std::all_of(D.parts.begin(), D.parts.end(), [](const auto& p) { return p.size() >= 2; });
  if (D.strict && !r.strict)
    add(r, Violation::Kind::StrictFlag, "marked strict but a part has fewer than two elements");
  return r;
}

nlohmann::json to_json(const SplitDecomposition& D) {
  auto labels = [&](std::vector<Elem> xs) {
    std::sort(xs.begin(), xs.end());
    nlohmann::json out = nlohmann::json::array();
    for (Elem x : xs) out.push_back(D.group.label(x));
    return out;
  };
  nlohmann::json j;
  j["group"] = D.group.name();
  j["A"] = labels(D.A);
  j["parts"] = nlohmann::json::array();
  for (const auto& p : D.parts) j["parts"].push_back(labels(p));
  j["strict"] = D.strict;
  return j;
}

Group resolve_named_group(const std::string& source, const Catalog& catalog) {
  if (catalog.find(source)) return catalog.get(source);
  return resolve_group(source, catalog);
}

SplitDecomposition decomposition_from_json(const nlohmann::json& j, const Catalog& catalog) {
  if (!j.is_object()) throw ParseError("decomposition must be a JSON object");
  for (const char* key : {"group", "A", "parts"})
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  if (!j["group"].is_string()) throw ParseError("\"group\" must be a string");
  SplitDecomposition D;
  D.group = resolve_named_group(j["group"].get<std::string>(), catalog);
  auto read_list = [&](const nlohmann::json& list, const std::string& what) {
    if (!list.is_array()) throw ParseError(what + " must be an array of cycle strings");
    std::vector<Elem> out;
    for (const auto& s : list) {
      if (!s.is_string()) throw ParseError(what + " must be an array of cycle strings");
      out.push_back(D.group.parse_element(s.get<std::string>()));
    }
    return out;
  };
  D.A = read_list(j["A"], "\"A\"");
  if (!j["parts"].is_array()) throw ParseError("\"parts\" must be an array");
  for (std::size_t i = 0; i < j["parts"].size(); ++i)
    D.parts.push_back(read_list(j["parts"][i], "part " + std::to_string(i + 1)));
  if (j.contains("strict")) {
    if (!j["strict"].is_boolean()) throw ParseError("\"strict\" must be a boolean");
    D.strict = j["strict"].get<bool>();
  } else {
    D.set_strict_from_parts();
  }
  return D;
}

SplitDecomposition read_decomposition(const std::string& path, const Catalog& catalog) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return decomposition_from_json(j, catalog);
}

void write_decomposition(const SplitDecomposition& D, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ResourceError("cannot write " + path);
  out << to_json(D).dump(2) << "\n";
  if (!out) throw ResourceError("write failed for " + path);
}

}  // namespace splitdec

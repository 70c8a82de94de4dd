// splitdec: command-line front end.
// Exit codes: 0 success or valid, 1 invalid but well formed, 2 usage, parse or
// precondition error, 3 budget or resource cap reached.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "splitdec/audit.hpp"
#include "splitdec/catalog.hpp"
#include "splitdec/classifier.hpp"
#include "splitdec/commuting_graph.hpp"
#include "splitdec/constructions.hpp"
#include "splitdec/decomposition.hpp"
#include "splitdec/errors.hpp"
#include "splitdec/iso.hpp"
#include "splitdec/minimizer.hpp"

using namespace splitdec;

namespace {

constexpr int kOk = 0, kInvalid = 1, kUsage = 2, kBudget = 3;

constexpr const char* kASpecHelp =
    "abelian subgroup: generator cycles (repeat the flag or separate with ';'), "
    "'center', 'trivial', an isomorphism type such as 'klein' or 'C4' (must name a single "
    "conjugacy class), or 'auto' (ti-cover: a largest maximal abelian subgroup; min: every "
    "class representative)";

std::vector<std::string> split_generators(const std::vector<std::string>& specs) {
  std::vector<std::string> out;
  for (const auto& s : specs) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
      if (item.find_first_not_of(' ') != std::string::npos) out.push_back(item);
  }
  return out;
}

bool looks_like_cycles(const std::string& s) { return s.find('(') != std::string::npos; }

SubgroupRef by_iso_type(const Group& G, const std::string& name) {
  const IsoTarget t = parse_iso_target(name);
  std::vector<SubgroupRef> hits;
  for (const auto& H : abelian_subgroups_up_to_conjugacy(G, true))
    if (small_iso_type(subgroup_as_group(G, H), t)) hits.push_back(H);
  if (hits.empty()) throw PreconditionError("no abelian subgroup of type " + name);
  if (hits.size() > 1)
    throw PreconditionError(std::to_string(hits.size()) + " conjugacy classes of abelian subgroups of type " +
                            name + "; give generators instead");
  return hits[0];
}

// A from the specifier; nullopt for "auto".
std::optional<SubgroupRef> resolve_A(const Group& G, const std::vector<std::string>& specs) {
  const auto gens = split_generators(specs);
  if (gens.empty()) throw PreconditionError("--A is empty");
  if (gens.size() == 1 && !looks_like_cycles(gens[0])) {
    const std::string& s = gens[0];
    if (s == "auto") return std::nullopt;
    if (s == "center") return center(G);
    if (s == "trivial") return trivial_subgroup(G);
    return by_iso_type(G, s);
  }
  std::vector<Elem> elems;
  for (const auto& g : gens) elems.push_back(G.parse_element(g));
  SubgroupRef A = subgroup_generated(G, elems);
  if (!A.is_abelian) throw PreconditionError("A = <" + gens[0] + (gens.size() > 1 ? ", ..." : "") + "> is not abelian");
  return A;
}

SubgroupRef largest_maximal_abelian(const Group& G) {
  auto all = maximal_abelian_subgroups(G);
  if (all.empty()) throw PreconditionError("no maximal abelian subgroup");
  // Stable: the first of largest order in enumeration order.
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].size() > all[best].size()) best = i;
  return all[best];
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct Common {
  std::string group;
  std::vector<std::string> A;
  std::string out;
};

int cmd_decompose(const Common& c, const std::string& method) {
  const Group G = resolve_group(c.group);
  if (method.rfind("coset:", 0) == 0) {
    if (c.A.empty()) throw PreconditionError("coset:g needs --A");
    const auto A = resolve_A(G, c.A);
    if (!A) throw PreconditionError("coset:g needs an explicit A");
    const Elem g = G.parse_element(method.substr(6));
    if (A->contains(g)) throw PreconditionError("g lies in A; the coset Ag is A itself");
    const auto parts = coset_partition(G, *A, g);
    nlohmann::json j;
    j["group"] = G.name();
    j["A"] = nlohmann::json::array();
    for (Elem a : A->members) j["A"].push_back(G.label(a));
    j["g"] = G.label(g);
    j["parts"] = nlohmann::json::array();
    for (const auto& p : parts) {
      nlohmann::json part = nlohmann::json::array();
      for (Elem x : p) part.push_back(G.label(x));
      j["parts"].push_back(part);
    }
    if (c.out.empty()) std::cout << dump(j);
    else write_text(c.out, dump(j));
    std::cerr << "coset partition: " << parts.size() << " noncommuting sets of size " << parts[0].size() << "\n";
    return kOk;
  }

  std::optional<SubgroupRef> A;
  if (!c.A.empty()) A = resolve_A(G, c.A);
  SplitDecomposition D;
  if (method == "ti-cover") {
    D = ti_cover_construction(G, A ? *A : largest_maximal_abelian(G));
  } else {
    if (!A) throw PreconditionError(method + " needs an explicit --A");
    if (method == "maximal-abelian") D = maximal_abelian_construction(G, *A);
    else if (method == "frobenius") D = frobenius_coset_construction(G, *A);
    else throw PreconditionError("unknown method " + method);
  }
  const ValidationReport v = validate(D);
  const std::string json = dump(to_json(D));
  std::ostream& report = c.out.empty() ? std::cerr : std::cout;
  if (c.out.empty()) std::cout << json;
  else write_text(c.out, json);
  report << v.summary(G);
  return v.valid ? kOk : kInvalid;
}

int cmd_min(const Common& c, bool over_all, bool non_strict, std::uint64_t budget) {
  const Group G = resolve_group(c.group);
  MinOptions o;
  o.strict = !non_strict;
  o.budget = budget;
  std::optional<SubgroupRef> A;
  if (!over_all) {
    if (c.A.empty()) throw PreconditionError("give --A or --over-all-A");
    A = resolve_A(G, c.A);
  }
  const MinResult r = A ? exact_min_fixed_A(G, *A, o) : min_over_all_A(G, o);
  std::string file;
  if (!c.out.empty() && r.decomposition) {
    write_decomposition(*r.decomposition, c.out);
    file = c.out;
  }
  std::cout << dump(to_json(r, file));
  return r.proven_exact ? kOk : kBudget;
}

int cmd_verify(const std::string& path, bool json) {
  const SplitDecomposition D = read_decomposition(path);
  const ValidationReport v = validate(D);
  if (json) {
    nlohmann::json j;
    j["valid"] = v.valid;
    j["strict"] = v.strict;
    j["n"] = v.n;
    j["violations"] = nlohmann::json::array();
    for (const auto& x : v.violations) j["violations"].push_back({{"kind", kind_name(x.kind)}, {"message", x.message}});
    std::cout << dump(j);
  } else {
    std::cout << v.summary(D.group);
  }
  return v.valid ? kOk : kInvalid;
}

int cmd_audit(const std::string& path, bool json) {
  const SplitDecomposition D = read_decomposition(path);
  const ValidationReport v = validate(D);
  if (!v.valid) {
    std::cout << v.summary(D.group);
    return kInvalid;
  }
  const AuditReport a = audit(D);
  std::cout << (json ? dump(a.to_json()) : a.text());
  return a.passed() ? kOk : kInvalid;
}

int cmd_sweep(int n, const std::vector<std::string>& names, std::uint64_t budget) {
  std::vector<Group> groups;
  if (names.empty()) groups = default_sweep_groups();
  for (const auto& s : names) groups.push_back(resolve_group(s));
  SweepOptions o;
  o.budget = budget;
  const SweepReport rep = sweep(groups, n, o);
  for (const auto& r : rep.records) std::cout << r.to_json().dump() << "\n";
  const std::size_t bad = rep.count("discrepancy"), open = rep.count("unresolved");
  std::cerr << rep.records.size() << " pairs, " << rep.count("agree") << " agree, " << bad << " discrepancies, "
            << open << " unresolved\n";
  if (bad > 0) return kInvalid;
  return open > 0 ? kBudget : kOk;
}

int cmd_graph(const Common& c) {
  const Group G = resolve_group(c.group);
  const SubgroupRef A = c.A.empty() ? center(G) : [&] {
    auto a = resolve_A(G, c.A);
    if (!a) throw PreconditionError("graph needs an explicit A");
    return *a;
  }();
  std::vector<Elem> verts;
  for (Elem x = 0; x < G.order(); ++x)
    if (!A.contains(x)) verts.push_back(x);
  const std::string dot = export_dot(CommutingGraph::build(G, verts));
  if (c.out.empty()) std::cout << dot;
  else write_text(c.out, dot);
  return kOk;
}

int cmd_catalog() {
  for (const auto& e : Catalog::builtin().entries())
    std::cout << e.name << "\t" << e.order << "\t" << e.center_order << "\t" << e.source << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split decompositions G = A ⊎ B_1 ⊎ ... ⊎ B_n of finite nonabelian groups"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP thread cap (0: runtime default)")->check(CLI::NonNegativeNumber);

  const std::string group_help = "catalog:NAME, a group file, or a constructor such as symmetric(4)";
  Common common;
  std::string method;
  bool over_all = false, strict = false, non_strict = false, json = false;
  std::uint64_t budget = Budget::kDefaultNodes;
  std::string path;
  int n = 0;
  std::vector<std::string> sweep_groups;

  auto* dec = app.add_subcommand("decompose", "build a decomposition with a constructive method");
  dec->add_option("--group", common.group, group_help)->required();
  dec->add_option("--A", common.A, kASpecHelp);
  dec->add_option("--method", method, "maximal-abelian, frobenius, ti-cover or coset:<g>")->required();
  dec->add_option("--out", common.out, "decomposition file (stdout when absent)");

  auto* mn = app.add_subcommand("min", "least n with an n-split (strict by default)");
  mn->add_option("--group", common.group, group_help)->required();
  mn->add_option("--A", common.A, kASpecHelp);
  mn->add_flag("--over-all-A", over_all, "minimize over every abelian A (same as --A auto)");
  auto* fs = mn->add_flag("--strict", strict, "parts of size >= 2 (default)");
  mn->add_flag("--non-strict", non_strict, "allow singleton parts")->excludes(fs);
  mn->add_option("--budget", budget, "search node cap");
  mn->add_option("--out", common.out, "write the witness decomposition here");

  auto* ver = app.add_subcommand("verify", "validate a decomposition file");
  ver->add_option("file", path)->required();
  ver->add_flag("--json", json, "JSON report");

  auto* aud = app.add_subcommand("audit", "necessary-condition audit of a valid decomposition");
  aud->add_option("file", path)->required();
  aud->add_flag("--json", json, "JSON report");

  auto* sw = app.add_subcommand("sweep", "classifier against solver, one JSON line per (G, A)");
  sw->add_option("--n", n, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  sw->add_option("--groups", sweep_groups, "group sources (default: the built-in sweep list)");
  sw->add_option("--budget", budget, "search node cap per pair");

  auto* gr = app.add_subcommand("graph", "commuting graph on G \\ A in DOT (A defaults to the center)");
  gr->add_option("--group", common.group, group_help)->required();
  gr->add_option("--A", common.A, kASpecHelp);
  gr->add_option("--out", common.out, "DOT file (stdout when absent)");

  auto* cat = app.add_subcommand("catalog", "list catalog groups: name, order, |Z|, source");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*dec) return cmd_decompose(common, method);
    if (*mn) {
      const bool all = over_all || (split_generators(common.A) == std::vector<std::string>{"auto"});
      return cmd_min(common, all, non_strict, budget);
    }
    if (*ver) return cmd_verify(path, json);
    if (*aud) return cmd_audit(path, json);
    if (*sw) return cmd_sweep(n, sweep_groups, budget);
    if (*gr) return cmd_graph(common);
    if (*cat) return cmd_catalog();
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kBudget;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

#include "splitdec/classifier.hpp"

#include <exception>
#include <set>

#include "splitdec/catalog.hpp"
#include "splitdec/errors.hpp"
#include "splitdec/iso.hpp"
#include "splitdec/minimizer.hpp"

namespace splitdec {

namespace {

bool is_type(const Group& G, const char* name, std::size_t order) {
  return G.order() == order && small_iso_type(G, parse_iso_target(name));
}

std::size_t index_of(const Group& G, const SubgroupRef& A) { return G.order() / A.size(); }

std::vector<Elem> centralizer_in(const Group& G, const SubgroupRef& A, Elem x) {
  return sorted_intersection(G.centralizer_of(x), A.members);
}

SubgroupRef sylow2(const Group& G) { return sylow_subgroup(G, 2); }

bool sylow2_is(const Group& G, const char* name, std::size_t order) {
  SubgroupRef S = sylow2(G);
  if (S.size() != order) return false;
  return small_iso_type(subgroup_as_group(G, S), parse_iso_target(name));
}

std::optional<Elem> element_of_order(const Group& G, const std::vector<Elem>& set, int order) {
  for (Elem x : set)
    if (G.order_of(x) == order) return x;
  return std::nullopt;
}

bool elementary_abelian_3(const Group& G, const SubgroupRef& A) {
  for (Elem a : A.members)
    if (a != 0 && G.order_of(a) != 3) return false;
  return true;
}

bool odd(const SubgroupRef& A) { return A.size() % 2 == 1; }

bool frobenius(const Group& G, const SubgroupRef& A, std::size_t index) {
  return index_of(G, A) == index && is_frobenius_with_kernel(G, A);
}

// G = C3 x F with F Frobenius of kernel A ∩ F and complement <t> of order 2.
bool c3_times_frobenius(const Group& G, const SubgroupRef& A) {
  if (sylow2(G).size() != 2 || index_of(G, A) != 2) return false;
  std::vector<Elem> outside;
  for (Elem x = 0; x < G.order(); ++x)
    if (!A.contains(x)) outside.push_back(x);
  auto t = element_of_order(G, outside, 2);
  if (!t) return false;
  const auto fixed = centralizer_in(G, A, *t);
  if (fixed.size() != 3 || !is_subset(fixed, center(G).members)) return false;
  const auto K = commutator_set(G, A, *t);
  if (K.size() <= 1 || sorted_intersection(G.centralizer_of(*t), K).size() != 1) return false;
  return fixed.size() * K.size() * 2 == G.order();
}

// S = <s> cyclic of order 4, G = AS, A = [A,S], |C_A(s^2)| = 3, [A,s^2] > 1.
bool cyclic4_fixed3(const Group& G, const SubgroupRef& A) {
  SubgroupRef S = sylow2(G);
  if (S.size() != 4 || index_of(G, A) != 4) return false;
  auto s = element_of_order(G, S.members, 4);
  if (!s) return false;
  if (commutator_set(G, A, *s).size() != A.size()) return false;
  const Elem t = G.mul(*s, *s);
  return centralizer_in(G, A, t).size() == 3 && commutator_set(G, A, t).size() > 1;
}

// S Klein, G = AS, A elementary abelian of order 9 or 27, and either
// G = S3 x S3 or A = C_A(s1) x C_A(s2) x C_A(s3) with factors of order 3.
bool klein_rule(const Group& G, const SubgroupRef& A, bool want_s3xs3) {
  SubgroupRef S = sylow2(G);
  if (index_of(G, A) != 4 || !sylow2_is(G, "klein", 4)) return false;
  if ((A.size() != 9 && A.size() != 27) || !elementary_abelian_3(G, A)) return false;
  if (want_s3xs3) return A.size() == 9 && is_type(G, "S3xS3", 36);
  if (A.size() != 27) return false;
  std::vector<std::vector<Elem>> C;
  for (Elem s : S.members)
    if (s != 0) C.push_back(centralizer_in(G, A, s));
  for (const auto& c : C)
    if (c.size() != 3) return false;
  std::set<Elem> prod;
  for (Elem a : C[0])
    for (Elem b : C[1])
      for (Elem c : C[2]) prod.insert(G.mul(G.mul(a, b), c));
  return prod.size() == 27;
}

// S = <x, y> dihedral of order 8, G = AS, A = <u, v> of order 9 with
// u^x = v, v^x = u^-1, u^y = u, v^y = v^-1.
bool d8_order72(const Group& G, const SubgroupRef& A) {
  SubgroupRef S = sylow2(G);
  if (A.size() != 9 || index_of(G, A) != 8 || !elementary_abelian_3(G, A)) return false;
  if (!sylow2_is(G, "D8", 8)) return false;
  for (Elem x : S.members) {
    if (G.order_of(x) != 4) continue;
    for (Elem y : S.members) {
      if (G.order_of(y) != 2 || G.conj(x, y) != G.inv(x)) continue;
      for (Elem u : A.members) {
        if (u == 0) continue;
        const Elem v = G.conj(u, x);
        if (v == u || v == G.inv(u)) continue;
        if (G.conj(v, x) == G.inv(u) && G.conj(u, y) == u && G.conj(v, y) == G.inv(v)) return true;
      }
    }
  }
  return false;
}

std::vector<ClassificationRule> build_rules() {
  using R = ClassificationRule;
  std::vector<R> r;
  // n = 1.
  r.push_back(R{1, true, "n1.frobenius.index2", "Frobenius of index 2 with abelian kernel A of odd order",
                [](const Group& G, const SubgroupRef& A) { return odd(A) && frobenius(G, A, 2); }});
  // n = 2, normal A.
  r.push_back(R{2, true, "n2.normal.index2", "|G:A| = 2, |Z(G)| <= 2, |A| >= 4",
                [](const Group& G, const SubgroupRef& A) {
                  return index_of(G, A) == 2 && center(G).size() <= 2 && A.size() >= 4;
                }});
  r.push_back(R{2, true, "n2.normal.index3-frobenius", "Frobenius with kernel A of index 3",
                [](const Group& G, const SubgroupRef& A) { return frobenius(G, A, 3); }});
  r.push_back(R{2, true, "n2.normal.order8-center", "D8 or Q8 with A = Z(G)",
                [](const Group& G, const SubgroupRef& A) {
                  return index_of(G, A) == 4 && (is_type(G, "D8", 8) || is_type(G, "Q8", 8));
                }});
  r.push_back(R{2, true, "n2.normal.s3-trivial", "S3 with A = 1",
                [](const Group& G, const SubgroupRef& A) { return A.size() == 1 && is_type(G, "S3", 6); }});
  r.push_back(R{2, true, "n2.normal.s4-klein", "S4 with A the normal Klein subgroup",
                [](const Group& G, const SubgroupRef& A) { return A.size() == 4 && is_type(G, "S4", 24); }});
  // n = 2, nonnormal A.
  r.push_back(R{2, false, "n2.nonnormal.s3", "S3 with |G:A| = 3",
                [](const Group& G, const SubgroupRef& A) { return A.size() == 2 && is_type(G, "S3", 6); }});
  r.push_back(R{2, false, "n2.nonnormal.a4", "A4 with |G:A| = 6",
                [](const Group& G, const SubgroupRef& A) { return A.size() == 2 && is_type(G, "A4", 12); }});
  // n = 3, normal A of odd order.
  r.push_back(R{3, true, "n3.odd.frobenius-index3", "|S| = 1, Frobenius with kernel A of index 3",
                [](const Group& G, const SubgroupRef& A) {
                  return odd(A) && sylow2(G).size() == 1 && frobenius(G, A, 3);
                }});
  r.push_back(R{3, true, "n3.odd.frobenius-index2", "|S| = 2, Frobenius with kernel A of index 2, |A| >= 7",
                [](const Group& G, const SubgroupRef& A) {
                  return odd(A) && sylow2(G).size() == 2 && A.size() >= 7 && frobenius(G, A, 2);
                }});
  r.push_back(R{3, true, "n3.odd.c3-times-frobenius", "|S| = 2, G = C3 x F with F Frobenius of complement S",
                [](const Group& G, const SubgroupRef& A) { return odd(A) && c3_times_frobenius(G, A); }});
  r.push_back(R{3, true, "n3.odd.frobenius-cyclic4", "S cyclic of order 4, Frobenius with kernel A of index 4",
                [](const Group& G, const SubgroupRef& A) {
                  return odd(A) && sylow2_is(G, "C4", 4) && frobenius(G, A, 4);
                }});
  r.push_back(R{3, true, "n3.odd.cyclic4-fixed3", "S cyclic of order 4, G = AS, A = [A,S], |C_A(t)| = 3, [A,t] > 1",
                [](const Group& G, const SubgroupRef& A) { return odd(A) && cyclic4_fixed3(G, A); }});
  r.push_back(R{3, true, "n3.odd.a4-trivial", "S Klein, A = 1, G = A4",
                [](const Group& G, const SubgroupRef& A) { return A.size() == 1 && is_type(G, "A4", 12); }});
  r.push_back(R{3, true, "n3.odd.klein-s3xs3", "S Klein, G = S3 x S3, A = C3 x C3",
                [](const Group& G, const SubgroupRef& A) { return klein_rule(G, A, true); }});
  r.push_back(R{3, true, "n3.odd.klein-order27", "S Klein, G = AS, A = C_A(s1) x C_A(s2) x C_A(s3) of order 27",
                [](const Group& G, const SubgroupRef& A) { return klein_rule(G, A, false); }});
  r.push_back(R{3, true, "n3.odd.d8-s4-trivial", "S = D8, A = 1, G = S4",
                [](const Group& G, const SubgroupRef& A) { return A.size() == 1 && is_type(G, "S4", 24); }});
  r.push_back(R{3, true, "n3.odd.d8-order72", "S = D8 acting on A = C3 x C3 as u -> v -> u^-1 (x), u -> u, v -> v^-1 (y)",
                [](const Group& G, const SubgroupRef& A) { return d8_order72(G, A); }});
  r.push_back(R{3, true, "n3.odd.frobenius-q8", "S = Q8, Frobenius with kernel A of index 8",
                [](const Group& G, const SubgroupRef& A) {
                  return odd(A) && A.size() > 1 && sylow2_is(G, "Q8", 8) && frobenius(G, A, 8);
                }});
  // n = 3, normal A of even order.
  r.push_back(R{3, true, "n3.even.frobenius-index3", "Frobenius with kernel A and complement of order 3",
                [](const Group& G, const SubgroupRef& A) { return !odd(A) && frobenius(G, A, 3); }});
  r.push_back(R{3, true, "n3.even.index2-center2", "|G:A| = 2, |A| >= 6, |Z(G)| = 2",
                [](const Group& G, const SubgroupRef& A) {
                  return !odd(A) && index_of(G, A) == 2 && A.size() >= 6 && center(G).size() == 2;
                }});
  r.push_back(R{3, true, "n3.even.order8-center", "D8 or Q8 with A = Z(G)",
                [](const Group& G, const SubgroupRef& A) {
                  return !odd(A) && A.size() == 2 && (is_type(G, "D8", 8) || is_type(G, "Q8", 8));
                }});
  r.push_back(R{3, true, "n3.even.s4-klein", "S4 with A the normal Klein subgroup",
                [](const Group& G, const SubgroupRef& A) { return A.size() == 4 && is_type(G, "S4", 24); }});
  // n = 3, nonnormal A.
  r.push_back(R{3, false, "n3.nonnormal.a4", "A4 with |A| = 2 or 3",
                [](const Group& G, const SubgroupRef& A) {
                  return (A.size() == 2 || A.size() == 3) && is_type(G, "A4", 12);
                }});
  r.push_back(R{3, false, "n3.nonnormal.s4", "S4 with |A| = 2, 3 or 4",
                [](const Group& G, const SubgroupRef& A) {
                  return A.size() >= 2 && A.size() <= 4 && is_type(G, "S4", 24);
                }});
  return r;
}

}  // namespace

const std::vector<ClassificationRule>& classification_rules() {
  static const std::vector<ClassificationRule> rules = build_rules();
  return rules;
}

Prediction predict(const Group& G, const SubgroupRef& A, int n) {
  if (n < 1 || n > 3) throw PreconditionError("classification covers n = 1, 2, 3 only");
  if (G.is_abelian()) throw PreconditionError(G.name() + " is abelian");
  if (!A.is_abelian) throw PreconditionError("A is not abelian");
  for (const auto& rule : classification_rules())
    if (rule.n == n && rule.A_normal == A.is_normal && rule.predicate(G, A)) return {true, rule.case_id};
  return {};
}

nlohmann::json SweepRecord::to_json() const {
  nlohmann::json j;
  j["group"] = group;
  j["A"] = A;
  j["n"] = n;
  j["predicted"] = predicted;
  j["solved"] = solved ? nlohmann::json(*solved) : nlohmann::json(nullptr);
  j["case_id"] = case_id.empty() ? nlohmann::json(nullptr) : nlohmann::json(case_id);
  j["status"] = status;
  return j;
}

std::size_t SweepReport::count(const std::string& status) const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.status == status;
  return c;
}

SweepReport sweep(const std::vector<Group>& groups, int n, const SweepOptions& opt) {
  struct Job {
    const Group* G;
    SubgroupRef A;
  };
  std::vector<Job> jobs;
  for (const auto& G : groups)
    for (auto& A : abelian_subgroups_up_to_conjugacy(G, true)) jobs.push_back({&G, std::move(A)});

  SweepReport rep;
  rep.records.resize(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const long count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (long i = 0; i < count; ++i) {
    const Job& job = jobs[static_cast<std::size_t>(i)];
    SweepRecord& rec = rep.records[static_cast<std::size_t>(i)];
    try {
      rec.group = job.G->name();
      for (Elem a : job.A.members) rec.A.push_back(job.G->label(a));
      rec.n = n;
      Prediction p = predict(*job.G, job.A, n);
      rec.predicted = p.holds;
      rec.case_id = p.case_id;
      MinOptions mo;
      mo.budget = opt.budget;
      mo.parallel = false;
      MinResult r = strict_feasible(*job.G, job.A, n, mo);
      if (r.feasible || r.proven_exact) rec.solved = r.feasible;
      rec.status = !rec.solved ? "unresolved" : *rec.solved == rec.predicted ? "agree" : "discrepancy";
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rep;
}

std::vector<Group> default_sweep_groups() {
  std::vector<Group> out;
  const Catalog& cat = Catalog::builtin();
  for (const auto& e : cat.entries())
    if (e.order <= 24) out.push_back(cat.get(e.name));
  for (const char* name : {"D32", "Q32", "SD32", "E27a", "E27b", "S3xS3", "F36", "G72", "FrobQ8_72",
                           "G108", "C15sC4", "F55", "A5"})
    out.push_back(cat.get(name));
  return out;
}

}  // namespace splitdec

#include "splitdec/audit.hpp"

#include <sstream>

#include "splitdec/errors.hpp"
#include "splitdec/minimizer.hpp"

namespace splitdec {

namespace {

// k! compared with x without overflow.
bool factorial_at_least(std::uint64_t k, std::uint64_t x) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) {
    f *= i;
    if (f >= x) return true;
  }
  return f >= x;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

AuditCheck check(std::string id, std::string statement) {
  AuditCheck c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  return c;
}

}  // namespace

bool AuditReport::passed() const {
  for (const auto& c : checks)
    if (c.applies && !c.passed && !c.warning) return false;
  return true;
}

std::vector<std::string> AuditReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.applies && !c.passed && !c.warning) out.push_back(c.id);
  return out;
}

std::string AuditReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    const char* tag = !c.applies ? "n/a " : c.passed ? "PASS" : c.warning ? "WARN" : "FAIL";
    os << tag << " (" << c.id << ") " << c.statement;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  return os.str();
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"id", c.id},
                           {"statement", c.statement},
                           {"applies", c.applies},
                           {"passed", c.passed},
                           {"warning", c.warning},
                           {"detail", c.detail}});
  j["notes"] = notes;
  return j;
}

AuditReport audit(const SplitDecomposition& D) {
  const ValidationReport v = validate(D);
  if (!v.valid) throw PreconditionError("audit needs a valid decomposition:\n" + v.summary(D.group));
  const Group& G = D.group;
  const SubgroupRef A = make_subgroup(G, D.A);
  const std::uint64_t n = D.n(), order = G.order(), index = G.order() / A.size();
  const SubgroupRef Z = center(G);
  AuditReport rep;

  {
    AuditCheck c = check("i", "abelian U not inside A has |U∩A|(|U:U∩A|-1) <= n");
    for (const auto& U : abelian_candidates(G)) {
      if (is_subset(U, A.members)) continue;
      const std::uint64_t meet = sorted_intersection(U, A.members).size();
      if (meet * (U.size() / meet - 1) > n) {
        c.passed = false;
        c.detail = "|U| = " + str(U.size()) + ", |U∩A| = " + str(meet);
        break;
      }
    }
    if (G.order() > kMaximalAbelianLimit) c.detail = "checked on abelian centralizers";
    rep.checks.push_back(c);
  }

  AuditCheck c2 = check("ii", "b outside A with <b>∩A = 1 has (o(b)-1)|C_A(b)| <= n");
  AuditCheck c3 = check("iii", "b outside A has |C_A(b)| <= n and o(b) <= 2n");
  AuditCheck c4 = check("iv", "A normal: b outside A has o(Ab) <= n+1");
  c4.applies = A.is_normal;
  for (Elem b = 0; b < G.order(); ++b) {
    if (A.contains(b)) continue;
    const std::uint64_t ob = static_cast<std::uint64_t>(G.order_of(b));
    const std::uint64_t cab = sorted_intersection(G.centralizer_of(b), A.members).size();
    std::uint64_t k = 1;  // order of Ab: least k with b^k in A
    Elem p = b;
    while (!A.contains(p)) {
      p = G.mul(p, b);
      ++k;
    }
    if (k == ob && (ob - 1) * cab > n && c2.passed) {
      c2.passed = false;
      c2.detail = "b = " + G.label(b);
    }
    if ((cab > n || ob > 2 * n) && c3.passed) {
      c3.passed = false;
      c3.detail = "b = " + G.label(b);
    }
    if (A.is_normal && k > n + 1 && c4.passed) {
      c4.passed = false;
      c4.detail = "b = " + G.label(b) + ", o(Ab) = " + str(k);
    }
  }
  rep.checks.push_back(c2);
  rep.checks.push_back(c3);
  rep.checks.push_back(c4);

  {
    AuditCheck c = check("v", "strict: Z(G) <= A and |Z(G)| <= n");
    c.applies = v.strict;
    c.passed = !v.strict || (is_subset(Z.members, A.members) && Z.size() <= n);
    rep.checks.push_back(c);
  }

  {
    AuditCheck c = check("vi", "p-subgroups with p >= n+2, or p^2 > 2n and order >= p^2, lie in A");
    c.applies = false;
    for (int p : prime_factors(static_cast<long long>(order))) {
      const std::uint64_t q = static_cast<std::uint64_t>(p);
      // Every p-element lies in a Sylow subgroup, of order >= p^2 in case (2).
      if (!(q >= n + 2 || (q * q > 2 * n && order % (q * q) == 0))) continue;
      c.applies = true;
      for (Elem x = 1; x < G.order() && c.passed; ++x) {
        std::uint64_t o = static_cast<std::uint64_t>(G.order_of(x));
        while (o % q == 0) o /= q;
        if (o == 1 && !A.contains(x)) {
          c.passed = false;
          c.detail = "p = " + str(q) + ", " + G.label(x) + " outside A";
        }
      }
    }
    rep.checks.push_back(c);
  }

  {
    AuditCheck c = check("vii", "A = 1: |G| <= n!");
    c.applies = A.size() == 1;
    c.warning = true;
    if (c.applies) {
      c.passed = factorial_at_least(n, order);
      c.detail = "|G| = " + str(order) + ", n = " + str(n);
      rep.notes.push_back(std::string("corrected bound |G| <= (n+1)! ") +
                          (factorial_at_least(n + 1, order) ? "holds" : "fails") +
                          " (an abelian U has |U| - 1 <= n, so maximal abelian normal subgroups of a Sylow subgroup have order <= n+1)");
    }
    rep.checks.push_back(c);
  }

  {
    AuditCheck c = check("viii", "A = Z(G) and |A| = n: |G:A| <= 2n");
    c.applies = A.members == Z.members && A.size() == n;
    c.passed = !c.applies || index <= 2 * n;
    rep.checks.push_back(c);
  }

  {
    AuditCheck c = check("ix", "|G:A| <= (n^2)!, and |G:A| <= 2 when n = 1");
    c.passed = n == 1 ? index <= 2 : factorial_at_least(n * n, index);
    c.detail = "|G:A| = " + str(index);
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace splitdec

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitdec/coloring.hpp"
#include "splitdec/group.hpp"
#include "splitdec/subgroups.hpp"

namespace splitdec {

// One clause of the classification of groups with a strict n-split over A,
// for n = 1, 2, 3. Clauses for normal A of odd and of even order are kept
// apart, as are those for nonnormal A.
struct ClassificationRule {
  int n = 0;
  bool A_normal = true;
  std::string case_id;  // e.g. "n2.normal.index2"
  std::string description;
  std::function<bool(const Group&, const SubgroupRef&)> predicate;
};

const std::vector<ClassificationRule>& classification_rules();

struct Prediction {
  bool holds = false;
  std::string case_id;  // the first matching clause, empty when none
};

// pre: G nonabelian, A an abelian subgroup, n in {1, 2, 3}.
Prediction predict(const Group& G, const SubgroupRef& A, int n);

struct SweepRecord {
  std::string group;
  std::vector<std::string> A;  // element labels
  int n = 0;
  bool predicted = false;
  std::optional<bool> solved;  // empty when the budget ran out
  std::string case_id;
  std::string status;  // "agree", "discrepancy" or "unresolved"

  nlohmann::json to_json() const;
};

struct SweepOptions {
  std::uint64_t budget = Budget::kDefaultNodes;
  bool parallel = true;  // OpenMP over (group, A) pairs
};

struct SweepReport {
  std::vector<SweepRecord> records;
  std::size_t count(const std::string& status) const;
};

// Every (G, A) with A running over conjugacy-class representatives of
// abelian subgroups (trivial included), compared with the exact solver.
SweepReport sweep(const std::vector<Group>& groups, int n, const SweepOptions& opt = {});

// Nonabelian catalog groups of order <= 24, the 2-groups of maximal class of
// order 32, the extraspecial groups of order 27 and the larger groups that
// carry a 3-split.
std::vector<Group> default_sweep_groups();

}  // namespace splitdec

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weyl/family.hpp"

namespace weyl {

enum class CheckStatus { Pass, Fail, Skip };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name, expected, observed;
  CheckStatus status = CheckStatus::Pass;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0;

  std::size_t count(CheckStatus s) const;
  /// True iff every non-skipped check passed.
  bool passed() const { return count(CheckStatus::Fail) == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  std::uint64_t random_samples = 1000000;  // random triples/quadruples in roundup-equivalence
  std::uint64_t choose_instances = 10000;
  /// Called with each check as it completes (for streaming output).
  std::function<void(const CheckResult&)> on_check;
};

/// trivial-shapes, roundup-equivalence, reconstruction-roundtrip, paper-tables,
/// aut-groups, thin-exceptions, plus srg, isomorphism-separation, twin-freeness
/// and choose-lemma.
const std::vector<std::string>& suite_names();
/// Throws PreconditionViolation for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

/// Every valid tuple (both orders of i, j; both modes).
std::vector<FamilySpec> admissible_specs(Geometry g, int q, int n);
/// Thin tuples covered by the isomorphism theorem: i <= j <= n/2 with the
/// restrictions on k, exact and at-least.
bool in_thin_scope(const FamilySpec& s);
/// The two thin families whose automorphism group is larger than Sym(n) predicts.
bool thin_exception(const FamilySpec& s);

/// Normalized nontrivial thick specs over q in {2, 3}, n <= max_n, with both
/// biparts of at most max_part vertices.
std::vector<FamilySpec> thick_instances(int max_n, std::uint64_t max_part);
/// Nontrivial thin specs in scope with n <= max_n.
std::vector<FamilySpec> thin_instances(int max_n);

/// Dual spec of a thick spec (intersections of orthogonal complements).
FamilySpec thick_dual(const FamilySpec& s);

}  // namespace weyl

#pragma once

#include <string>
#include <vector>

#include "fcpi/finite_group.hpp"
#include "fcpi/homcount.hpp"
#include "fcpi/presentation.hpp"

namespace fcpi {

struct Abelianization {
  long long free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, ascending chain

  bool operator==(const Abelianization&) const = default;
  std::string to_string() const;
};

/// Smith normal form of the relator exponent-sum matrix.
Abelianization abelianization(const GroupPresentation& p);

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string expected;
  std::string actual;
  double seconds = 0.0;  // informational only; never serialized
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
  void add(std::string name, bool pass, std::string expected, std::string actual) {
    checks.push_back({std::move(name), pass ? "pass" : "fail", std::move(expected),
                      std::move(actual), 0.0});
  }
  void skip(std::string name, std::string expected, std::string actual) {
    checks.push_back({std::move(name), "skip", std::move(expected), std::move(actual), 0.0});
  }
};

/// One record per line: "name | status | expected | actual". Deterministic.
std::string report_to_text(const VerificationReport& r);
VerificationReport report_from_text(const std::string& text);
std::string report_summary(const VerificationReport& r);

/// Equal abelianizations and equal hom counts into every battery group.
/// A sound necessary condition for isomorphism, never a proof; budget
/// overruns are recorded as skips.
VerificationReport compare_presentations(const GroupPresentation& p1,
                                         const GroupPresentation& p2,
                                         const std::vector<FiniteGroupTable>& battery,
                                         long long hom_budget = kDefaultHomBudget);

/// Runs the full pipeline for the F_C arrangement in dimension n and every
/// module invariant; structural failures surface as failed checks.
VerificationReport run_invariant_suite(int n, const std::vector<FiniteGroupTable>& battery,
                                       long long hom_budget = kDefaultHomBudget,
                                       long long tietze_budget = 10000);
VerificationReport run_invariant_suite(int n);

}  // namespace fcpi

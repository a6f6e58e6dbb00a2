#pragma once

#include <string>
#include <vector>

#include "cayley/corpus.hpp"
#include "cayley/group.hpp"

namespace cayley {

struct CheckFailure {
  std::string instance;
  std::string expected;
  std::string actual;
};

struct CheckSkip {
  std::string instance;
  std::string reason;
};

/// Outcome of one registered check over a corpus. A check is vacuous when no
/// corpus instance met its hypothesis; vacuous checks are reported, never
/// silently counted as passes.
struct CheckReport {
  std::string check_id;
  int instances_examined = 0;
  std::vector<CheckFailure> failures;
  std::vector<CheckSkip> skipped;

  std::string verdict() const {
    if (!failures.empty()) return "fail";
    return instances_examined > 0 ? "pass" : "vacuous";
  }
};

/// Registered check ids, in the fixed registry order.
std::vector<std::string> registered_checks();

/// One-line statement of what a check asserts.
std::string check_title(const std::string& check_id);

CheckReport run_check(const std::string& check_id, const Corpus& corpus,
                      const Limits& limits = {});

/// Runs the selected checks (all when empty), in registry order. Checks run
/// concurrently; reports are assembled in registry order regardless.
std::vector<CheckReport> run_suite(const Corpus& corpus,
                                   const std::vector<std::string>& selection = {},
                                   const Limits& limits = {});

/// Pass iff no check failed (vacuous checks do not fail the suite).
bool suite_passes(const std::vector<CheckReport>& reports);

}  // namespace cayley

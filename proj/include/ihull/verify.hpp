#pragma once

#include <string>
#include <vector>

#include "ihull/hull.hpp"
#include "ihull/spectrum.hpp"

namespace ihull {

enum class SuiteStatus { Pass, Fail, Skipped };
const char* suite_status_name(SuiteStatus s);

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  std::size_t checks = 0;
  std::string detail;  // unmet hypothesis or counterexample
};

struct VerifyOptions {
  std::size_t max_hull = kDefaultHullCap;
  int max_cover = kDefaultMaxCover;
};

std::vector<std::string> suite_names();

// selector: "" or "all", otherwise a comma-separated list of suite names.
// Cap and budget errors propagate; other errors inside a suite count as a failure.
std::vector<SuiteResult> run_suites(const Semigroup& S, const std::string& selector = "",
                                    const VerifyOptions& opts = {});

}  // namespace ihull

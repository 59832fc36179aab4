#pragma once

// Property suites bundled behind `ptorus verify`.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptorus/farey.hpp"
#include "ptorus/sl2.hpp"

namespace ptorus {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Fault injection for the suites; a null rule means the Vieta flip.
struct VerifyHooks {
  TraceRule child_trace = nullptr;
};

/// oracle-equivalence, totient-identity, triangle-inequality,
/// strict-convexity, cusp-avoidance.
std::vector<std::string> suite_names();

/// Accepts full names and the short forms oracle, totient, triangle,
/// convexity, cusp. "all" expands to every suite. Throws InvalidArgument.
std::vector<std::string> resolve_suites(std::string_view name);

SuiteResult run_suite(std::string_view name, const FrickeTriple& triple,
                      const VerifyHooks& hooks = {});

std::vector<SuiteResult> run_suites(std::span<const std::string> names, const FrickeTriple& triple,
                                    const VerifyHooks& hooks = {});

}  // namespace ptorus

#pragma once

// The reproduction battery: one check per published result, each comparing
// the engine against the stated closed form or table value.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace syncswitch {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string expected;
  std::string got;
};

struct VerifyOptions {
  bool long_run = false;  // adds the 6-state exhaustive search
  std::size_t jobs = 1;
  // Called as each check finishes.
  std::function<void(const CheckResult&)> on_result;
};

std::vector<CheckResult> verify_paper(const VerifyOptions& options = {});

// "CHECK <id> PASS|FAIL expected=<e> got=<g>"
std::string format_check(const CheckResult& result);

}  // namespace syncswitch

#pragma once

#include <string>
#include <vector>

namespace vk {

enum class Suite { golden, properties, all };
Suite parse_suite(const std::string& s);  // throws UsageError

struct CriterionResult {
  int id = 0;
  std::string name, citation;
  bool pass = false;
  std::string detail;  // computed values, or the exception text
  double seconds = 0;
};

const std::vector<int>& suite_members(Suite s);
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite(Suite s);

}  // namespace vk

#pragma once

#include <stdexcept>
#include <string>

namespace vk {

// Failure classes. The CLI maps MathError to exit code 2 and SearchError to 3.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define VK_ERROR(Name, Base)                                   \
  struct Name : Base {                                         \
    explicit Name(const std::string& m) : Base(#Name ": " + m) {} \
  };

VK_ERROR(StabilizationFailure, SearchError)
VK_ERROR(SearchBudgetExceeded, SearchError)
VK_ERROR(InvariantCheckFailed, MathError)
VK_ERROR(ChainMismatch, MathError)
VK_ERROR(OrthogonalityFailure, MathError)
VK_ERROR(NoGradingExists, MathError)
VK_ERROR(SingularLevel, MathError)
VK_ERROR(NotMaximalRank, MathError)
VK_ERROR(InvalidTwist, MathError)
VK_ERROR(NonIntegralFusion, MathError)
VK_ERROR(NegativeEntry, MathError)
VK_ERROR(DivisionByZero, MathError)
VK_ERROR(Inconclusive, MathError)
VK_ERROR(GroupMismatch, MathError)
VK_ERROR(NotASubgroup, MathError)
VK_ERROR(InvalidEmbedding, MathError)
VK_ERROR(DiagonalNotContained, MathError)
VK_ERROR(NonAbelian, MathError)

#undef VK_ERROR

}  // namespace vk

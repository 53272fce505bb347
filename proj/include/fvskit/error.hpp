#pragma once

#include <stdexcept>
#include <string>

namespace fvs {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kBudgetExceeded = 3,
  kLimitExceeded = 4,
  kNotFeedbackVertexSet = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fvs

#ifndef WEYL_ERROR_HPP
#define WEYL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace weyl {

enum class ErrorCode {
  Malformed,
  InvalidLabel,
  DuplicateGenerator,
  UnknownGenerator,
  LimitExceeded,
  NotIrreducible,
  EmptySystem,
  NotSpherical,
  NotChordal,
  CliquePredicateFailed,
  InvalidThickness,
  WrongRank,
  Invalid,
  BadRadii,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace weyl

#endif

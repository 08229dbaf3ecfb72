#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eqsig {

// Error categories. The numeric value doubles as the CLI exit code.
enum class ErrorKind : int {
  parse = 2,
  validation = 3,
  admissibility = 4,
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  // Stable machine-readable code, e.g. "validate.symmetry".
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_parse(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::parse, "parse." + code, msg);
}

[[noreturn]] inline void fail_validate(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::validation, "validate." + code, msg);
}

[[noreturn]] inline void fail_admissible(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::admissibility, "admissible." + code, msg);
}

[[noreturn]] inline void fail_internal(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::internal, "internal." + code, msg);
}

}  // namespace eqsig

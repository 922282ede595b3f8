#pragma once

#include <stdexcept>
#include <string>

namespace extsq {

enum class ErrorKind {
  ring_mismatch,
  non_unit,
  bad_index,
  dimension_mismatch,
  rank_too_small,
  precondition,
  not_wedge_column,
  undecidable,
  height,
  membership,
  proof_step,
  not_inverse,
  parse,
};

const char* to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception; `kind()` lets
// callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace extsq

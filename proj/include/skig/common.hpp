#pragma once

#include <stdexcept>
#include <string>

namespace skig {

// Stable error codes used across modules. Callers that need to branch on a
// failure mode should match on code(), not on message text.
enum class Errc {
  invalid_argument,
  invalid_label,
  auth,
  rate_limited,
  context_overflow,
  transport,
  malformed_row,
  missing_field,
  odd_row_count,
  empty_input,
  missing_grades,
  mismatched_item_sets,
  nash_domain,
  dimension_mismatch,
  unknown_run,
  corrupt_manifest,
  io,
  judge_parse,
  script_abort,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace skig

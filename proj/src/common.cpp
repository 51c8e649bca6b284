#include "skig/common.hpp"

namespace skig {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::invalid_label: return "invalid_label";
    case Errc::auth: return "auth";
    case Errc::rate_limited: return "rate_limited";
    case Errc::context_overflow: return "context_overflow";
    case Errc::transport: return "transport";
    case Errc::malformed_row: return "malformed_row";
    case Errc::missing_field: return "missing_field";
    case Errc::odd_row_count: return "odd_row_count";
    case Errc::empty_input: return "empty_input";
    case Errc::missing_grades: return "missing_grades";
    case Errc::mismatched_item_sets: return "mismatched_item_sets";
    case Errc::nash_domain: return "nash_domain";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::unknown_run: return "unknown_run";
    case Errc::corrupt_manifest: return "corrupt_manifest";
    case Errc::io: return "io";
    case Errc::judge_parse: return "judge_parse";
    case Errc::script_abort: return "script_abort";
  }
  return "unknown";
}

}  // namespace skig

#include "specsim/errors.hpp"

namespace specsim {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::non_positive_share: return "non_positive_share";
    case Errc::non_positive_priority: return "non_positive_priority";
    case Errc::empty_shares: return "empty_shares";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::entity_count_mismatch: return "entity_count_mismatch";
    case Errc::negative_pool: return "negative_pool";
    case Errc::unknown_axis: return "unknown_axis";
    case Errc::unknown_preset: return "unknown_preset";
    case Errc::empty_table: return "empty_table";
    case Errc::parse_error: return "parse_error";
    case Errc::validation_error: return "validation_error";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

bool Error::is_usage() const noexcept {
  switch (code_) {
    case Errc::io_error:
    case Errc::empty_table:
      return false;
    default:
      return true;
  }
}

void fail(Errc code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace specsim

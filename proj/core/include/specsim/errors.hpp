#pragma once

#include <stdexcept>
#include <string>

namespace specsim {

enum class Errc {
  non_positive_share,
  non_positive_priority,
  empty_shares,
  length_mismatch,
  entity_count_mismatch,
  negative_pool,
  unknown_axis,
  unknown_preset,
  empty_table,
  parse_error,
  validation_error,
  io_error,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the whole library; the code tells callers
/// whether the problem is bad input (config/usage) or a runtime failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// True for errors a caller caused with bad configuration or arguments.
  bool is_usage() const noexcept;

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace specsim

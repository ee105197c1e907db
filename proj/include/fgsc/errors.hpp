#ifndef FGSC_ERRORS_HPP
#define FGSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fgsc {

// Exact division by a root series failed on some homogeneous component.
// Signals either a genuinely non-divisible input or a caller bug; callers
// must never swallow this silently.
struct not_divisible : std::runtime_error {
  explicit not_divisible(const std::string &what) : std::runtime_error(what) {}
};

// Rank / cutoff / root-system mismatch between operands.
struct ring_mismatch : std::logic_error {
  explicit ring_mismatch(const std::string &what) : std::logic_error(what) {}
};

// Bad user-facing configuration (unsupported type, malformed file, ...).
struct config_error : std::runtime_error {
  explicit config_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace fgsc

#endif

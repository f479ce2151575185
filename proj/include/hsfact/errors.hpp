#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsfact {

/// A computation was refused because it would exceed a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on the number of unknowns in any single exact elimination.
inline constexpr std::size_t kDefaultEliminationCap = 20000;

}  // namespace hsfact

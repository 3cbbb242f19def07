#pragma once

/**
 * @file caps.hpp
 * @brief Size limits shared by the algebraic and enumerative routes.
 */

#include <stdexcept>

namespace parkqt {

/// Largest symmetric-function degree handled unless overridden.
constexpr int kDefaultDegreeCap = 8;
/// Largest parking-function size J + n enumerated unless overridden.
constexpr int kDefaultEnumCap = 13;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parkqt

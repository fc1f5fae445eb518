#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kgonal {

using integer = std::int64_t;

/// Thrown when an operation is called outside its documented domain.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
  if (!condition) throw precondition_error(what);
}

constexpr integer floor_div(integer n, integer d) {
  integer q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

constexpr integer ceil_div(integer n, integer d) { return -floor_div(-n, d); }

constexpr integer mod(integer n, integer m) {
  integer r = n % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail
}  // namespace kgonal

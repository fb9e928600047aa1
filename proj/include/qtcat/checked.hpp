#ifndef QTCAT_CHECKED_HPP
#define QTCAT_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace qtcat {

// All coefficient/statistic arithmetic in this library is exact.  Overflow
// is a hard error, never wraparound.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("qtcat: 64-bit counter overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("qtcat: 64-bit counter overflow in multiplication");
  return r;
}

// n*(n-1)/2, the number of cells of the order-n staircase.
inline std::uint64_t binom2(std::uint64_t n) {
  return n < 2 ? 0 : checked_mul(n, n - 1) / 2;
}

}  // namespace qtcat

#endif

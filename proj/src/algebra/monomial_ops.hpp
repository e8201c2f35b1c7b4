#pragma once

// Packed monomials: a run of n+1 exponents, slot 0 holding the total degree
// and slot i+1 the exponent of variable i. Shared by Polynomial and the
// Groebner engine so conversions between the two are plain copies.

#include <cstddef>
#include <cstdint>

#include "smooth/polynomial.hpp"

namespace smooth::detail {

/// Degree reverse lexicographic comparison: -1, 0 or 1.
inline int compare_packed(const Exponent* a, const Exponent* b, std::size_t n) {
  if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
  for (std::size_t i = n; i >= 1; --i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

inline bool equal_packed(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i <= n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// a | b
inline bool divides_packed(const Exponent* a, const Exponent* b, std::size_t n) {
  if (a[0] > b[0]) return false;
  for (std::size_t i = 1; i <= n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline void multiply_packed(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] + b[i];
}

/// out = b / a, requires a | b.
inline void divide_packed(const Exponent* b, const Exponent* a, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i <= n; ++i) out[i] = b[i] - a[i];
}

inline void lcm_packed(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  Exponent d = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    out[i] = a[i] > b[i] ? a[i] : b[i];
    d += out[i];
  }
  out[0] = d;
}

inline bool coprime_packed(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

/// Bit i set when variable i (mod 64) occurs; a necessary condition for divisibility.
inline std::uint64_t support_mask(const Exponent* a, std::size_t n) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i + 1]) m |= std::uint64_t{1} << (i % 64);
  return m;
}

}  // namespace smooth::detail

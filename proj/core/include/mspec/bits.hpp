#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mspec {

// Subsets of a carrier are bitmasks; element i <-> bit i. Carriers are
// capped well below 32 elements, so uint32_t is enough everywhere.
using Mask = std::uint32_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool has_bit(Mask m, int i) { return (m >> i) & 1u; }

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

template <typename F>
void for_each_bit(Mask m, F f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace mspec

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace tracekit {

inline constexpr int kMaxUniverse = 30;
inline constexpr int kMaxMaterialized = 25;

// Element e of [n] (1-based, as printed) lives at bit e-1. The integer value
// of the bit pattern is the colex rank of the set.
struct SubsetMask {
  std::uint32_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t b) : bits(b) {}

  static constexpr SubsetMask singleton(int v) { return SubsetMask(1u << v); }
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int v) const { return (bits >> v) & 1u; }
  constexpr bool subset_of(SubsetMask o) const { return (bits & ~o.bits) == 0; }
  constexpr int max_element() const { return 31 - std::countl_zero(bits); }

  constexpr SubsetMask with(int v) const { return SubsetMask(bits | (1u << v)); }
  constexpr SubsetMask without(int v) const { return SubsetMask(bits & ~(1u << v)); }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits | o.bits); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits & o.bits); }
  constexpr SubsetMask operator^(SubsetMask o) const { return SubsetMask(bits ^ o.bits); }
  constexpr SubsetMask minus(SubsetMask o) const { return SubsetMask(bits & ~o.bits); }

  constexpr auto operator<=>(const SubsetMask&) const = default;

  // 0-based element indices in increasing order.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
};

// A ≺ B iff max(A △ B) ∈ B; identical to comparing the bit patterns.
constexpr bool colex_less(SubsetMask a, SubsetMask b) { return a.bits < b.bits; }

// Calls fn(sub) for every subset of `mask`, including ∅ and mask itself.
template <class Fn>
void for_each_subset(SubsetMask mask, Fn&& fn) {
  std::uint32_t sub = mask.bits;
  while (true) {
    fn(SubsetMask(sub));
    if (sub == 0) break;
    sub = (sub - 1) & mask.bits;
  }
}

}  // namespace tracekit

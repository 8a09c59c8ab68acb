#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace liftlat {

/// Dense element handle. Names exist only for I/O.
using Element = std::size_t;

/// Subsets of a carrier are fixed-width bitmasks over element indices.
using Subset = std::uint64_t;

/// Largest carrier a lattice or monoid may have.
inline constexpr std::size_t kMaxCarrier = 64;

constexpr Subset bit(Element e) { return Subset{1} << e; }

constexpr bool contains(Subset s, Element e) { return (s >> e) & 1U; }

constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

constexpr Subset full_set(std::size_t n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline std::size_t cardinality(Subset s) {
  return static_cast<std::size_t>(std::popcount(s));
}

template <typename F>
void for_each_element(Subset s, F&& f) {
  while (s != 0) {
    const auto e = static_cast<Element>(std::countr_zero(s));
    f(e);
    s &= s - 1;
  }
}

inline std::vector<Element> elements_of(Subset s) {
  std::vector<Element> out;
  out.reserve(cardinality(s));
  for_each_element(s, [&](Element e) { out.push_back(e); });
  return out;
}

inline Subset subset_of(const std::vector<Element>& elems) {
  Subset s = 0;
  for (Element e : elems) s |= bit(e);
  return s;
}

}  // namespace liftlat

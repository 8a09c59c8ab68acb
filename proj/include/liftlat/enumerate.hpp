#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "liftlat/lattice.hpp"

namespace liftlat {

/// Largest carrier enumerate_small_lattices accepts.
inline constexpr std::size_t kMaxEnumerated = 6;

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Visits multiplicative lattices on `n` elements, one per isomorphism
/// class, in a fixed deterministic order, stopping after `limit` lattices
/// or when `visit` returns false. Returns the number visited.
///
/// Orders are generated first (bounded posets that are lattices, deduped
/// up to isomorphism), then for each order every commutative, associative,
/// join-distributive multiplication with top as identity, keeping only the
/// lexicographically least table in each orbit of the order's
/// automorphism group. Every yielded lattice has passed verify_lattice.
/// Element 0 is bot and element n-1 is top.
///
/// Throws PreconditionError if n == 0 or n > kMaxEnumerated.
std::size_t for_each_small_lattice(std::size_t n, std::size_t limit,
                                   const std::function<bool(const FiniteLattice&)>& visit);

std::vector<FiniteLattice> enumerate_small_lattices(std::size_t n,
                                                    std::size_t limit = kUnlimited);

/// All lattices with 1 <= size <= max_n, smallest sizes first.
std::vector<FiniteLattice> small_lattice_corpus(std::size_t max_n,
                                                std::size_t limit_per_size = kUnlimited);

/// Every distinct copy of `lattice` obtained by renumbering its carrier
/// (names travel with their elements), the original first. Bot and top
/// land on arbitrary indices. Throws PreconditionError above
/// kMaxEnumerated elements.
std::vector<FiniteLattice> relabelings(const FiniteLattice& lattice);

}  // namespace liftlat

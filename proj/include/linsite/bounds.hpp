#pragma once

#include <cstdint>

namespace linsite {

/// Enumeration limits shared by every exhaustive search in the library.
/// Exceeding a bound raises BoundExceeded; nothing is ever truncated
/// silently.
struct Bounds {
  /// Cap on p^dim when listing all vectors of a hom module or all
  /// subspaces of an ambient space.
  std::uint64_t max_vectors = 65536;
  /// Cap on the number of candidate sieves per object when a sieve
  /// lattice has to be materialized.
  std::uint64_t max_sieves = 100000;
  /// Cap on the raw candidate count of a functor or transformation
  /// enumeration.
  std::uint64_t max_functors = 100000;
  /// Closure depth for the site-presentation subdiagram generator.
  int closure_depth = 4;
};

}  // namespace linsite

#pragma once

#include "wallkit/lattice.hpp"

namespace wallkit {

// All x with (x, x) = norm in a definite lattice, in lexicographic coordinate
// order, truncated to `limit` entries after sorting. The list is closed under
// negation (before truncation). norm must be nonzero with the sign of the
// form. Pruned exact enumeration; parallelized over the top-level branch.
std::vector<LatticeVector> short_vectors(const LatticePtr& lattice, const Int& target_norm,
                                         size_t limit = SIZE_MAX);

}  // namespace wallkit

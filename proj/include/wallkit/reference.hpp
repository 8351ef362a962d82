#pragma once

#include "wallkit/enumerate.hpp"
#include "wallkit/wall.hpp"

namespace wallkit {

// Naive box scan over |x_i| <= sqrt(m (G^-1)_ii), serial, no pruning.
// Same contract and ordering as short_vectors; kept as the correctness
// baseline for the pruned, parallel enumerator.
std::vector<LatticeVector> short_vectors_reference(const LatticePtr& lattice,
                                                   const Int& target_norm,
                                                   size_t limit = SIZE_MAX);

// Fiber-by-fiber solver: for each admissible pairing value p it solves the
// linear condition (w,v) = p exactly and walks the resulting line, reading
// the square off a univariate quadratic. Same contract and ordering as
// rank2_solve; independent of its box-bound derivation.
std::vector<IntVec> rank2_solve_reference(const IntMat& gram, const IntVec& v,
                                          const Rank2Query& query);

}  // namespace wallkit

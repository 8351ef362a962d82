#pragma once

#include "wallkit/discriminant.hpp"
#include "wallkit/lattice.hpp"

namespace wallkit {

struct Isometry {
  LatticePtr lattice;
  IntMat matrix;

  LatticeVector apply(const LatticeVector& x) const;
};

// Validates M^T G M = G.
Isometry make_isometry(const LatticePtr& lattice, const IntMat& matrix);
bool is_isometry(const LatticePtr& lattice, const IntMat& matrix);

Isometry compose(const Isometry& a, const Isometry& b);  // a after b
Isometry inverse_of(const Isometry& g);
Int determinant(const Isometry& g);

// x -> x - 2 (x,u)/(u,u) u. The mirror must be non-isotropic and the map
// integral on the lattice.
Isometry reflection(const LatticeVector& u);

// x -> x - (a,x) e + (e,x) a - (a,a)/2 (e,x) e for isotropic e with
// (e,a) = 0 in an even lattice. Determinant +1, trivial action on the
// discriminant group, orientation-preserving.
Isometry eichler_transvection(const LatticeVector& e, const LatticeVector& a);

// Sign of the induced map on a maximal positive-definite subspace: +1 when g
// preserves its orientation. For a fixed positive basis B this is the sign of
// det(B^T G g B).
int orientation_sign(const Isometry& g);
bool is_orientation_preserving(const Isometry& g);

// Constructive reduction of a primitive vector with divisibility 1 in a
// lattice whose first four basis vectors split off as U + U: a composition of
// transvections moving x to e1 + (x^2/2) f1.
struct EichlerReduction {
  Isometry g;               // g(x) = canonical
  LatticeVector canonical;  // e1 + (x^2/2) f1
  int steps = 0;            // transvections composed
};

EichlerReduction eichler_reduce(const LatticeVector& x);

// Same square, same divisibility, same image in the discriminant group.
bool orbit_equivalent(const LatticeVector& x, const LatticeVector& y);

// For equivalent x, y of divisibility 1: a transvection composition sending
// x to y, built by passing through the shared canonical representative.
Isometry mapping_isometry(const LatticeVector& x, const LatticeVector& y);

}  // namespace wallkit

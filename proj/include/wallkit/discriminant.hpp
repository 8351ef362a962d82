#pragma once

#include "wallkit/lattice.hpp"

namespace wallkit {

// L-dual / L as a finite abelian group with its torsion forms. `factors` are
// the invariant factors > 1 in ascending divisibility order; `lifts` are
// representatives in L (x) QQ of a generator for each factor.
struct DiscriminantGroup {
  LatticePtr lattice;
  IntVec factors;
  std::vector<RatVec> lifts;
  RatVec q_values;  // generator squares mod 2ZZ, in [0, 2)
  RatMat pairing;   // generator pairings mod ZZ, in [0, 1)
  Int order;        // product of factors

  // y -> u_transform * G * y computes coordinates in (+) ZZ/d_i.
  IntMat u_transform;
  IntVec diag;  // full SNF diagonal, including trivial factors

  int generator_count() const { return static_cast<int>(factors.size()); }
};

DiscriminantGroup discriminant_group(const LatticePtr& lattice);

// Coordinates (residues mod the invariant factors) of a dual vector y; y must
// pair integrally with the lattice.
IntVec dual_coords(const DiscriminantGroup& g, const RationalVector& y);

// Coordinates of dual_class(x) for primitive x.
IntVec disc_image(const DiscriminantGroup& g, const LatticeVector& x);

// Induced action of an isometry on the discriminant group: column j holds the
// coordinates of the image of generator j. Construction re-checks that the
// torsion forms are preserved.
struct DiscAction {
  IntVec factors;
  IntMat matrix;
};

DiscAction disc_action(const DiscriminantGroup& g, const IntMat& isometry);

enum class Pm1 { Plus, Minus, Other };

const char* pm1_name(Pm1 c);

// Plus / Minus when the action is the scalar +1 / -1 on every generator
// (checked in that order), Other otherwise.
Pm1 classify_pm1(const DiscAction& a);

// (Z/(2n+2))^* elements u with u^2 = 1 mod 2(2n+2); brute-force count.
long count_sqrt_units(long n);

// Distinct prime factors of n+1, minus one.
long w_exponent(long n);

}  // namespace wallkit

#pragma once

#include "wallkit/lattice.hpp"

namespace wallkit {

enum class WallClause { None, BM1, BM2, YOSH, MZ0, MZ1 };

const char* wall_clause_name(WallClause c);

struct WallVerdict {
  bool is_wall = false;
  WallClause clause = WallClause::None;
  Sublattice closure;                    // saturated rank-2 lattice spanned by {v, D}
  std::optional<IntVec> witness_coords;  // in the closure basis
  std::optional<LatticeVector> witness;  // same vector, ambient coordinates
};

// Mukai coordinates from Chern data; c1 are the middle-block coordinates.
// Third component: c1^2/2 - c2 + r on K3-type input, c1^2/2 - c2 on
// abelian-type input.
LatticeVector mukai_from_chern(const std::string& kind, const Int& r, const IntVec& c1,
                               const Int& c2);

// Saturation of span{v, d}, basis canonicalized with v first (coordinates
// (1,0)) and a second vector u with 0 <= (v,u) <= v^2/2. Requires v
// primitive, v^2 > 0, inputs independent.
Sublattice rank2_closure(const LatticeVector& v, const LatticeVector& d);

// Finite constraint queries inside a rank-2 hyperbolic lattice.
struct Rank2Query {
  enum Kind { ExactSquare, RangeSquare } kind;
  Int square;  // ExactSquare: required w^2
  Int lo, hi;  // pairing window: ExactSquare lo <= (w,v) <= hi;
               // RangeSquare: 0 <= w^2 < (w,v) <= hi
};

// All integer solutions w (coordinates in the gram's basis), ordered by
// ((w,v), coords). gram must be hyperbolic (det < 0) and v^2 > 0.
std::vector<IntVec> rank2_solve(const IntMat& gram, const IntVec& v, const Rank2Query& query);

// Wall tests. v primitive with v^2 > 0, d with d^2 < 0 and (v,d) = 0.
// First clause that fires wins; witness is the first solution in canonical
// order.
WallVerdict bm_wall(const LatticeVector& v, const LatticeVector& d);
WallVerdict yoshioka_wall(const LatticeVector& v, const LatticeVector& d);

// w^2 = 2 required; both MZ clauses ask for s^2 = -2 with (s,w) in {0,1}.
WallVerdict mz_wall(const LatticeVector& w, const LatticeVector& d);

// Primitive generator of span{w,s} (saturated) intersected with w-perp,
// sign-normalized to positive first nonzero coordinate. s^2 = -2 and
// (s,w) in {0,1} required.
LatticeVector mz_wall_from_s(const LatticeVector& w, const LatticeVector& s);

enum class ContractionType { None, TypeI, TypeII };

struct ContractionResult {
  ContractionType type = ContractionType::None;
  std::optional<LatticeVector> w;  // isotropic class realizing the contraction
};

// For d orthogonal to v = (1; 0; -n-1) in the abelian Mukai lattice with
// d^2 < 0: looks for a primitive isotropic w in the rank-2 closure with
// (v,w) = 1 and d parallel to v - (2n+2) w (type I), else (v,w) = 2 and d
// parallel to v - (n+1) w (type II).
ContractionResult kummer_contraction_type(long n, const LatticeVector& d);

// True when h1, h2 lie on opposite sides of some wall in the list. Both
// points must have positive square and pair nonzero with every wall (OnWall
// otherwise).
bool chamber_separates(const std::vector<LatticeVector>& walls, const RationalVector& h1,
                       const RationalVector& h2);

}  // namespace wallkit

#pragma once

#include <memory>
#include <string>

#include "wallkit/matrix.hpp"

namespace wallkit {

class IntegralLattice;
using LatticePtr = std::shared_ptr<const IntegralLattice>;

// Nondegenerate symmetric bilinear form on Z^n, given by its Gram matrix.
// Immutable; invariants (determinant, signature, parity) are computed once.
class IntegralLattice {
 public:
  static LatticePtr create(IntMat gram, std::string label);

  int rank() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  const Int& determinant() const { return det_; }
  bool is_even() const { return even_; }
  std::pair<int, int> signature() const { return sig_; }
  bool is_definite() const { return sig_.first == 0 || sig_.second == 0; }

 private:
  IntegralLattice(IntMat gram, std::string label);
  IntMat gram_;
  std::string label_;
  Int det_;
  bool even_;
  std::pair<int, int> sig_;
};

// Value object: integer coordinates in the basis of a specific lattice.
struct LatticeVector {
  LatticePtr lattice;
  IntVec coords;
};

struct RationalVector {
  LatticePtr lattice;
  RatVec coords;
};

// Sublattice of an ambient lattice, spanned by the columns of `basis`
// (ambient coordinates). `gram` is the induced form on that basis.
struct Sublattice {
  LatticePtr ambient;
  IntMat basis;  // ambient_rank x sub_rank
  IntMat gram;   // sub_rank x sub_rank

  int rank() const { return basis.cols(); }
  LatticeVector to_ambient(const IntVec& sub_coords) const;
};

LatticePtr make_lattice(const IntMat& gram, const std::string& label);

// Built-in constructors: "U", "E8", "E8(-1)", "A2", "A2(-1)", "rank1(m)",
// "kummer(n)", "mukai_k3", "mukai_abelian". The E8 Gram is loaded from the
// fixture directory and validated.
LatticePtr standard_lattice(const std::string& name);

LatticePtr direct_sum(const std::vector<LatticePtr>& parts, const std::string& label);

bool same_lattice(const LatticePtr& a, const LatticePtr& b);

Int inner(const LatticeVector& x, const LatticeVector& y);
Int norm(const LatticeVector& x);
Rat inner(const RationalVector& x, const RationalVector& y);
Rat norm(const RationalVector& x);

bool is_zero(const LatticeVector& x);
bool is_primitive(const LatticeVector& x);

// gcd of the pairings (x, e_i) over the basis; the positive generator of the
// ideal (x, L). Errors on x = 0.
Int divisibility(const LatticeVector& x);

// x / divisibility(x): an element of the dual lattice.
RationalVector dual_class(const LatticeVector& x);

// Divisibility of an ambient vector computed against a sublattice's pairings.
Int divisibility_in(const Sublattice& s, const LatticeVector& x);

// Primitive closure (QQ-span intersected with the lattice) of independent
// vectors; basis canonicalized by column Hermite form.
Sublattice saturation(const std::vector<LatticeVector>& vectors);

// {y : (y, v) = 0 for all given v}; always saturated.
Sublattice orthogonal_complement(const LatticePtr& lattice,
                                 const std::vector<LatticeVector>& vectors);

std::pair<int, int> signature(const LatticePtr& lattice);

// Express x in the basis of s; nullopt when x is not in the QQ-span,
// non-integer entries when x is in the span but not the sublattice.
std::optional<RatVec> coords_in(const Sublattice& s, const LatticeVector& x);

// Throws NoSplitDeclared unless the first four basis vectors form U + U
// split off orthogonally from the rest.
void require_uu_split(const IntegralLattice& lattice);

// Fixture directory: WALLKIT_FIXTURES env var, else the compiled-in default.
std::string fixture_dir();

}  // namespace wallkit

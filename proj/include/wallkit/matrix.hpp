#pragma once

#include <initializer_list>
#include <optional>

#include "wallkit/numeric.hpp"

namespace wallkit {

// Dense integer matrix, row-major. Sizes here stay tiny (rank <= 24), so the
// interface favors clarity over allocation tuning.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMat(std::initializer_list<std::initializer_list<int>> rows);

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntMat transposed() const;
  bool is_symmetric() const;
  bool is_zero() const;

  IntVec column(int j) const;
  IntVec row(int i) const;
  void set_column(int j, const IntVec& v);

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

  IntVec apply(const IntVec& x) const;   // this * x
  RatVec apply(const RatVec& x) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  explicit RatMat(const IntMat& m);

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RatMat transposed() const;

  friend RatMat operator*(const RatMat& a, const RatMat& b);
  RatVec apply(const RatVec& x) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Exact determinant, fraction-free elimination.
Int det(const IntMat& m);

Rat det(const RatMat& m);

// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr, di >= 0.
struct SmithResult {
  IntMat u, d, v;
};
SmithResult smith_normal_form(const IntMat& a);

// Diagonal entries of the SNF that are > 1 (ascending divisibility chain).
IntVec invariant_factors(const IntMat& a);

// Basis of {x : A x = 0} as matrix columns, canonicalized by column HNF.
IntMat integer_kernel(const IntMat& a);

// Unique column-style Hermite form of the column lattice of B: pivots
// positive, pivot rows strictly increasing, entries left of a pivot reduced
// into [0, pivot). Columns of the result are a canonical basis.
IntMat hnf_column_basis(const IntMat& b);

// Inverse of a rational matrix; nullopt when singular.
std::optional<RatMat> inverse(const RatMat& m);

// Inverse of an integer matrix with det = +-1; throws Internal otherwise.
IntMat unimodular_inverse(const IntMat& m);

// Rational solution c of B c = x (B full column rank); nullopt when x is
// outside the column span.
std::optional<RatVec> solve_in_span(const IntMat& b, const RatVec& x);

// (positives, negatives) of a symmetric rational matrix by congruence
// diagonalization; zero-diagonal blocks handled by symmetric completion.
// Throws Degenerate when the form has a radical.
std::pair<int, int> signature_of(const RatMat& g);

// Basis (as columns, rational entries) of a maximal positive-definite
// subspace of the symmetric form g, from the same diagonalization.
RatMat positive_subspace_basis(const RatMat& g);

}  // namespace wallkit

#include "wallkit/matrix.hpp"

namespace wallkit {

IntMat::IntMat(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.resize(static_cast<size_t>(rows_) * cols_);
  int i = 0;
  for (const auto& r : rows) {
    require(static_cast<int>(r.size()) == cols_, ErrorCode::BadParam, "ragged matrix literal");
    int j = 0;
    for (int x : r) at(i, j++) = x;
    ++i;
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMat::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

IntVec IntMat::column(int j) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntVec IntMat::row(int i) const {
  IntVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void IntMat::set_column(int j, const IntVec& v) {
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  require(a.cols_ == b.rows_, ErrorCode::BadParam, "matrix product shape");
  IntMat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec IntMat::apply(const IntVec& x) const {
  require(static_cast<int>(x.size()) == cols_, ErrorCode::BadParam, "matrix apply shape");
  IntVec y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

RatVec IntMat::apply(const RatVec& x) const {
  require(static_cast<int>(x.size()) == cols_, ErrorCode::BadParam, "matrix apply shape");
  RatVec y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += Rat(at(i, j)) * x[j];
  return y;
}

RatMat::RatMat(const IntMat& m) : RatMat(m.rows(), m.cols()) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::transposed() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  require(a.cols_ == b.rows_, ErrorCode::BadParam, "matrix product shape");
  RatMat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

RatVec RatMat::apply(const RatVec& x) const {
  require(static_cast<int>(x.size()) == cols_, ErrorCode::BadParam, "matrix apply shape");
  RatVec y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

// Bareiss: intermediate entries are minors of the input, division is exact.
Int det(const IntMat& m) {
  require(m.rows() == m.cols(), ErrorCode::BadParam, "det of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

Rat det(const RatMat& m) {
  require(m.rows() == m.cols(), ErrorCode::BadParam, "det of non-square matrix");
  int n = m.rows();
  RatMat a = m;
  Rat d = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) swap(a.at(k, j), a.at(p, j));
      d = -d;
    }
    d *= a.at(k, k);
    Rat inv = Rat(1) / a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      Rat f = a.at(i, k) * inv;
      if (f == 0) continue;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return d;
}

namespace {

// Row/column operations tracked in the transforms; invariant U*A0*V = A.
struct SmithWork {
  IntMat a, u, v;

  void swap_rows(int i, int j) {
    for (int k = 0; k < a.cols(); ++k) swap(a.at(i, k), a.at(j, k));
    for (int k = 0; k < u.cols(); ++k) swap(u.at(i, k), u.at(j, k));
  }
  void swap_cols(int i, int j) {
    for (int k = 0; k < a.rows(); ++k) swap(a.at(k, i), a.at(k, j));
    for (int k = 0; k < v.rows(); ++k) swap(v.at(k, i), v.at(k, j));
  }
  void add_row(int dst, int src, const Int& c) {  // row dst += c * row src
    for (int k = 0; k < a.cols(); ++k) a.at(dst, k) += c * a.at(src, k);
    for (int k = 0; k < u.cols(); ++k) u.at(dst, k) += c * u.at(src, k);
  }
  void add_col(int dst, int src, const Int& c) {
    for (int k = 0; k < a.rows(); ++k) a.at(k, dst) += c * a.at(k, src);
    for (int k = 0; k < v.rows(); ++k) v.at(k, dst) += c * v.at(k, src);
  }
  void negate_row(int i) {
    for (int k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
    for (int k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }
  // (row r1, row r2) <- (x r1 + y r2, z r1 + w r2); the 2x2 block must be
  // unimodular.
  void combine_rows(int r1, int r2, const Int& x, const Int& y, const Int& z, const Int& w) {
    for (int k = 0; k < a.cols(); ++k) {
      Int t1 = x * a.at(r1, k) + y * a.at(r2, k);
      Int t2 = z * a.at(r1, k) + w * a.at(r2, k);
      a.at(r1, k) = t1;
      a.at(r2, k) = t2;
    }
    for (int k = 0; k < u.cols(); ++k) {
      Int t1 = x * u.at(r1, k) + y * u.at(r2, k);
      Int t2 = z * u.at(r1, k) + w * u.at(r2, k);
      u.at(r1, k) = t1;
      u.at(r2, k) = t2;
    }
  }
  void combine_cols(int c1, int c2, const Int& x, const Int& y, const Int& z, const Int& w) {
    for (int k = 0; k < a.rows(); ++k) {
      Int t1 = x * a.at(k, c1) + y * a.at(k, c2);
      Int t2 = z * a.at(k, c1) + w * a.at(k, c2);
      a.at(k, c1) = t1;
      a.at(k, c2) = t2;
    }
    for (int k = 0; k < v.rows(); ++k) {
      Int t1 = x * v.at(k, c1) + y * v.at(k, c2);
      Int t2 = z * v.at(k, c1) + w * v.at(k, c2);
      v.at(k, c1) = t1;
      v.at(k, c2) = t2;
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& a0) {
  SmithWork w{a0, IntMat::identity(a0.rows()), IntMat::identity(a0.cols())};
  int m = a0.rows(), n = a0.cols();
  int r = std::min(m, n);

  for (int t = 0; t < r; ++t) {
    // Pivot: nonzero entry of minimal absolute value in the trailing block.
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& x = w.a.at(i, j);
        if (x == 0) continue;
        if (pi < 0 || abs(x) < best) {
          pi = i;
          pj = j;
          best = abs(x);
        }
      }
    if (pi < 0) break;  // trailing block is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear column t. A Bezout combine keeps entries small: the pivot
      // becomes gcd(pivot, entry) in one unimodular step instead of a
      // remainder-promotion walk.
      for (int i = t + 1; i < m; ++i) {
        const Int e = w.a.at(i, t);
        if (e == 0) continue;
        const Int p = w.a.at(t, t);
        if (e % p == 0) {
          w.add_row(i, t, -(e / p));
        } else {
          Int x, y;
          Int g = extgcd(p, e, x, y);
          w.combine_rows(t, i, x, y, -(e / g), p / g);
        }
      }
      // Clear row t; a combine here dirties column t below the pivot.
      for (int j = t + 1; j < n; ++j) {
        const Int e = w.a.at(t, j);
        if (e == 0) continue;
        const Int p = w.a.at(t, t);
        if (e % p == 0) {
          w.add_col(j, t, -(e / p));
        } else {
          Int x, y;
          Int g = extgcd(p, e, x, y);
          w.combine_cols(t, j, x, y, -(e / g), p / g);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility sweep: pivot must divide the trailing block.
      for (int i = t + 1; i < m && clean; ++i)
        for (int j = t + 1; j < n && clean; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.add_row(t, i, 1);
            clean = false;
          }
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }

  IntMat d(m, n);
  for (int t = 0; t < r; ++t) d.at(t, t) = w.a.at(t, t);
  return {w.u, d, w.v};
}

IntVec invariant_factors(const IntMat& a) {
  SmithResult s = smith_normal_form(a);
  IntVec out;
  int r = std::min(a.rows(), a.cols());
  for (int t = 0; t < r; ++t)
    if (s.d.at(t, t) > 1) out.push_back(s.d.at(t, t));
  return out;
}

IntMat hnf_column_basis(const IntMat& b) {
  int n = b.rows(), k = b.cols();
  IntMat h = b;
  // Column echelon over Z: process rows top-down, gcd-combine columns.
  int col = 0;
  std::vector<int> pivot_rows;
  for (int row = 0; row < n && col < k; ++row) {
    int p = -1;
    for (int j = col; j < k; ++j)
      if (h.at(row, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    for (int q = 0; q < n; ++q) swap(h.at(q, col), h.at(q, p));
    for (int j = col + 1; j < k; ++j) {
      // Euclid on (h[row][col], h[row][j]) by column operations.
      while (h.at(row, j) != 0) {
        Int q = round_div(h.at(row, col), h.at(row, j));
        for (int t = 0; t < n; ++t) h.at(t, col) -= q * h.at(t, j);
        for (int t = 0; t < n; ++t) swap(h.at(t, col), h.at(t, j));
      }
    }
    if (h.at(row, col) < 0)
      for (int t = 0; t < n; ++t) h.at(t, col) = -h.at(t, col);
    pivot_rows.push_back(row);
    ++col;
  }
  int rank = col;
  // Reduce entries left of each pivot into [0, pivot).
  for (int j = 1; j < rank; ++j) {
    int pr = pivot_rows[j];
    for (int l = 0; l < j; ++l) {
      Int q = floor_div(h.at(pr, l), h.at(pr, j));
      if (q == 0) continue;
      for (int t = 0; t < n; ++t) h.at(t, l) -= q * h.at(t, j);
    }
  }
  IntMat out(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

IntMat integer_kernel(const IntMat& a) {
  SmithResult s = smith_normal_form(a);
  int n = a.cols();
  int r = std::min(a.rows(), a.cols());
  int rank = 0;
  for (int t = 0; t < r; ++t)
    if (s.d.at(t, t) != 0) ++rank;
  IntMat basis(n, n - rank);
  for (int j = rank; j < n; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, j - rank) = s.v.at(i, j);
  return hnf_column_basis(basis);
}

std::optional<RatMat> inverse(const RatMat& m) {
  require(m.rows() == m.cols(), ErrorCode::BadParam, "inverse of non-square matrix");
  int n = m.rows();
  RatMat a = m, inv = RatMat::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    if (p != k)
      for (int j = 0; j < n; ++j) {
        swap(a.at(k, j), a.at(p, j));
        swap(inv.at(k, j), inv.at(p, j));
      }
    Rat piv = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) /= piv;
      inv.at(k, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

IntMat unimodular_inverse(const IntMat& m) {
  auto inv = inverse(RatMat(m));
  require(inv.has_value(), ErrorCode::Internal, "unimodular_inverse: singular");
  IntMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& q = inv->at(i, j);
      require(q.get_den() == 1, ErrorCode::Internal, "unimodular_inverse: non-integer entry");
      out.at(i, j) = q.get_num();
    }
  return out;
}

std::optional<RatVec> solve_in_span(const IntMat& b, const RatVec& x) {
  require(static_cast<int>(x.size()) == b.rows(), ErrorCode::BadParam, "solve_in_span shape");
  int n = b.rows(), k = b.cols();
  // Gaussian elimination on [B | x]; B has full column rank by assumption.
  RatMat aug(n, k + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = Rat(b.at(i, j));
    aug.at(i, k) = x[i];
  }
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int colj = 0; colj < k && row < n; ++colj) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (aug.at(i, colj) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j <= k; ++j) swap(aug.at(row, j), aug.at(p, j));
    Rat piv = aug.at(row, colj);
    for (int j = 0; j <= k; ++j) aug.at(row, j) /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == row || aug.at(i, colj) == 0) continue;
      Rat f = aug.at(i, colj);
      for (int j = 0; j <= k; ++j) aug.at(i, j) -= f * aug.at(row, j);
    }
    pivot_col_of_row.push_back(colj);
    ++row;
  }
  if (static_cast<int>(pivot_col_of_row.size()) != k) return std::nullopt;  // rank-deficient B
  for (int i = row; i < n; ++i)
    if (aug.at(i, k) != 0) return std::nullopt;  // inconsistent: x outside span
  RatVec c(k);
  for (int i = 0; i < k; ++i) c[pivot_col_of_row[i]] = aug.at(i, k);
  return c;
}

namespace {

struct DiagResult {
  std::vector<RatVec> basis;  // diagonalizing basis vectors (rows)
  RatVec values;              // diagonal values, same order
};

// Congruence diagonalization over Q. Symmetric completion b_i += b_j handles
// blocks with zero diagonal.
DiagResult congruence_diagonalize(const RatMat& g) {
  int n = g.rows();
  RatMat m = g;
  std::vector<RatVec> basis(n, RatVec(n));
  for (int i = 0; i < n; ++i) basis[i][i] = 1;
  std::vector<bool> done(n, false);
  DiagResult out;

  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && m.at(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // All active diagonal entries vanish; look for an off-diagonal pair.
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i)
        for (int j = i + 1; j < n && bi < 0; ++j)
          if (!done[i] && !done[j] && m.at(i, j) != 0) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;  // active block is identically zero
      // b_i += b_j makes m[i][i] = 2*m[i][j] != 0.
      for (int k = 0; k < n; ++k) basis[bi][k] += basis[bj][k];
      for (int k = 0; k < n; ++k) m.at(bi, k) += m.at(bj, k);
      for (int k = 0; k < n; ++k) m.at(k, bi) += m.at(k, bj);
      piv = bi;
    }
    done[piv] = true;
    out.basis.push_back(basis[piv]);
    out.values.push_back(m.at(piv, piv));
    Rat d = m.at(piv, piv);
    for (int i = 0; i < n; ++i) {
      if (done[i] || m.at(i, piv) == 0) continue;
      Rat f = m.at(i, piv) / d;
      for (int k = 0; k < n; ++k) basis[i][k] -= f * basis[piv][k];
      for (int k = 0; k < n; ++k) m.at(i, k) -= f * m.at(piv, k);
      for (int k = 0; k < n; ++k) m.at(k, i) -= f * m.at(k, piv);
    }
  }
  return out;
}

}  // namespace

std::pair<int, int> signature_of(const RatMat& g) {
  require(g.rows() == g.cols(), ErrorCode::NotSymmetric, "signature of non-square matrix");
  DiagResult d = congruence_diagonalize(g);
  require(static_cast<int>(d.values.size()) == g.rows(), ErrorCode::Degenerate,
          "signature of degenerate form");
  int p = 0, q = 0;
  for (const Rat& v : d.values) {
    if (v > 0) ++p;
    else ++q;
  }
  return {p, q};
}

RatMat positive_subspace_basis(const RatMat& g) {
  DiagResult d = congruence_diagonalize(g);
  int n = g.rows();
  int p = 0;
  for (const Rat& v : d.values)
    if (v > 0) ++p;
  RatMat b(n, p);
  int col = 0;
  for (size_t i = 0; i < d.values.size(); ++i) {
    if (d.values[i] <= 0) continue;
    for (int r = 0; r < n; ++r) b.at(r, col) = d.basis[i][r];
    ++col;
  }
  return b;
}

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DependentInput: return "DependentInput";
    case ErrorCode::NotDefinite: return "NotDefinite";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::IsotropicMirror: return "IsotropicMirror";
    case ErrorCode::BadPair: return "BadPair";
    case ErrorCode::DivisibilityNotOne: return "DivisibilityNotOne";
    case ErrorCode::NoSplitDeclared: return "NoSplitDeclared";
    case ErrorCode::NotEquivalent: return "NotEquivalent";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::UnboundedWindow: return "UnboundedWindow";
    case ErrorCode::BadWitness: return "BadWitness";
    case ErrorCode::OnWall: return "OnWall";
    case ErrorCode::FixtureInvalid: return "FixtureInvalid";
    case ErrorCode::NoSuchF: return "NoSuchF";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace wallkit

#include "wallkit/enumerate.hpp"

#include <algorithm>

namespace wallkit {

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// Q(x) = sum_k d[k] * (x_k + sum_{i>k} l[i][k] * x_i)^2 with d[k] > 0,
// from the unit-lower-triangular LDL^T factorization of a positive form.
struct LdlForm {
  int n;
  RatVec d;
  RatMat l;  // l.at(i, k) for i > k
};

LdlForm ldl_decompose(const IntMat& gram) {
  int n = gram.rows();
  LdlForm f{n, RatVec(n), RatMat(n, n)};
  RatMat a(gram);
  for (int k = 0; k < n; ++k) {
    f.d[k] = a.at(k, k);
    require(f.d[k] > 0, ErrorCode::NotDefinite, "form is not definite");
    for (int i = k + 1; i < n; ++i) f.l.at(i, k) = a.at(i, k) / f.d[k];
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j <= i; ++j) {
        a.at(i, j) -= f.l.at(i, k) * f.d[k] * f.l.at(j, k);
        a.at(j, i) = a.at(i, j);
      }
  }
  return f;
}

// Depth-first over coordinates n-1 .. 0. At level k the offset
// t_k = sum_{i>k} l[i][k] x_i is fixed, budget is what remains of the target.
struct Enumerator {
  const LdlForm& f;
  std::vector<IntVec>* out;

  void descend(int k, IntVec& x, RatVec& offsets, const Rat& budget) {
    const Rat& d = f.d[k];
    const Rat& t = offsets[k];
    Rat r = budget / d;  // (x_k + t)^2 <= r
    Int s_up = rat_sqrt_upper(r);
    Int lo = rat_ceil(Rat(-t) - Rat(s_up));
    Int hi = rat_floor(Rat(-t) + Rat(s_up));
    for (Int xv = lo; xv <= hi; ++xv) {
      Rat c = Rat(xv) + t;
      Rat used = d * c * c;
      if (used > budget) continue;
      x[k] = xv;
      if (k == 0) {
        if (used == budget) out->push_back(x);
        continue;
      }
      // Push this coordinate's contribution into lower offsets.
      for (int i = 0; i < k; ++i) offsets[i] += f.l.at(k, i) * Rat(xv);
      descend(k - 1, x, offsets, budget - used);
      for (int i = 0; i < k; ++i) offsets[i] -= f.l.at(k, i) * Rat(xv);
    }
    x[k] = 0;
  }
};

}  // namespace

std::vector<LatticeVector> short_vectors(const LatticePtr& lattice, const Int& target_norm,
                                         size_t limit) {
  require(lattice->is_definite(), ErrorCode::NotDefinite, "short_vectors needs a definite lattice");
  bool positive = lattice->signature().second == 0;
  require(target_norm != 0, ErrorCode::BadParam, "target norm must be nonzero");
  require(positive ? target_norm > 0 : target_norm < 0, ErrorCode::BadParam,
          "target norm must carry the sign of the form");

  IntMat g = lattice->gram();
  Int m = target_norm;
  if (!positive) {
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) g.at(i, j) = -g.at(i, j);
    m = -m;
  }
  LdlForm f = ldl_decompose(g);
  int n = f.n;

  std::vector<IntVec> found;
  if (n == 1) {
    // Single coordinate: d0 * x^2 = m.
    Rat r = Rat(m) / f.d[0];
    Int s = rat_sqrt_floor(r);
    if (Rat(s) * Rat(s) == r && s > 0) {
      found.push_back(IntVec{s});
      found.push_back(IntVec{-s});
    }
  } else {
    int top = n - 1;
    Rat r_top = Rat(m) / f.d[top];
    Int s_up = rat_sqrt_upper(r_top);
    long lo = s_up.fits_slong_p() ? -s_up.get_si() : 0;
    long hi = s_up.fits_slong_p() ? s_up.get_si() : 0;
    require(s_up.fits_slong_p(), ErrorCode::BadParam, "enumeration range too large");

    int width = static_cast<int>(hi - lo + 1);
    std::vector<std::vector<IntVec>> buckets(width);
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < width; ++idx) {
      Int xv = Int(lo + idx);
      Rat c(xv);
      Rat used = f.d[top] * c * c;
      if (used > m) continue;
      IntVec x(n);
      x[top] = xv;
      RatVec offsets(n);
      for (int i = 0; i < top; ++i) offsets[i] = f.l.at(top, i) * Rat(xv);
      Enumerator e{f, &buckets[idx]};
      e.descend(top - 1, x, offsets, Rat(m) - used);
    }
    for (auto& b : buckets)
      for (auto& v : b) found.push_back(std::move(v));
  }

  std::sort(found.begin(), found.end(), lex_less);
  if (found.size() > limit) found.resize(limit);
  std::vector<LatticeVector> out;
  out.reserve(found.size());
  for (auto& v : found) out.push_back(LatticeVector{lattice, std::move(v)});
  return out;
}

}  // namespace wallkit

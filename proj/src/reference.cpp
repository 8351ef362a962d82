#include "wallkit/reference.hpp"

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

}  // namespace

std::vector<LatticeVector> short_vectors_reference(const LatticePtr& lattice,
                                                   const Int& target_norm, size_t limit) {
  require(lattice->is_definite(), ErrorCode::NotDefinite,
          "short_vectors_reference needs a definite lattice");
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
  const int n = g.rows();

  // x_i^2 <= m (G^-1)_ii for any x with x^T G x = m and G positive definite.
  auto ginv = inverse(RatMat(g));
  require(ginv.has_value(), ErrorCode::Internal, "definite gram is invertible");
  std::vector<Int> bound(n);
  for (int i = 0; i < n; ++i) bound[i] = rat_sqrt_floor(Rat(m) * ginv->at(i, i));

  std::vector<IntVec> found;
  IntVec x(n, 0);
  // Odometer over the box, fully naive.
  for (int i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    Int q = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q += x[i] * g.at(i, j) * x[j];
    if (q == m) found.push_back(x);
    int i = 0;
    while (i < n && x[i] == bound[i]) {
      x[i] = -bound[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }

  std::sort(found.begin(), found.end(), lex_less);
  if (found.size() > limit) found.resize(limit);
  std::vector<LatticeVector> out;
  out.reserve(found.size());
  for (auto& v : found) out.push_back(LatticeVector{lattice, std::move(v)});
  return out;
}

namespace {

Int pair2(const IntMat& g, const IntVec& a, const IntVec& b) {
  Int acc = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) acc += a[i] * g.at(i, j) * b[j];
  return acc;
}

}  // namespace

std::vector<IntVec> rank2_solve_reference(const IntMat& gram, const IntVec& v,
                                          const Rank2Query& query) {
  require(gram.rows() == 2 && gram.cols() == 2 && gram.is_symmetric(), ErrorCode::BadParam,
          "rank2_solve_reference needs a symmetric 2x2 gram");
  require(det(gram) < 0, ErrorCode::NotHyperbolic,
          "rank2_solve_reference needs a hyperbolic form");
  Int n = pair2(gram, v, v);
  require(n > 0, ErrorCode::BadParam, "rank2_solve_reference needs v^2 > 0");

  Int lo, hi;
  bool exact = query.kind == Rank2Query::ExactSquare;
  if (exact) {
    lo = query.lo;
    hi = query.hi;
    require(lo <= hi, ErrorCode::UnboundedWindow, "empty or inverted pairing window");
  } else {
    lo = 1;
    hi = query.hi;
    if (hi < lo) return {};
  }

  // The pairing functional: (w, v) = gv[0] x + gv[1] y.
  IntVec gv{gram.at(0, 0) * v[0] + gram.at(0, 1) * v[1],
            gram.at(1, 0) * v[0] + gram.at(1, 1) * v[1]};
  Int s, t;
  Int g = extgcd(gv[0], gv[1], s, t);
  require(g != 0, ErrorCode::Internal, "pairing functional vanishes");
  // Direction of the fiber: kernel of the functional.
  IntVec dir{-gv[1] / g, gv[0] / g};
  Int a = pair2(gram, dir, dir);  // strictly negative on v-perp
  require(a < 0, ErrorCode::Internal, "fiber direction must have negative square");

  std::vector<IntVec> sols;
  for (Int p = lo; p <= hi; ++p) {
    if (p % g != 0) continue;
    Int scale = p / g;
    IntVec w0{s * scale, t * scale};
    // Square along the fiber w0 + k dir: a k^2 + b k + c.
    Int b = 2 * pair2(gram, w0, dir);
    Int c = pair2(gram, w0, w0);
    auto record = [&](const Int& k) {
      sols.push_back(IntVec{w0[0] + k * dir[0], w0[1] + k * dir[1]});
    };
    if (exact) {
      // a k^2 + b k + (c - square) = 0
      Int disc = b * b - 4 * a * (c - query.square);
      if (disc < 0) continue;
      Int r = isqrt(disc);
      if (r * r != disc) continue;
      if ((-b + r) % (2 * a) == 0) record((-b + r) / (2 * a));
      if (r != 0 && (-b - r) % (2 * a) == 0) record((-b - r) / (2 * a));
    } else {
      // 0 <= Q(k) <= p - 1 with Q concave: only integers between the roots
      // of Q(k) = 0 qualify. Bracket around the vertex, filter exactly.
      Int disc = b * b - 4 * a * c;
      if (disc < 0) continue;
      Int center = round_div(-b, 2 * a);
      Int halfw = (isqrt(disc) + 1) / (2 * (-a)) + 2;
      for (Int k = center - halfw; k <= center + halfw; ++k) {
        Int q = a * k * k + b * k + c;
        if (q < 0 || q >= p) continue;
        record(k);
      }
    }
  }

  std::sort(sols.begin(), sols.end(), [&](const IntVec& x, const IntVec& y) {
    Int px = pair2(gram, x, v), py = pair2(gram, y, v);
    int cpx = cmp(px, py);
    if (cpx != 0) return cpx < 0;
    cpx = cmp(x[0], y[0]);
    if (cpx != 0) return cpx < 0;
    return cmp(x[1], y[1]) < 0;
  });
  return sols;
}

}  // namespace wallkit

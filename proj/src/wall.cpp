#include "wallkit/wall.hpp"

#include <algorithm>

namespace wallkit {

const char* wall_clause_name(WallClause c) {
  switch (c) {
    case WallClause::None: return "none";
    case WallClause::BM1: return "BM1";
    case WallClause::BM2: return "BM2";
    case WallClause::YOSH: return "YOSH";
    case WallClause::MZ0: return "MZ0";
    case WallClause::MZ1: return "MZ1";
  }
  return "none";
}

LatticeVector mukai_from_chern(const std::string& kind, const Int& r, const IntVec& c1,
                               const Int& c2) {
  LatticePtr l;
  bool k3;
  if (kind == "k3") {
    l = standard_lattice("mukai_k3");
    k3 = true;
  } else if (kind == "abelian") {
    l = standard_lattice("mukai_abelian");
    k3 = false;
  } else {
    fail(ErrorCode::BadParam, "mukai_from_chern kind must be k3 or abelian");
  }
  int mid = l->rank() - 2;
  require(static_cast<int>(c1.size()) == mid, ErrorCode::BadParam,
          "c1 must have the middle-block length");
  // c1^2 through the middle block of the Mukai form.
  IntVec full(l->rank());
  for (int i = 0; i < mid; ++i) full[1 + i] = c1[i];
  LatticeVector c1vec{l, full};
  Int c1sq = norm(c1vec);
  Int s = c1sq / 2 - c2 + (k3 ? r : Int(0));
  full[0] = r;
  full[l->rank() - 1] = s;
  return LatticeVector{l, full};
}

Sublattice rank2_closure(const LatticeVector& v, const LatticeVector& d) {
  require(is_primitive(v), ErrorCode::NotPrimitive, "rank2_closure needs primitive v");
  Int n = norm(v);
  require(n > 0, ErrorCode::BadParam, "rank2_closure needs v^2 > 0");
  Sublattice sat = saturation({v, d});  // throws DependentInput when parallel

  // Canonical basis {v, u}: v has coordinates (1,0); u is the unique lift of
  // a generator of T/Zv with 0 <= (v,u) <= v^2/2, sign fixed toward positive
  // pairing, ties broken by positive first nonzero ambient coordinate.
  auto vc = coords_in(sat, v);
  require(vc.has_value(), ErrorCode::Internal, "v outside its own closure");
  Int a = (*vc)[0].get_num(), b = (*vc)[1].get_num();
  require((*vc)[0].get_den() == 1 && (*vc)[1].get_den() == 1, ErrorCode::Internal,
          "non-integral coordinates in closure");
  // Complete (a,b) to a unimodular matrix: u0 = complement column.
  Int x, y;
  Int g = extgcd(a, b, x, y);
  require(g == 1, ErrorCode::Internal, "v not primitive in closure");
  // Columns (a, b) and (-y, x) have determinant a*x + b*y = 1.
  IntVec vcol{a, b}, u0{-y, x};

  auto pair_with = [&](const IntVec& s, const IntVec& t) {
    Int acc = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) acc += s[i] * sat.gram.at(i, j) * t[j];
    return acc;
  };
  Int p0 = pair_with(vcol, u0);
  // Reduce p0 mod v^2 into (-v^2/2, v^2/2], then flip sign if negative.
  Int q = round_div(p0, n);
  IntVec u{u0[0] - q * vcol[0], u0[1] - q * vcol[1]};
  Int p = p0 - q * n;
  if (p < 0 || (p == 0)) {
    // For p < 0 flip to make the pairing nonnegative; for p = 0 normalize the
    // sign by the ambient first nonzero coordinate.
    IntVec amb(sat.basis.rows());
    for (int i = 0; i < sat.basis.rows(); ++i)
      amb[i] = sat.basis.at(i, 0) * u[0] + sat.basis.at(i, 1) * u[1];
    bool flip = false;
    if (p < 0) {
      flip = true;
    } else {
      for (const Int& c : amb) {
        if (c == 0) continue;
        flip = c < 0;
        break;
      }
    }
    if (flip) {
      u[0] = -u[0];
      u[1] = -u[1];
      p = -p;
    }
  }
  // 2p = v^2 sits on the window edge; both reduced representatives have
  // |pairing| = v^2/2 and the positive one was chosen above.

  IntMat basis(sat.basis.rows(), 2);
  for (int i = 0; i < sat.basis.rows(); ++i) {
    basis.at(i, 0) = sat.basis.at(i, 0) * vcol[0] + sat.basis.at(i, 1) * vcol[1];
    basis.at(i, 1) = sat.basis.at(i, 0) * u[0] + sat.basis.at(i, 1) * u[1];
  }
  IntMat gram(2, 2);
  gram.at(0, 0) = n;
  gram.at(0, 1) = gram.at(1, 0) = p;
  gram.at(1, 1) = pair_with(u, u);
  return Sublattice{v.lattice, basis, gram};
}

namespace {

Int pair2(const IntMat& g, const IntVec& a, const IntVec& b) {
  Int acc = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) acc += a[i] * g.at(i, j) * b[j];
  return acc;
}

}  // namespace

std::vector<IntVec> rank2_solve(const IntMat& gram, const IntVec& v, const Rank2Query& query) {
  require(gram.rows() == 2 && gram.cols() == 2 && gram.is_symmetric(), ErrorCode::BadParam,
          "rank2_solve needs a symmetric 2x2 gram");
  require(det(gram) < 0, ErrorCode::NotHyperbolic, "rank2_solve needs a hyperbolic form");
  Int n = pair2(gram, v, v);
  require(n > 0, ErrorCode::BadParam, "rank2_solve needs v^2 > 0");

  Int lo, hi, min_square;
  if (query.kind == Rank2Query::ExactSquare) {
    lo = query.lo;
    hi = query.hi;
    require(lo <= hi, ErrorCode::UnboundedWindow, "empty or inverted pairing window");
    min_square = query.square;
  } else {
    lo = 1;  // 0 <= w^2 < (w,v) forces a positive pairing
    hi = query.hi;
    min_square = 0;
    if (hi < lo) return {};
  }

  // Orthogonal decomposition w = alpha v + beta u0 over QQ with u0 spanning
  // the negative-definite line v-perp; alpha = (w,v)/v^2 is confined to the
  // pairing window and beta^2 |u0^2| = alpha^2 v^2 - w^2 is bounded below by
  // the square constraint.
  IntVec gv{gram.at(0, 0) * v[0] + gram.at(0, 1) * v[1],
            gram.at(1, 0) * v[0] + gram.at(1, 1) * v[1]};
  IntMat pairing_row(1, 2);
  pairing_row.at(0, 0) = gv[0];
  pairing_row.at(0, 1) = gv[1];
  IntMat ker = integer_kernel(pairing_row);
  require(ker.cols() == 1, ErrorCode::Internal, "v-perp in rank 2 must be a line");
  IntVec u0{ker.at(0, 0), ker.at(1, 0)};
  Int m = pair2(gram, u0, u0);
  require(m < 0, ErrorCode::Internal, "v-perp must be negative definite");

  Int pmax_abs = std::max(abs(lo), abs(hi));
  Rat alpha_max = Rat(pmax_abs) / Rat(n);
  Rat beta_sq_max = (alpha_max * alpha_max * Rat(n) - Rat(min_square)) / Rat(-m);
  if (beta_sq_max < 0) return {};
  Int beta_max = rat_sqrt_upper(beta_sq_max);

  IntVec bound(2);
  for (int i = 0; i < 2; ++i) {
    Rat b = alpha_max * Rat(abs(v[i])) + Rat(beta_max) * Rat(abs(u0[i]));
    bound[i] = rat_ceil(b);
  }

  std::vector<IntVec> sols;
  for (Int x = -bound[0]; x <= bound[0]; ++x)
    for (Int y = -bound[1]; y <= bound[1]; ++y) {
      IntVec w{x, y};
      Int p = pair2(gram, w, v);
      if (p < lo || p > hi) continue;
      Int sq = pair2(gram, w, w);
      if (query.kind == Rank2Query::ExactSquare) {
        if (sq != query.square) continue;
      } else {
        if (sq < 0 || sq >= p) continue;
      }
      sols.push_back(std::move(w));
    }

  std::sort(sols.begin(), sols.end(), [&](const IntVec& a, const IntVec& b2) {
    Int pa = pair2(gram, a, v), pb = pair2(gram, b2, v);
    int c = cmp(pa, pb);
    if (c != 0) return c < 0;
    c = cmp(a[0], b2[0]);
    if (c != 0) return c < 0;
    return cmp(a[1], b2[1]) < 0;
  });
  return sols;
}

namespace {

void check_wall_inputs(const LatticeVector& v, const LatticeVector& d) {
  require(is_primitive(v), ErrorCode::NotPrimitive, "wall test needs primitive v");
  require(norm(v) > 0, ErrorCode::BadParam, "wall test needs v^2 > 0");
  require(norm(d) < 0, ErrorCode::BadParam, "wall test needs d^2 < 0");
  require(inner(v, d) == 0, ErrorCode::BadParam, "divisor must be orthogonal to v");
}

WallVerdict verdict_from(const Sublattice& t, const std::vector<IntVec>& sols, WallClause clause) {
  WallVerdict out;
  out.closure = t;
  if (sols.empty()) return out;
  out.is_wall = true;
  out.clause = clause;
  out.witness_coords = sols.front();
  out.witness = t.to_ambient(sols.front());
  return out;
}

}  // namespace

WallVerdict bm_wall(const LatticeVector& v, const LatticeVector& d) {
  check_wall_inputs(v, d);
  Sublattice t = rank2_closure(v, d);
  IntVec vt{1, 0};
  Int half = norm(v) / 2;
  auto hits = rank2_solve(t.gram, vt, Rank2Query{Rank2Query::ExactSquare, -2, 0, half});
  if (!hits.empty()) return verdict_from(t, hits, WallClause::BM1);
  auto range = rank2_solve(t.gram, vt, Rank2Query{Rank2Query::RangeSquare, 0, 0, half});
  WallVerdict out = verdict_from(t, range, WallClause::BM2);
  out.closure = t;
  return out;
}

WallVerdict yoshioka_wall(const LatticeVector& v, const LatticeVector& d) {
  check_wall_inputs(v, d);
  Sublattice t = rank2_closure(v, d);
  IntVec vt{1, 0};
  Int half = norm(v) / 2;
  auto range = rank2_solve(t.gram, vt, Rank2Query{Rank2Query::RangeSquare, 0, 0, half});
  return verdict_from(t, range, WallClause::YOSH);
}

WallVerdict mz_wall(const LatticeVector& w, const LatticeVector& d) {
  require(norm(w) == 2, ErrorCode::BadParam, "mz_wall needs w^2 = 2");
  check_wall_inputs(w, d);
  Sublattice t = rank2_closure(w, d);
  IntVec wt{1, 0};
  auto fixed = rank2_solve(t.gram, wt, Rank2Query{Rank2Query::ExactSquare, -2, 0, 0});
  if (!fixed.empty()) return verdict_from(t, fixed, WallClause::MZ0);
  auto ones = rank2_solve(t.gram, wt, Rank2Query{Rank2Query::ExactSquare, -2, 1, 1});
  return verdict_from(t, ones, WallClause::MZ1);
}

LatticeVector mz_wall_from_s(const LatticeVector& w, const LatticeVector& s) {
  require(norm(w) == 2, ErrorCode::BadParam, "mz_wall_from_s needs w^2 = 2");
  require(norm(s) == -2, ErrorCode::BadWitness, "mz_wall_from_s needs s^2 = -2");
  Int sw = inner(s, w);
  require(sw == 0 || sw == 1, ErrorCode::BadWitness, "mz_wall_from_s needs (s,w) in {0,1}");
  Sublattice span = saturation({w, s});
  // Kernel of the pairing-with-w functional inside the rank-2 span.
  IntMat row(1, 2);
  IntVec gw = w.lattice->gram().apply(w.coords);
  for (int j = 0; j < 2; ++j) {
    Int p = 0;
    for (int i = 0; i < span.basis.rows(); ++i) p += span.basis.at(i, j) * gw[i];
    row.at(0, j) = p;
  }
  IntMat ker = integer_kernel(row);
  require(ker.cols() == 1, ErrorCode::Internal, "w-perp inside the span must be a line");
  IntVec dcoords(span.basis.rows());
  for (int i = 0; i < span.basis.rows(); ++i)
    dcoords[i] = span.basis.at(i, 0) * ker.at(0, 0) + span.basis.at(i, 1) * ker.at(1, 0);
  for (const Int& c : dcoords) {
    if (c == 0) continue;
    if (c < 0)
      for (Int& x : dcoords) x = -x;
    break;
  }
  return LatticeVector{w.lattice, dcoords};
}

ContractionResult kummer_contraction_type(long n, const LatticeVector& d) {
  require(n >= 1, ErrorCode::BadParam, "kummer_contraction_type needs n >= 1");
  LatticePtr l = d.lattice;
  require(same_lattice(l, standard_lattice("mukai_abelian")), ErrorCode::LatticeMismatch,
          "contraction test expects the abelian Mukai lattice");
  IntVec vc(8);
  vc[0] = 1;
  vc[7] = -n - 1;
  LatticeVector v{l, vc};
  require(inner(v, d) == 0, ErrorCode::BadParam, "divisor must be orthogonal to v");
  require(norm(d) < 0, ErrorCode::BadParam, "contraction test needs d^2 < 0");

  Sublattice t = rank2_closure(v, d);
  // Primitive isotropic classes of T: roots of A x^2 + 2B xy + C y^2.
  const Int A = t.gram.at(0, 0), B = t.gram.at(0, 1), C = t.gram.at(1, 1);
  std::vector<IntVec> lines;
  auto add_line = [&](Int x, Int y) {
    Int g = gcd(x, y);
    if (g == 0) return;
    x /= g;
    y /= g;
    for (const auto& seen : lines)
      if (seen[0] == x && seen[1] == y) return;
    lines.push_back(IntVec{x, y});
    lines.push_back(IntVec{-x, -y});
  };
  if (A == 0) {
    add_line(1, 0);
    add_line(C, -2 * B);  // 2Bx + Cy = 0
  } else {
    Int disc = B * B - A * C;
    Int r = isqrt(disc);
    if (r * r == disc) {
      add_line(-B + r, A);
      add_line(-B - r, A);
    }
  }

  IntVec vt{1, 0};
  auto parallel = [&](const LatticeVector& a, const LatticeVector& b) {
    // a, b parallel in ambient coordinates (2x2 minors vanish).
    for (size_t i = 0; i < a.coords.size(); ++i)
      for (size_t j = i + 1; j < a.coords.size(); ++j)
        if (a.coords[i] * b.coords[j] != a.coords[j] * b.coords[i]) return false;
    return true;
  };

  for (Int target : {Int(1), Int(2)}) {
    for (const IntVec& w : lines) {
      if (pair2(t.gram, w, w) != 0) continue;  // defensive; lines are isotropic
      if (pair2(t.gram, w, vt) != target) continue;
      LatticeVector wa = t.to_ambient(w);
      IntVec cand(8);
      Int mult = (target == 1) ? Int(2 * n + 2) : Int(n + 1);
      for (int i = 0; i < 8; ++i) cand[i] = v.coords[i] - mult * wa.coords[i];
      if (parallel(LatticeVector{l, cand}, d)) {
        ContractionResult res;
        res.type = (target == 1) ? ContractionType::TypeI : ContractionType::TypeII;
        res.w = wa;
        return res;
      }
    }
  }
  return {};
}

bool chamber_separates(const std::vector<LatticeVector>& walls, const RationalVector& h1,
                       const RationalVector& h2) {
  require(norm(h1) > 0 && norm(h2) > 0, ErrorCode::BadParam,
          "chamber points must have positive square");
  bool separated = false;
  for (const LatticeVector& wv : walls) {
    RationalVector w{wv.lattice, RatVec(wv.coords.size())};
    for (size_t i = 0; i < wv.coords.size(); ++i) w.coords[i] = Rat(wv.coords[i]);
    Rat p1 = inner(w, h1);
    Rat p2 = inner(w, h2);
    require(p1 != 0 && p2 != 0, ErrorCode::OnWall, "chamber point lies on a wall");
    if ((p1 > 0) != (p2 > 0)) separated = true;
  }
  return separated;
}

}  // namespace wallkit

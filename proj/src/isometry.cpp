#include "wallkit/isometry.hpp"

#include <algorithm>
#include <utility>

namespace wallkit {

LatticeVector Isometry::apply(const LatticeVector& x) const {
  require(same_lattice(lattice, x.lattice), ErrorCode::LatticeMismatch,
          "isometry and vector live in different lattices");
  return {lattice, matrix.apply(x.coords)};
}

bool is_isometry(const LatticePtr& lattice, const IntMat& matrix) {
  const size_t n = lattice->rank();
  if (matrix.rows() != n || matrix.cols() != n) return false;
  const IntMat& g = lattice->gram();
  return matrix.transposed() * (g * matrix) == g;
}

Isometry make_isometry(const LatticePtr& lattice, const IntMat& matrix) {
  require(is_isometry(lattice, matrix), ErrorCode::NotIsometry,
          "matrix does not preserve the bilinear form");
  return {lattice, matrix};
}

Isometry compose(const Isometry& a, const Isometry& b) {
  require(same_lattice(a.lattice, b.lattice), ErrorCode::LatticeMismatch,
          "composing isometries of different lattices");
  return {a.lattice, a.matrix * b.matrix};
}

Isometry inverse_of(const Isometry& g) {
  // g^-1 = G^-1 g^T G, integral because g preserves G.
  IntMat m = unimodular_inverse(g.matrix);
  return {g.lattice, std::move(m)};
}

Int determinant(const Isometry& g) { return det(g.matrix); }

Isometry reflection(const LatticeVector& u) {
  const LatticePtr& l = u.lattice;
  const Int q = norm(u);
  require(q != 0, ErrorCode::IsotropicMirror, "mirror vector is isotropic");
  const size_t n = l->rank();
  IntVec gu = l->gram().apply(u.coords);
  IntMat m = IntMat::identity(n);
  for (size_t j = 0; j < n; ++j) {
    Int num = 2 * gu[j];
    require(num % q == 0, ErrorCode::NotIntegral,
            "reflection is not integral on the lattice");
    Int c = num / q;
    for (size_t i = 0; i < n; ++i) m.at(i, j) -= c * u.coords[i];
  }
  return make_isometry(l, m);
}

Isometry eichler_transvection(const LatticeVector& e, const LatticeVector& a) {
  const LatticePtr& l = e.lattice;
  require(same_lattice(l, a.lattice), ErrorCode::LatticeMismatch,
          "transvection data in different lattices");
  require(l->is_even(), ErrorCode::BadPair,
          "transvections are defined on even lattices");
  require(norm(e) == 0, ErrorCode::BadPair, "transvection base is not isotropic");
  require(inner(e, a) == 0, ErrorCode::BadPair,
          "transvection companion must be orthogonal to the base");
  const size_t n = l->rank();
  const IntVec ge = l->gram().apply(e.coords);
  const IntVec ga = l->gram().apply(a.coords);
  const Int half = norm(a) / 2;
  IntMat m = IntMat::identity(n);
  for (size_t j = 0; j < n; ++j) {
    // column j: e_j - ga[j] e + ge[j] a - half ge[j] e
    for (size_t i = 0; i < n; ++i) {
      m.at(i, j) += -ga[j] * e.coords[i] + ge[j] * a.coords[i] -
                    half * ge[j] * e.coords[i];
    }
  }
  return make_isometry(l, m);
}

int orientation_sign(const Isometry& g) {
  if (g.lattice->signature().first == 0) return 1;
  RatMat gram(g.lattice->gram());
  RatMat b = positive_subspace_basis(gram);
  // det(B^T G g B), a p x p rational determinant; its sign tells whether g
  // keeps or reverses the orientation of the positive cone.
  RatMat prod = b.transposed() * (gram * (RatMat(g.matrix) * b));
  Rat d = det(prod);
  require(d != 0, ErrorCode::Internal, "degenerate positive block");
  return d > 0 ? 1 : -1;
}

bool is_orientation_preserving(const Isometry& g) {
  return orientation_sign(g) == 1;
}

namespace {

// Working state for the constructive reduction. The ambient lattice has
// basis e1, f1, e2, f2, rest with the first four spanning U + U.
struct Reducer {
  LatticePtr l;
  size_t n;
  IntVec cur;
  IntMat acc;
  int steps = 0;

  explicit Reducer(const LatticeVector& x)
      : l(x.lattice), n(x.lattice->rank()), cur(x.coords),
        acc(IntMat::identity(x.lattice->rank())) {}

  LatticeVector vec(const IntVec& v) const { return {l, v}; }

  static IntVec unit(size_t n, size_t i) {
    IntVec v(n, 0);
    v[i] = 1;
    return v;
  }

  void apply(const IntVec& e, const IntVec& a) {
    Isometry t = eichler_transvection(vec(e), vec(a));
    cur = t.matrix.apply(cur);
    acc = t.matrix * acc;
    ++steps;
  }

  // The four cross-plane moves, scaled by c:
  //   t1: alpha1 += c beta2,  alpha2 -= c beta1
  //   t2: alpha1 += c alpha2, beta2  -= c beta1
  //   t3: beta1  += c beta2,  alpha2 -= c alpha1
  //   t4: beta1  += c alpha2, beta2  -= c alpha1
  void t1(const Int& c) { apply(unit(n, 2), scaled(0, c)); }
  void t2(const Int& c) { apply(unit(n, 3), scaled(0, c)); }
  void t3(const Int& c) { apply(unit(n, 2), scaled(1, c)); }
  void t4(const Int& c) { apply(unit(n, 3), scaled(1, c)); }

  // In-plane moves with companion a supported away from e1, f1:
  //   a_move: alpha1 -= (a,x) + a^2/2 beta1,  w-part += beta1 a
  //   b_move: beta1  -= (a,x) + a^2/2 alpha1, w-part += alpha1 a
  void a_move(const IntVec& a) { apply(unit(n, 0), a); }
  void b_move(const IntVec& a) { apply(unit(n, 1), a); }

  IntVec scaled(size_t i, const Int& c) const {
    IntVec v(n, 0);
    v[i] = c;
    return v;
  }

  const Int& alpha1() const { return cur[0]; }
  const Int& beta1() const { return cur[1]; }
  const Int& alpha2() const { return cur[2]; }
  const Int& beta2() const { return cur[3]; }

  // Euclidean descent on (alpha1, cur[other]) where other is 2 or 3.
  // plus(c) adds c * cur[other] to alpha1; minus(c) subtracts c * alpha1
  // from cur[other]. Leaves |alpha1| = gcd.
  template <typename Plus, typename Minus>
  void euclid(size_t other, Plus plus, Minus minus) {
    int guard = 0;
    while (cur[other] != 0) {
      require(++guard < 512, ErrorCode::Internal, "euclid loop diverged");
      if (alpha1() == 0) {
        plus(Int(1));
        continue;
      }
      Int q = round_div(cur[other], alpha1());
      if (q != 0) minus(q);
      if (cur[other] == 0) break;
      q = round_div(alpha1(), cur[other]);
      if (q != 0) plus(-q);
      if (alpha1() == 0) {
        plus(Int(1));
        minus(Int(1));
        break;
      }
    }
  }

  void euclid_beta2() {
    euclid(3, [&](const Int& c) { t1(c); }, [&](const Int& c) { t4(c); });
  }
  void euclid_alpha2() {
    euclid(2, [&](const Int& c) { t2(c); }, [&](const Int& c) { t3(c); });
  }

  // Divisibility of the tail z = cur[4..] inside the orthogonal block,
  // together with a block vector realizing it. Returns 0 divisor on zero z.
  std::pair<Int, IntVec> tail_pairing_gcd() const {
    const IntMat& g = l->gram();
    // (b_j, z) for block basis vectors b_j, j >= 4
    IntVec gz = g.apply(cur);
    Int d = 0;
    for (size_t j = 4; j < n; ++j) d = gcd(d, gz[j]);
    if (d == 0) return {Int(0), IntVec(n, 0)};
    // Build a with (a, z) = d by accumulating extended gcds.
    IntVec a(n, 0);
    Int run = 0;
    for (size_t j = 4; j < n; ++j) {
      if (gz[j] == 0) continue;
      if (run == 0) {
        // first contributor
        a[j] = gz[j] > 0 ? 1 : -1;
        run = abs(gz[j]);
        continue;
      }
      Int s, t;
      Int gg = extgcd(run, gz[j], s, t);
      for (size_t i = 4; i < n; ++i) a[i] *= s;
      a[j] += t;
      run = gg;
    }
    require(run == d, ErrorCode::Internal, "tail gcd accumulation mismatch");
    return {d, a};
  }
};

}  // namespace

EichlerReduction eichler_reduce(const LatticeVector& x) {
  const LatticePtr& l = x.lattice;
  require_uu_split(*l);
  require(!is_zero(x), ErrorCode::ZeroVector, "cannot reduce the zero vector");
  require(divisibility(x) == 1, ErrorCode::DivisibilityNotOne,
          "reduction requires divisibility 1");
  const Int target_norm = norm(x);
  require(target_norm % 2 == 0, ErrorCode::Internal, "even lattice expected");

  Reducer r(x);
  const size_t n = r.n;

  // Phase 0: make alpha1 nonzero.
  if (r.alpha1() == 0) {
    if (r.alpha2() != 0) {
      r.t2(1);
    } else if (r.beta2() != 0) {
      r.t1(1);
    } else {
      auto [d0, a0] = r.tail_pairing_gcd();
      if (d0 != 0) {
        bool moved = false;
        for (int k = 1; k <= 3 && !moved; ++k) {
          IntVec a(n, 0);
          for (size_t i = 4; i < n; ++i) a[i] = Int(k) * a0[i];
          Int an = inner(r.vec(a), r.vec(a));
          Int az = inner(r.vec(a), r.vec(r.cur));
          Int next = r.alpha1() - az - (an / 2) * r.beta1();
          if (next != 0) {
            r.a_move(a);
            moved = true;
          }
        }
        require(moved, ErrorCode::Internal, "phase 0 failed to engage the plane");
      } else {
        // x = beta1 f1 with beta1 = +-1
        IntVec a(n, 0);
        a[2] = 1;
        a[3] = 1;  // e2 + f2, norm 2, orthogonal to e1
        r.a_move(a);  // alpha1 = -beta1 != 0
      }
    }
  }
  require(r.alpha1() != 0, ErrorCode::Internal, "phase 0 left alpha1 zero");

  // Descent: shrink |alpha1| to 1.
  int guard = 0;
  while (abs(r.alpha1()) > 1) {
    require(++guard < 256, ErrorCode::Internal, "descent loop diverged");
    Int a1 = abs(r.alpha1());
    if (gcd(r.alpha1(), r.beta2()) < a1) {
      r.euclid_beta2();
      continue;
    }
    if (gcd(r.alpha1(), r.alpha2()) < a1) {
      r.euclid_alpha2();
      continue;
    }
    // alpha2 and beta2 are multiples of alpha1; clear them.
    if (r.alpha2() != 0) r.t3(r.alpha2() / r.alpha1());
    if (r.beta2() != 0) r.t4(r.beta2() / r.alpha1());
    if (gcd(r.alpha1(), r.beta1()) == 1) {
      r.t1(1);  // alpha2 = -beta1, coprime to alpha1
      r.euclid_alpha2();
      continue;
    }
    // gcd(alpha1, beta1) > 1 forces a nonzero tail carrying the rest of
    // the divisibility; shift beta1 by a multiple of the tail gcd to make
    // it coprime to alpha1.
    auto [d0, a0] = r.tail_pairing_gcd();
    require(d0 != 0, ErrorCode::Internal,
            "divisibility 1 vector with degenerate tail");
    bool shifted = false;
    for (int k = 1; k <= 4096 && !shifted; ++k) {
      if (gcd(r.beta1() - Int(k) * d0, r.alpha1()) == 1) {
        IntVec a(n, 0);
        for (size_t i = 4; i < n; ++i) a[i] = Int(k) * a0[i];
        r.b_move(a);
        shifted = true;
      }
    }
    require(shifted, ErrorCode::Internal, "coprime shift not found");
    require(gcd(r.alpha1(), r.beta1()) == 1, ErrorCode::Internal,
            "shift failed to decouple beta1");
    r.t1(1);
    r.euclid_alpha2();
  }

  // Sign fix: alpha1 = -1 -> +1 through a clean plane.
  if (r.alpha1() == -1) {
    if (r.alpha2() != 0) r.t3(r.alpha2() / r.alpha1());
    if (r.beta2() != 0) r.t4(r.beta2() / r.alpha1());
    r.t4(1);  // beta2 = 1
    r.t1(2);  // alpha1 = -1 + 2 = 1
  }
  require(r.alpha1() == 1, ErrorCode::Internal, "descent did not reach 1");

  // Finish: absorb everything outside the first plane, then flatten beta1.
  IntVec w(n, 0);
  for (size_t i = 2; i < n; ++i) w[i] = -r.cur[i];
  r.b_move(w);
  for (size_t i = 2; i < n; ++i)
    require(r.cur[i] == 0, ErrorCode::Internal, "tail not absorbed");
  require(r.cur[0] == 1 && 2 * r.cur[1] == target_norm, ErrorCode::Internal,
          "canonical form mismatch");

  Isometry g = make_isometry(l, r.acc);
  LatticeVector canonical{l, r.cur};
  require(g.apply(x).coords == r.cur, ErrorCode::Internal,
          "accumulated isometry disagrees with the state");
  return {std::move(g), std::move(canonical), r.steps};
}

bool orbit_equivalent(const LatticeVector& x, const LatticeVector& y) {
  require(same_lattice(x.lattice, y.lattice), ErrorCode::LatticeMismatch,
          "orbit comparison across lattices");
  require(is_primitive(x) && is_primitive(y), ErrorCode::NotPrimitive,
          "orbit comparison requires primitive vectors");
  if (norm(x) != norm(y)) return false;
  if (divisibility(x) != divisibility(y)) return false;
  DiscriminantGroup dg = discriminant_group(x.lattice);
  return disc_image(dg, x) == disc_image(dg, y);
}

Isometry mapping_isometry(const LatticeVector& x, const LatticeVector& y) {
  require(orbit_equivalent(x, y), ErrorCode::NotEquivalent,
          "vectors lie in different orbits");
  require(divisibility(x) == 1, ErrorCode::DivisibilityNotOne,
          "constructive mapping requires divisibility 1");
  EichlerReduction rx = eichler_reduce(x);
  EichlerReduction ry = eichler_reduce(y);
  Isometry g = compose(inverse_of(ry.g), rx.g);
  require(g.apply(x).coords == y.coords, ErrorCode::Internal,
          "mapping isometry failed verification");
  return g;
}

}  // namespace wallkit

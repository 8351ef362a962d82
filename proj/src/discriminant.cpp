#include "wallkit/discriminant.hpp"

#include <numeric>

namespace wallkit {

// With U G V = D, the composite y -> U G y maps L-dual/L isomorphically onto
// (+) ZZ/d_i; generator i pulls back to column i of V divided by d_i.
DiscriminantGroup discriminant_group(const LatticePtr& lattice) {
  const IntMat& g = lattice->gram();
  int n = g.rows();
  SmithResult s = smith_normal_form(g);

  DiscriminantGroup out;
  out.lattice = lattice;
  out.order = 1;
  out.u_transform = s.u;
  out.diag.resize(n);
  std::vector<int> idx;
  for (int t = 0; t < n; ++t) {
    require(s.d.at(t, t) != 0, ErrorCode::Degenerate, "degenerate Gram matrix");
    out.diag[t] = s.d.at(t, t);
    if (s.d.at(t, t) > 1) {
      idx.push_back(t);
      out.factors.push_back(s.d.at(t, t));
      out.order *= s.d.at(t, t);
    }
  }
  for (int t : idx) {
    RatVec lift(n);
    for (int i = 0; i < n; ++i) lift[i] = Rat(s.v.at(i, t)) / Rat(s.d.at(t, t));
    out.lifts.push_back(std::move(lift));
  }

  int k = out.generator_count();
  out.q_values.resize(k);
  out.pairing = RatMat(k, k);
  auto form = [&](const RatVec& a, const RatVec& b) {
    RatVec gb = g.apply(b);
    Rat acc = 0;
    for (int i = 0; i < n; ++i) acc += a[i] * gb[i];
    return acc;
  };
  for (int i = 0; i < k; ++i) {
    out.q_values[i] = normalize_mod2(form(out.lifts[i], out.lifts[i]));
    for (int j = 0; j < k; ++j) out.pairing.at(i, j) = normalize_mod1(form(out.lifts[i], out.lifts[j]));
  }
  return out;
}

IntVec dual_coords(const DiscriminantGroup& g, const RationalVector& y) {
  require(same_lattice(g.lattice, y.lattice), ErrorCode::LatticeMismatch,
          "dual vector from a different lattice");
  const IntMat& gram = g.lattice->gram();
  int n = gram.rows();
  RatVec gy = gram.apply(y.coords);
  IntVec z(n);
  for (int i = 0; i < n; ++i) {
    require(gy[i].get_den() == 1, ErrorCode::NotIntegral,
            "vector does not pair integrally with the lattice");
    z[i] = gy[i].get_num();
  }
  IntVec w = g.u_transform.apply(z);
  IntVec out;
  for (int t = 0; t < n; ++t)
    if (g.diag[t] > 1) out.push_back(mod_floor(w[t], g.diag[t]));
  return out;
}

IntVec disc_image(const DiscriminantGroup& g, const LatticeVector& x) {
  require(is_primitive(x), ErrorCode::NotPrimitive, "disc_image needs a primitive vector");
  return dual_coords(g, dual_class(x));
}

DiscAction disc_action(const DiscriminantGroup& g, const IntMat& isometry) {
  const IntMat& gram = g.lattice->gram();
  require(isometry.rows() == gram.rows() && isometry.cols() == gram.cols(),
          ErrorCode::NotIsometry, "matrix shape");
  require(isometry.transposed() * gram * isometry == gram, ErrorCode::NotIsometry,
          "matrix does not preserve the form");

  int k = g.generator_count();
  DiscAction a;
  a.factors = g.factors;
  a.matrix = IntMat(k, k);
  std::vector<RatVec> images;
  for (int j = 0; j < k; ++j) {
    RatVec img = isometry.apply(g.lifts[j]);
    images.push_back(img);
    IntVec col = dual_coords(g, RationalVector{g.lattice, img});
    for (int i = 0; i < k; ++i) a.matrix.at(i, j) = col[i];
  }

  // The torsion forms must come along; a mismatch means the generator lift
  // bookkeeping broke, not a user error.
  auto form = [&](const RatVec& x, const RatVec& y) {
    RatVec gy = gram.apply(y);
    Rat acc = 0;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * gy[i];
    return acc;
  };
  for (int j = 0; j < k; ++j) {
    require(normalize_mod2(form(images[j], images[j])) == g.q_values[j], ErrorCode::Internal,
            "induced action does not preserve q");
    for (int i = 0; i < k; ++i)
      require(normalize_mod1(form(images[i], images[j])) == g.pairing.at(i, j),
              ErrorCode::Internal, "induced action does not preserve the pairing");
  }
  return a;
}

const char* pm1_name(Pm1 c) {
  switch (c) {
    case Pm1::Plus: return "+1";
    case Pm1::Minus: return "-1";
    case Pm1::Other: return "other";
  }
  return "other";
}

Pm1 classify_pm1(const DiscAction& a) {
  int k = a.matrix.rows();
  for (Int scalar : {Int(1), Int(-1)}) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        Int want = (i == j) ? scalar : Int(0);
        if (mod_floor(a.matrix.at(i, j) - want, a.factors[i]) != 0) ok = false;
      }
    if (ok) return scalar == 1 ? Pm1::Plus : Pm1::Minus;
  }
  return Pm1::Other;
}

long count_sqrt_units(long n) {
  require(n >= 1, ErrorCode::BadParam, "count_sqrt_units needs n >= 1");
  long d = 2 * n + 2;
  long count = 0;
  for (long u = 1; u < d; ++u) {
    if (std::gcd(u, d) != 1) continue;
    if ((u * u) % (2 * d) == 1) ++count;
  }
  return count;
}

long w_exponent(long n) {
  require(n >= 1, ErrorCode::BadParam, "w_exponent needs n >= 1");
  return distinct_prime_factors(Int(n + 1)) - 1;
}

}  // namespace wallkit

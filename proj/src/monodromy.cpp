#include "wallkit/monodromy.hpp"

#include <random>

#include "wallkit/enumerate.hpp"

namespace wallkit {

KummerModel kummer_model(long n) {
  require(n >= 1, ErrorCode::BadParam, "kummer model needs n >= 1");
  KummerModel m;
  m.n = n;
  m.small = standard_lattice("kummer(" + std::to_string(n) + ")");
  m.big = standard_lattice("mukai_abelian");
  m.embedding = IntMat(8, 7);
  for (int j = 0; j < 6; ++j) m.embedding.at(1 + j, j) = 1;
  m.embedding.at(0, 6) = 1;
  m.embedding.at(7, 6) = n + 1;
  require(m.embedding.transposed() * m.big->gram() * m.embedding == m.small->gram(),
          ErrorCode::Internal, "kummer embedding is not isometric");
  IntVec vc(8);
  vc[0] = 1;
  vc[7] = -n - 1;
  m.v = LatticeVector{m.big, vc};
  return m;
}

LatticeVector embed(const KummerModel& m, const LatticeVector& x) {
  require(same_lattice(x.lattice, m.small), ErrorCode::LatticeMismatch,
          "vector does not live in kummer(n)");
  return LatticeVector{m.big, m.embedding.apply(x.coords)};
}

Pm1 chi(const Isometry& g) {
  DiscriminantGroup dg = discriminant_group(g.lattice);
  return classify_pm1(disc_action(dg, g.matrix));
}

MonVerdict mon_membership_kummer(const Isometry& g) {
  MonVerdict out;
  out.orientation = orientation_sign(g);
  out.chi = chi(g);
  out.det = determinant(g);
  if (out.orientation != 1) {
    out.reason = "orientation reversed on the positive cone";
    return out;
  }
  if (out.chi == Pm1::Other) {
    out.reason = "discriminant action is not a scalar +-1";
    return out;
  }
  Int chi_val = out.chi == Pm1::Plus ? 1 : -1;
  if (out.det * chi_val != 1) {
    out.reason = "det * chi = -1";
    return out;
  }
  out.member = true;
  out.reason = "orientation +, chi scalar, det * chi = +1";
  return out;
}

KummerProofTrace kummer_proof_trace(const KummerModel& m, const Isometry& g) {
  require(same_lattice(g.lattice, m.small), ErrorCode::LatticeMismatch,
          "isometry does not act on kummer(n)");
  const long n = m.n;
  const Int period = 2 * n + 2;

  KummerProofTrace tr;
  tr.n = n;
  IntVec delta(7);
  delta[6] = 1;
  LatticeVector image{m.small, g.matrix.apply(delta)};

  // g(delta) = k delta + (2n+2) l with l supported on the U^3 part; the
  // discriminant group is cyclic, so the shape is forced.
  tr.k = image.coords[6];
  IntVec lc(7, 0);
  for (int i = 0; i < 6; ++i) {
    require(image.coords[i] % period == 0, ErrorCode::Internal,
            "image of the exceptional generator has a non-divisible U^3 part");
    lc[i] = image.coords[i] / period;
  }
  tr.l = LatticeVector{m.small, lc};
  tr.pell_ok = tr.k * tr.k - period * norm(tr.l) == 1;
  tr.k_mod = mod_floor(tr.k, period);

  LatticeVector big_image = embed(m, image);
  auto integral_quotient = [&](int sign) {
    for (int i = 0; i < 8; ++i) {
      Int num = m.v.coords[i] + sign * big_image.coords[i];
      if (num % period != 0) return false;
    }
    return true;
  };
  tr.t_integral = integral_quotient(+1);
  tr.t_prime_integral = integral_quotient(-1);

  tr.image_div = divisibility(image);
  tr.image_wall = yoshioka_wall(m.v, big_image);
  tr.image_type = kummer_contraction_type(n, big_image);
  tr.membership = mon_membership_kummer(g);
  return tr;
}

std::vector<Isometry> sample_kummer_isometries(long n, size_t count, uint64_t seed) {
  LatticePtr l = standard_lattice("kummer(" + std::to_string(n) + ")");
  const int rank = 7;

  auto basis_vec = [&](int i, Int c) {
    IntVec v(rank, 0);
    v[i] = std::move(c);
    return LatticeVector{l, v};
  };

  std::vector<Isometry> out;
  out.reserve(count);
  for (size_t idx = 0; idx < count; ++idx) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (idx + 1)));
    auto pick = [&](int m_) { return static_cast<int>(rng() % m_); };

    Isometry word = make_isometry(l, IntMat::identity(rank));
    int len = 1 + pick(5);
    for (int step = 0; step < len; ++step) {
      Isometry factor = word;  // overwritten below
      switch (pick(4)) {
        case 0: {  // reflection in e_i - f_i
          int i = pick(3);
          IntVec u(rank, 0);
          u[2 * i] = 1;
          u[2 * i + 1] = -1;
          factor = reflection(LatticeVector{l, u});
          break;
        }
        case 1:  // reflection in the exceptional generator
          factor = reflection(basis_vec(6, 1));
          break;
        case 2: {  // transvection from an isotropic basis vector
          int e_index = pick(6);
          IntVec a(rank, 0);
          // companion orthogonal to e: skip e's dual partner
          int partner = e_index ^ 1;
          for (int i = 0; i < rank; ++i) {
            if (i == partner) continue;
            a[i] = pick(5) - 2;
          }
          factor = eichler_transvection(basis_vec(e_index, 1), LatticeVector{l, a});
          break;
        }
        case 3: {  // -Id
          IntMat neg(rank, rank);
          for (int i = 0; i < rank; ++i) neg.at(i, i) = -1;
          factor = make_isometry(l, neg);
          break;
        }
      }
      word = compose(factor, word);
    }
    out.push_back(std::move(word));
  }
  return out;
}

namespace {

OG10Model build_og10_model(LatticePtr ambient, IntMat embedding) {
  OG10Model m;
  m.big = standard_lattice("mukai_k3");
  m.ambient = std::move(ambient);

  // w-perp basis in the Mukai lattice: the U^3 and E8(-1)^2 blocks, then the
  // (-2)-class (1; 0; 1).
  m.wperp_basis = IntMat(24, 23);
  for (int j = 0; j < 22; ++j) m.wperp_basis.at(1 + j, j) = 1;
  m.wperp_basis.at(0, 22) = 1;
  m.wperp_basis.at(23, 22) = 1;

  IntVec wc(24, 0);
  wc[0] = 1;
  wc[23] = -1;
  m.w = LatticeVector{m.big, wc};

  m.embedding = std::move(embedding);

  require(m.ambient->rank() == 24, ErrorCode::FixtureInvalid, "ambient fixture must have rank 24");
  require(m.ambient->is_even(), ErrorCode::FixtureInvalid, "ambient fixture must be even");
  require(m.ambient->signature() == std::make_pair(3, 21), ErrorCode::FixtureInvalid,
          "ambient fixture must have signature (3,21)");
  DiscriminantGroup dg = discriminant_group(m.ambient);
  require(dg.order == 3, ErrorCode::FixtureInvalid,
          "ambient fixture must have discriminant group of order 3");
  require_uu_split(*m.ambient);

  require(m.embedding.rows() == 24 && m.embedding.cols() == 23, ErrorCode::FixtureInvalid,
          "embedding must be 24 x 23");
  IntMat wperp_gram = m.wperp_basis.transposed() * m.big->gram() * m.wperp_basis;
  require(m.embedding.transposed() * m.ambient->gram() * m.embedding == wperp_gram,
          ErrorCode::FixtureInvalid, "embedding does not preserve the w-perp form");
  // Primitivity: all invariant factors of the embedding matrix are 1.
  for (const Int& f : invariant_factors(m.embedding))
    require(f == 1, ErrorCode::FixtureInvalid, "embedding is not primitive");
  return m;
}

}  // namespace

OG10Model og10_model() {
  LatticePtr ambient = direct_sum(
      {standard_lattice("U"), standard_lattice("U"), standard_lattice("U"),
       standard_lattice("E8(-1)"), standard_lattice("E8(-1)"), standard_lattice("A2(-1)")},
      "og10");
  IntMat iota(24, 23);
  for (int j = 0; j < 22; ++j) iota.at(j, j) = 1;  // U^3 and E8 blocks, identically
  iota.at(22, 22) = 1;                             // (1;0;1) -> first A2(-1) generator
  return build_og10_model(std::move(ambient), std::move(iota));
}

OG10Model og10_model(const LatticePtr& ambient, const IntMat& embedding) {
  return build_og10_model(ambient, embedding);
}

OG10Certificate og10_certificate(const OG10Model& m, const std::optional<LatticeVector>& f_opt) {
  OG10Certificate cert;
  auto check = [&](const std::string& name, bool ok) {
    cert.checks.emplace_back(name, ok);
    return ok;
  };

  cert.w = m.w;
  check("w^2 = 2", norm(cert.w) == 2);

  // s = (2; a1 + b1; 1): rank 2, first-U middle part of square 2, and 1.
  IntVec sc(24, 0);
  sc[0] = 2;
  sc[1] = 1;
  sc[2] = 1;
  sc[23] = 1;
  cert.s = LatticeVector{m.big, sc};
  check("s^2 = -2", norm(cert.s) == -2);
  check("(s, w) = 1", inner(cert.s, cert.w) == 1);

  cert.d = mz_wall_from_s(cert.w, cert.s);
  check("d^2 = -10", norm(cert.d) == -10);
  check("(d, w) = 0", inner(cert.d, cert.w) == 0);
  Sublattice wperp{m.big, m.wperp_basis,
                   m.wperp_basis.transposed() * m.big->gram() * m.wperp_basis};
  cert.d_div_wperp = divisibility_in(wperp, cert.d);
  check("div of d inside w-perp is 2", cert.d_div_wperp == 2);
  cert.d_wall = mz_wall(cert.w, cert.d);
  check("d is a wall (MZ clause fires)", cert.d_wall.is_wall);

  // Push d through the embedding.
  auto dc = coords_in(wperp, cert.d);
  require(dc.has_value(), ErrorCode::Internal, "d must lie in w-perp");
  IntVec d_wp(23);
  for (int i = 0; i < 23; ++i) {
    require((*dc)[i].get_den() == 1, ErrorCode::Internal, "d has non-integral w-perp coordinates");
    d_wp[i] = (*dc)[i].get_num();
  }
  cert.d_hat = LatticeVector{m.ambient, m.embedding.apply(d_wp)};
  check("d_hat^2 = -10", norm(cert.d_hat) == -10);
  cert.d_hat_div = divisibility(cert.d_hat);
  check("div of d_hat inside the ambient lattice is 1", cert.d_hat_div == 1);

  if (f_opt.has_value()) {
    require(same_lattice(f_opt->lattice, m.ambient), ErrorCode::LatticeMismatch,
            "supplied f does not live in the ambient fixture");
    cert.f = *f_opt;
    require(norm(cert.f) == -10, ErrorCode::NoSuchF, "supplied f must have square -10");
    require(is_primitive(cert.f), ErrorCode::NoSuchF, "supplied f must be primitive");
    require(divisibility(cert.f) == 1, ErrorCode::NoSuchF, "supplied f must have divisibility 1");
  } else {
    // Norm -10 vectors of the first E8(-1) block (ambient coordinates
    // 6..13); primitive with divisibility 1 automatically since the block
    // is unimodular.
    LatticePtr block = standard_lattice("E8(-1)");
    auto hits = short_vectors(block, Int(-10), 1);
    require(!hits.empty(), ErrorCode::NoSuchF, "no norm -10 vector in the E8(-1) block");
    IntVec fc(24, 0);
    for (int i = 0; i < 8; ++i) fc[6 + i] = hits.front().coords[i];
    cert.f = LatticeVector{m.ambient, fc};
  }
  check("f^2 = -10", norm(cert.f) == -10);
  cert.f_div = divisibility(cert.f);
  check("div of f is 1", cert.f_div == 1);

  bool same = cert.f.coords == cert.d_hat.coords;
  bool opposite = true;
  for (int i = 0; i < 24; ++i)
    if (cert.f.coords[i] != -cert.d_hat.coords[i]) opposite = false;
  cert.trivial_f = same || opposite;

  cert.g = mapping_isometry(cert.d_hat, cert.f);
  check("g is an isometry", is_isometry(m.ambient, cert.g.matrix));
  check("g(d_hat) = f", cert.g.apply(cert.d_hat).coords == cert.f.coords);
  check("g preserves orientation", orientation_sign(cert.g) == 1);
  check("g has det +1", determinant(cert.g) == 1);
  check("g acts trivially on the discriminant group", chi(cert.g) == Pm1::Plus);

  cert.all_checks_pass = true;
  for (const auto& [name, ok] : cert.checks)
    if (!ok) cert.all_checks_pass = false;

  cert.premise =
      "cited premise, not computed: f is not a wall divisor; given that, g moves "
      "a wall divisor out of the wall set, so the wall-preserving subgroup of "
      "O+ (which contains the monodromy group) is proper";
  return cert;
}

}  // namespace wallkit

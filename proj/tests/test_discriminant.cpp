#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "wallkit/discriminant.hpp"

using namespace wallkit;
using namespace wallkit::testutil;

namespace {

Rat q_of_class(const LatticeVector& x) {
  RationalVector d = dual_class(x);
  return normalize_mod2(norm(d));
}

}  // namespace

TEST_CASE("unimodular lattices have trivial discriminant groups") {
  for (const char* name : {"U", "E8", "E8(-1)", "mukai_k3", "mukai_abelian"}) {
    DiscriminantGroup dg = discriminant_group(standard_lattice(name));
    CHECK(dg.factors.empty());
    CHECK(dg.order == 1);
    CHECK(dg.generator_count() == 0);
  }
}

TEST_CASE("kummer discriminant groups are cyclic with the expected torsion form") {
  for (long n = 1; n <= 8; ++n) {
    auto l = standard_lattice("kummer(" + std::to_string(n) + ")");
    DiscriminantGroup dg = discriminant_group(l);
    REQUIRE(dg.factors == iv({2 * n + 2}));
    CHECK(dg.order == 2 * n + 2);

    // q of the exceptional generator's class, independent of which generator
    // the normal form picked
    LatticeVector delta = lv(l, {0, 0, 0, 0, 0, 0, 1});
    CHECK(q_of_class(delta) == Rat(4 * n + 3, 2 * n + 2));

    // the stored generator is a unit multiple u of that class, so u^2 q(gen)
    // lands back on -1/(2n+2) mod 2
    IntVec img = disc_image(dg, delta);
    REQUIRE(img.size() == 1);
    Int u = img[0];
    CHECK(gcd(u, Int(2 * n + 2)) == 1);
    CHECK(normalize_mod2(Rat(u * u) * dg.q_values[0]) == Rat(4 * n + 3, 2 * n + 2));
  }
}

TEST_CASE("rank-1 and A2 torsion forms") {
  DiscriminantGroup d4 = discriminant_group(standard_lattice("rank1(-4)"));
  CHECK(d4.factors == iv({4}));
  CHECK(d4.q_values[0] == Rat(7, 4));  // both generators square to -1/4 mod 2

  DiscriminantGroup p4 = discriminant_group(standard_lattice("rank1(4)"));
  CHECK(p4.q_values[0] == Rat(1, 4));

  DiscriminantGroup a2 = discriminant_group(standard_lattice("A2"));
  CHECK(a2.factors == iv({3}));
  CHECK(a2.q_values[0] == Rat(2, 3));

  DiscriminantGroup a2n = discriminant_group(standard_lattice("A2(-1)"));
  CHECK(a2n.q_values[0] == Rat(4, 3));
}

TEST_CASE("discriminant pairing of the kummer generator") {
  auto l = standard_lattice("kummer(5)");
  DiscriminantGroup dg = discriminant_group(l);
  // (g, g) = u^2 (delta/12, delta/12) = -u^2/12 mod 1 for a unit u
  Int u = disc_image(dg, lv(l, {0, 0, 0, 0, 0, 0, 1}))[0];
  CHECK(dg.pairing.at(0, 0) == normalize_mod1(Rat(-u * u, 12)));
}

TEST_CASE("dual coordinates and disc images") {
  auto l = standard_lattice("kummer(5)");
  DiscriminantGroup dg = discriminant_group(l);
  LatticeVector delta = lv(l, {0, 0, 0, 0, 0, 0, 1});
  Int u = disc_image(dg, delta)[0];

  // y = g'(delta) for the shipped fixture word: class 5 times the delta class
  LatticeVector y = lv(l, {-12, -12, 0, 0, 0, 0, 5});
  CHECK(divisibility(y) == 12);
  IntVec yimg = disc_image(dg, y);
  REQUIRE(yimg.size() == 1);
  CHECK(yimg[0] == mod_floor(5 * u, Int(12)));

  // dual_coords agrees with disc_image through dual_class
  CHECK(dual_coords(dg, dual_class(y)) == yimg);

  // lattice vectors land in the zero class
  CHECK(dual_coords(dg, dual_class(lv(l, {1, 0, 0, 0, 0, 0, 0}))) == iv({0}));

  // non-integral pairing is rejected
  RationalVector bad{l, RatVec(7)};
  bad.coords[6] = Rat(1, 5);
  CHECK(thrown_code([&] { dual_coords(dg, bad); }) == ErrorCode::NotIntegral);

  CHECK(thrown_code([&] { disc_image(dg, lv(l, {0, 0, 0, 0, 0, 0, 5})); }) ==
        ErrorCode::NotPrimitive);
}

TEST_CASE("induced discriminant actions") {
  auto l = standard_lattice("kummer(5)");
  DiscriminantGroup dg = discriminant_group(l);

  DiscAction id = disc_action(dg, IntMat::identity(7));
  CHECK(classify_pm1(id) == Pm1::Plus);
  CHECK(id.matrix.at(0, 0) == 1);

  IntMat neg(7, 7);
  for (int i = 0; i < 7; ++i) neg.at(i, i) = -1;
  DiscAction minus = disc_action(dg, neg);
  CHECK(classify_pm1(minus) == Pm1::Minus);
  CHECK(mod_floor(minus.matrix.at(0, 0), Int(12)) == 11);

  // the multiply-by-5 fixture word
  IntMat five{{2, 3, 0, 0, 0, 0, -12}, {3, 2, 0, 0, 0, 0, -12}, {0, 0, 1, 0, 0, 0, 0},
              {0, 0, 0, 1, 0, 0, 0},   {0, 0, 0, 0, 1, 0, 0},   {0, 0, 0, 0, 0, 1, 0},
              {-1, -1, 0, 0, 0, 0, 5}};
  DiscAction act5 = disc_action(dg, five);
  CHECK(mod_floor(act5.matrix.at(0, 0), Int(12)) == 5);
  CHECK(classify_pm1(act5) == Pm1::Other);

  CHECK(thrown_code([&] { disc_action(dg, IntMat{{2}}); }) == ErrorCode::NotIsometry);

  // homomorphism property on the cyclic group: action of the square is the
  // square of the action
  IntMat sq = five * five;
  DiscAction act25 = disc_action(dg, sq);
  CHECK(mod_floor(act25.matrix.at(0, 0), Int(12)) == mod_floor(Int(25), Int(12)));
  CHECK(classify_pm1(act25) == Pm1::Plus);  // 25 = 1 mod 12
}

TEST_CASE("classify_pm1 on handcrafted actions") {
  DiscAction a{iv({5}), IntMat{{4}}};
  CHECK(classify_pm1(a) == Pm1::Minus);
  DiscAction b{iv({5}), IntMat{{2}}};
  CHECK(classify_pm1(b) == Pm1::Other);
  DiscAction c{iv({5}), IntMat{{6}}};
  CHECK(classify_pm1(c) == Pm1::Plus);

  DiscAction two{iv({4, 4}), IntMat{{1, 0}, {0, 3}}};
  CHECK(classify_pm1(two) == Pm1::Other);  // +1 on one factor, -1 on the other
  DiscAction both{iv({2, 4}), IntMat{{1, 0}, {0, 5}}};
  CHECK(classify_pm1(both) == Pm1::Plus);
  // on 2-torsion +1 and -1 coincide, so this one is scalar after all
  DiscAction masked{iv({2, 4}), IntMat{{1, 0}, {0, 3}}};
  CHECK(classify_pm1(masked) == Pm1::Minus);
}

TEST_CASE("square roots of unity and the rank of the +-1 subgroup") {
  CHECK(count_sqrt_units(1) == 2);
  CHECK(count_sqrt_units(2) == 2);
  CHECK(count_sqrt_units(4) == 2);
  CHECK(count_sqrt_units(5) == 4);   // units 1, 5, 7, 11 mod 12
  CHECK(count_sqrt_units(14) == 4);  // 15 = 3 * 5
  CHECK(count_sqrt_units(29) == 8);  // 30 = 2 * 3 * 5

  CHECK(w_exponent(1) == 0);
  CHECK(w_exponent(5) == 1);
  CHECK(w_exponent(29) == 2);

  for (long n = 1; n <= 15; ++n) {
    long expected = 1L << (w_exponent(n) + 1);
    CHECK(count_sqrt_units(n) == expected);
  }
}

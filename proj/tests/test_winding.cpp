#include <doctest.h>

#include "windlab/invariant.hpp"
#include "windlab/winding.hpp"

using namespace windlab;

namespace {

Word W(const char* text) { return Word::parse(text); }

LaurentPoly mono(long long i, long long j, long long c) {
  return LaurentPoly::monomial(i, j, c);
}

}  // namespace

TEST_CASE("curve points") {
  LatticePath square = curve_points(W("[x,y]"));
  CHECK(square.vertices == std::vector<std::pair<long long, long long>>{
                               {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  CHECK(square.closed());
  CHECK(curve_points(Word()).vertices ==
        std::vector<std::pair<long long, long long>>{{0, 0}});
  LatticePath line = curve_points(W("x^3"));
  CHECK(line.vertices == std::vector<std::pair<long long, long long>>{
                             {0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK_FALSE(line.closed());
}

TEST_CASE("winding of the commutator square is 1") {
  CHECK(winding_invariant(W("[x,y]")) == LaurentPoly::constant(1));
  CHECK(winding_oracle(W("[x,y]")) == LaurentPoly::constant(1));
}

TEST_CASE("open paths are rejected by both winding computations") {
  CHECK_THROWS_AS(winding_invariant(W("x^3")), NotInDerivedSubgroup);
  CHECK_THROWS_AS(winding_oracle(W("xy")), NotInDerivedSubgroup);
}

TEST_CASE("trivially closed loops have zero winding") {
  Word w = W("x y^2 x^-1 y x");
  CHECK(winding_invariant(concat(w, invert(w))).is_zero());
  CHECK(winding_oracle(concat(w, invert(w))).is_zero());
  CHECK(winding_invariant(Word()).is_zero());
}

TEST_CASE("worked example from the coloring construction") {
  LaurentPoly expected;
  expected.add_term(0, 0, 1);
  expected.add_term(1, 0, 2);
  expected.add_term(0, 1, 1);
  expected.add_term(1, 1, 1);
  expected.add_term(0, 2, 1);
  expected.add_term(1, 2, 1);
  expected.add_term(-1, 3, -1);
  CHECK(winding_invariant(W("x^2 y x^-1 y^-1 x y^3 x^-3 y x y^-4")) == expected);
}

TEST_CASE("Engel windings -(Y-1)^{m-1}") {
  for (long long m = 1; m <= 12; ++m)
    CHECK(winding_invariant(engel_word(m)) == engel_winding(m));
}

TEST_CASE("basic commutator windings -(X-1)^i (Y-1)^{j-1} for i+j <= 8") {
  LaurentPoly x_minus_1 = add(mono(1, 0, 1), LaurentPoly::constant(-1));
  LaurentPoly y_minus_1 = add(mono(0, 1, 1), LaurentPoly::constant(-1));
  for (long long i = 0; i <= 7; ++i)
    for (long long j = 1; i + j <= 8; ++j) {
      LaurentPoly expected = LaurentPoly::constant(-1);
      for (long long t = 0; t < i; ++t) expected = mul(expected, x_minus_1);
      for (long long t = 0; t < j - 1; ++t) expected = mul(expected, y_minus_1);
      CHECK(winding_invariant(basic_commutator(i, j)) == expected);
      CHECK(winding_oracle(basic_commutator(i, j)) == expected);
    }
}

TEST_CASE("Morse winding product formula") {
  for (long long m = 3; m <= 8; ++m) {
    auto [u, v] = morse_words(m);
    LaurentPoly product = LaurentPoly::constant(1);
    for (long long i = 0; i <= m - 3; ++i) {
      long long e = 1LL << i;
      product = mul(product, add(LaurentPoly::constant(1), mono(e, e, -1)));
    }
    CHECK(winding_invariant(concat(u, invert(v))) == product);
  }
}

TEST_CASE("relator family windings") {
  for (long long n : {4LL, 8LL}) {
    CHECK(winding_invariant(power(W("[x,y]"), n)) == LaurentPoly::constant(n));
    Word u = W(("([x,y]y[y,x])^" + std::to_string(n) + " y^-" + std::to_string(n)).c_str());
    CHECK(winding_invariant(u) == add(LaurentPoly::constant(1), mono(0, n, -1)));
    CHECK(reduce_mod_torus(winding_invariant(u), n).is_zero());
    Word v = W(("(xyx^-1)^" + std::to_string(n) + " y^-" + std::to_string(n)).c_str());
    LaurentPoly geometric;
    for (long long j = 0; j < n; ++j) geometric.add_term(0, j, 1);
    CHECK(winding_invariant(v) == geometric);
  }
}

TEST_CASE("winding is a homomorphism on F_2'") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    Word z = random_derived_word(60, rng);
    Word w = random_derived_word(60, rng);
    CHECK(winding_invariant(concat(z, w)) ==
          add(winding_invariant(z), winding_invariant(w)));
  }
}

TEST_CASE("conjugation translates the winding") {
  SplitMix64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    Word z = random_derived_word(40, rng);
    Word u = random_word(20, rng);
    CHECK(winding_invariant(conjugate(u, z)) ==
          translate(winding_invariant(z),
                    {exponent_sum(u, Generator::x), exponent_sum(u, Generator::y)}));
  }
}

TEST_CASE("commutator formula (X^i Y^j - 1) P_z") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    Word z = random_derived_word(40, rng);
    Word u = random_word(20, rng);
    LaurentPoly factor = add(
        mono(exponent_sum(u, Generator::x), exponent_sum(u, Generator::y), 1),
        LaurentPoly::constant(-1));
    CHECK(winding_invariant(commutator(u, z)) == mul(factor, winding_invariant(z)));
  }
  // u in F_2' gives [u, z] in the kernel
  SplitMix64 rng2(59);
  for (int trial = 0; trial < 20; ++trial) {
    Word z = random_derived_word(30, rng2);
    Word u = random_derived_word(30, rng2);
    CHECK(winding_invariant(commutator(u, z)).is_zero());
  }
}

TEST_CASE("word symmetries act on windings by signed reflections") {
  // The experiments fix the normalization: a swap reflects and negates; an
  // axis inversion reflects, negates and shifts one column (resp. row).
  SplitMix64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    Word z = random_derived_word(60, rng);
    LaurentPoly p = winding_invariant(z);
    CHECK(winding_invariant(apply_symmetry(z, Symmetry::swap_xy)) ==
          negate(apply_poly_symmetry(p, Symmetry::swap_xy)));
    CHECK(winding_invariant(apply_symmetry(z, Symmetry::invert_x)) ==
          translate(negate(apply_poly_symmetry(p, Symmetry::invert_x)), {-1, 0}));
    CHECK(winding_invariant(apply_symmetry(z, Symmetry::invert_y)) ==
          translate(negate(apply_poly_symmetry(p, Symmetry::invert_y)), {0, -1}));
  }
}

TEST_CASE("squares have even windings; a^n b^n factors through a geometric sum") {
  SplitMix64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    Word z = random_derived_word(40, rng);
    LaurentPoly doubled = winding_invariant(power(z, 2));
    for (const auto& [e, c] : doubled.terms()) CHECK(c.is_even());
  }
  for (long long n : {2LL, 3LL, 4LL}) {
    for (int trial = 0; trial < 20; ++trial) {
      Word a = random_word(16, rng);
      Word ab_target = random_derived_word(20, rng);
      Word b = concat(invert(a), ab_target);  // so that ab is in F_2'
      Word z = concat(power(a, n), power(b, n));
      LaurentPoly m = mono(exponent_sum(invert(b), Generator::x),
                           exponent_sum(invert(b), Generator::y), 1);
      LaurentPoly geometric = LaurentPoly::constant(0);
      LaurentPoly mk = LaurentPoly::constant(1);
      for (long long t = 0; t < n; ++t) {
        geometric = add(geometric, mk);
        mk = mul(mk, m);
      }
      CHECK(winding_invariant(z) == mul(winding_invariant(ab_target), geometric));
      if (!(m == LaurentPoly::constant(1)))
        CHECK(divisible_by_one_minus_monomial(
            mul(winding_invariant(z),
                add(m, LaurentPoly::constant(-1))),  // (m-1) * P factors as (m^n - 1) Q
            {exponent_sum(invert(b), Generator::x) * n,
             exponent_sum(invert(b), Generator::y) * n}));
    }
  }
}

TEST_CASE("oracle equivalence on random derived words") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    Word z = random_derived_word(120, rng);
    CHECK(winding_invariant(z) == winding_oracle(z));
  }
}

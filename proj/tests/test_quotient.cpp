#include <doctest.h>

#include <algorithm>

#include "windlab/quotient.hpp"

using namespace windlab;

namespace {

Word W(const char* text) { return Word::parse(text); }

}  // namespace

TEST_CASE("the [x,y]^n lattice alone gives order n^{n^2}") {
  RelationLattice lat = build_lattice({power(W("[x,y]"), 4)}, 4);
  QuotientSummary s = quotient_order(lat);
  CHECK(s.finite);
  CHECK(s.order == BigInt::pow(4, 16));
  for (long long d : s.elementary_divisors) CHECK(d == 4);
}

TEST_CASE("no relators means an infinite quotient") {
  RelationLattice lat = build_lattice({}, 4);
  QuotientSummary s = quotient_order(lat);
  CHECK_FALSE(s.finite);
  CHECK(s.order == BigInt(0));
  CHECK_FALSE(lat.finite_quotient());
  TorusPiece piece{4, std::vector<long long>(16, 1)};
  CHECK_THROWS_AS(normal_form(lat, piece), std::invalid_argument);
}

TEST_CASE("relators must lie in F_2'") {
  CHECK_THROWS_AS(build_lattice({W("x")}, 4), NotInDerivedSubgroup);
}

TEST_CASE("the full n=4 family gives the M(2,4)' order 2^6") {
  RelationLattice lat = build_lattice(relator_family(4), 4);
  QuotientSummary s = quotient_order(lat);
  CHECK(s.finite);
  CHECK(s.order == BigInt(64));
  CHECK(s.factored.to_string() == "2^6");
  // canonical-form count: exactly 64 distinct classes among random pieces
  SplitMix64 rng(139);
  std::set<std::vector<long long>> classes;
  for (int trial = 0; trial < 5000; ++trial) {
    TorusPiece piece{4, {}};
    piece.entries.resize(16);
    for (auto& e : piece.entries) e = rng.range(-10, 10);
    classes.insert(normal_form(lat, piece).entries);
  }
  CHECK(classes.size() == 64);
}

TEST_CASE("normal forms: idempotent, linear, zero on the lattice") {
  RelationLattice lat = build_lattice(relator_family(4), 4);
  SplitMix64 rng(149);
  for (int trial = 0; trial < 50; ++trial) {
    TorusPiece a{4, {}}, b{4, {}};
    a.entries.resize(16);
    b.entries.resize(16);
    for (auto& e : a.entries) e = rng.range(-9, 9);
    for (auto& e : b.entries) e = rng.range(-9, 9);
    TorusPiece na = normal_form(lat, a);
    CHECK(normal_form(lat, na) == na);
    TorusPiece sum{4, {}};
    for (std::size_t i = 0; i < 16; ++i) sum.entries.push_back(a.entries[i] + b.entries[i]);
    TorusPiece nb = normal_form(lat, b);
    TorusPiece nn{4, {}};
    for (std::size_t i = 0; i < 16; ++i) nn.entries.push_back(na.entries[i] + nb.entries[i]);
    CHECK(normal_form(lat, sum) == normal_form(lat, nn));
  }
  for (const auto& row : lat.basis.rows)
    CHECK(normal_form(lat, TorusPiece{4, row}).is_zero());
}

TEST_CASE("HNF basis does not depend on relator order") {
  auto family = relator_family(4);
  RelationLattice lat1 = build_lattice(family, 4);
  std::reverse(family.begin(), family.end());
  RelationLattice lat2 = build_lattice(family, 4);
  CHECK(lat1.basis.rows == lat2.basis.rows);
}

TEST_CASE("swapping x and y in a partial family preserves the quotient order") {
  std::vector<Word> partial{power(W("[x,y]"), 4),
                            W("([x,y]y[y,x])^4 y^-4"),
                            W("(xyx^-1)^4 y^-4"),
                            W("x^4 (x^-1 y)^4 y^-4")};
  std::vector<Word> swapped;
  for (const Word& w : partial) swapped.push_back(apply_symmetry(w, Symmetry::swap_xy));
  QuotientSummary a = quotient_order(build_lattice(partial, 4));
  QuotientSummary b = quotient_order(build_lattice(swapped, 4));
  CHECK(a.order == b.order);
  CHECK(a.elementary_divisors == b.elementary_divisors);
}

TEST_CASE("power products reduce to zero in the n=4 lattice") {
  RelationLattice lat = build_lattice(relator_family(4), 4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Word z = random_nth_power_product(4, 1 + seed % 3, 8, seed * 17 + 5);
    CHECK(normal_form(lat, reduce_mod_torus(winding_invariant(z), 4)).is_zero());
  }
}

TEST_CASE("the n=8 family gives order 2^71, strictly above |M(2,8)'| = 2^57") {
  RelationLattice lat = build_lattice(relator_family(8), 8);
  QuotientSummary s = quotient_order(lat);
  CHECK(s.finite);
  CHECK(s.order == BigInt::pow(2, 71));
  CHECK(s.factored.to_string() == "2^71");
  // Since the lattice is coarser than the full relation module (index 2^14
  // inside it), some 8th-power products do not reduce to zero; witness one.
  bool found_escape = false;
  for (std::uint64_t seed = 0; seed < 20 && !found_escape; ++seed) {
    Word z = random_nth_power_product(8, 1 + seed % 3, 10, seed * 613 + 11);
    found_escape =
        !normal_form(lat, reduce_mod_torus(winding_invariant(z), 8)).is_zero();
  }
  CHECK(found_escape);
}

TEST_CASE("the n=16 lattice (flagged large job) computes in seconds") {
  RelationLattice lat = build_lattice(relator_family(16), 16);
  QuotientSummary s = quotient_order(lat);
  CHECK(s.finite);
  CHECK(s.factored.to_string() == "2^616");
  // membership certificate: every generator (each relator piece and a sample
  // of its translates) must reduce to zero against the basis
  for (const Word& w : relator_family(16)) {
    TorusPiece piece = reduce_mod_torus(winding_invariant(w), 16);
    CHECK(normal_form(lat, piece).is_zero());
    for (long long di : {1LL, 7LL})
      for (long long dj : {3LL, 12LL}) {
        TorusPiece shifted{16, std::vector<long long>(256, 0)};
        for (long long a = 0; a < 16; ++a)
          for (long long b = 0; b < 16; ++b)
            shifted.at((a + di) % 16, (b + dj) % 16) = piece.at(a, b);
        CHECK(normal_form(lat, shifted).is_zero());
      }
  }
  // HNF pivot product and SNF divisor product are two routes to the index
  BigInt pivot_product = 1;
  for (std::size_t r = 0; r < lat.basis.rows.size(); ++r)
    pivot_product *= BigInt(lat.basis.rows[r][lat.basis.pivot_cols[r]]);
  CHECK(pivot_product == s.order);
}

TEST_CASE("normal-form word-problem decider") {
  CHECK(m24_word_problem_nf(W("x^4")));
  CHECK(m24_word_problem_nf(engel_word(5)));
  CHECK_FALSE(m24_word_problem_nf(W("[x,y]^2")));
  CHECK_FALSE(m24_word_problem_nf(W("y")));
  SplitMix64 rng(151);
  for (int trial = 0; trial < 300; ++trial) {
    Word u = trial % 4 == 0 ? random_nth_power_product(4, 1 + rng.below(2), 6, rng.next())
                            : random_word(static_cast<long long>(rng.below(61)), rng);
    CHECK(m24_word_problem_nf(u) == m24_is_trivial(u));
  }
}

TEST_CASE("closed-form bounds") {
  auto find = [](const ClosedFormBounds& b, const std::string& name) {
    for (const auto& e : b.entries)
      if (e.name == name) return e;
    REQUIRE(false);
    return b.entries.front();
  };
  ClosedFormBounds b44 = closed_form_bounds(2, 4);
  CHECK(find(b44, "newman_upper").value == BigInt::pow(4, 19));
  CHECK(find(b44, "newman_lower").value == BigInt::pow(2, 1 + 2 * 1 + 4));
  CHECK(find(b44, "window_upper").value == BigInt::pow(4, 9));
  CHECK_FALSE(find(b44, "invariant_family_lower").applicable);  // needs k >= 3

  ClosedFormBounds b48 = closed_form_bounds(2, 8);
  CHECK(find(b48, "invariant_family_lower").value == BigInt::pow(2, 25));
  CHECK(find(b48, "power2_range_lower").value ==
        BigInt(64) * BigInt::pow(2, 15));
  CHECK(find(b48, "power2_range_upper").value == BigInt::pow(8, 67));

  ClosedFormBounds b16 = closed_form_bounds(2, 16);
  CHECK(find(b16, "invariant_family_lower").value == BigInt::pow(2, 87));
  bool has_published = false;
  for (const auto& e : b16.entries) has_published = has_published || e.name == "published_range";
  CHECK(has_published);

  ClosedFormBounds b63 = closed_form_bounds(3, 6);
  CHECK_FALSE(find(b63, "newman_lower").applicable);  // 6 is not a prime power

  CHECK(closed_form_bounds(2, 8, 2).k == 3);  // k inferred from n = p^k
  CHECK_THROWS_AS(closed_form_bounds(2, 8, 3), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_bounds(2, 8, 2, 4), std::invalid_argument);
}

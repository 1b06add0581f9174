#include <doctest.h>

#include <algorithm>

#include "windlab/intmat.hpp"
#include "windlab/prng.hpp"

using namespace windlab;

namespace {

IntMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                        long long range) {
  IntMatrix m(rows, IntRow(cols));
  for (auto& r : m)
    for (auto& e : r) e = rng.range(-range, range);
  return m;
}

long long product(const std::vector<long long>& v) {
  long long p = 1;
  for (long long d : v) p *= d;
  return p;
}

}  // namespace

TEST_CASE("HNF basics") {
  // {(2,0), (0,4), (1,2)} spans the index-4 lattice with basis {(1,2), (0,4)}
  HermiteForm h = hermite_normal_form({{2, 0}, {0, 4}, {1, 2}}, 2);
  CHECK(h.full_rank());
  CHECK(h.rows == IntMatrix{{1, 2}, {0, 4}});
  CHECK(h.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(h.contains({1, 2}));
  CHECK(h.contains({2, 0}));
  CHECK(h.contains({0, 4}));
  CHECK_FALSE(h.contains({1, 0}));
  CHECK_FALSE(h.contains({0, 2}));
  CHECK(h.reduce({1, 2}) == IntRow{0, 0});
  CHECK(h.reduce({3, 2}) == IntRow{0, 0});  // (3,2) = (1,2) + (2,0)
}

TEST_CASE("HNF is canonical: row order and row operations do not matter") {
  SplitMix64 rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 5, 4, 9);
    HermiteForm h1 = hermite_normal_form(m, 4);
    std::reverse(m.begin(), m.end());
    // add one row to another: same lattice
    for (std::size_t c = 0; c < 4; ++c) m[0][c] += m[1][c];
    HermiteForm h2 = hermite_normal_form(m, 4);
    CHECK(h1.rows == h2.rows);
    CHECK(h1.pivot_cols == h2.pivot_cols);
  }
}

TEST_CASE("HNF reduce is idempotent and constant on cosets") {
  SplitMix64 rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 6, 4, 9);
    HermiteForm h = hermite_normal_form(m, 4);
    IntRow v{rng.range(-20, 20), rng.range(-20, 20), rng.range(-20, 20), rng.range(-20, 20)};
    IntRow r = h.reduce(v);
    CHECK(h.reduce(r) == r);
    // shift v by a random lattice combination
    IntRow shifted = v;
    for (const auto& row : h.rows) {
      long long coeff = rng.range(-3, 3);
      for (std::size_t c = 0; c < 4; ++c) shifted[c] += coeff * row[c];
    }
    CHECK(h.reduce(shifted) == r);
  }
}

TEST_CASE("SNF divisors: known cases") {
  CHECK(smith_normal_form({{2, 0}, {0, 3}}) == std::vector<long long>{1, 6});
  CHECK(smith_normal_form({{1, 0}, {0, 1}}) == std::vector<long long>{1, 1});
  CHECK(smith_normal_form({{4}}) == std::vector<long long>{4});
  CHECK(smith_normal_form({{0, 0}, {0, 0}}) == std::vector<long long>{0, 0});
  CHECK(smith_normal_form({{2, 4}, {4, 8}}) == std::vector<long long>{2, 0});
  // divisibility chain
  SplitMix64 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    auto d = smith_normal_form(random_matrix(rng, 4, 5, 12));
    for (std::size_t i = 1; i < d.size(); ++i)
      if (d[i - 1] != 0 && d[i] != 0) CHECK(d[i] % d[i - 1] == 0);
  }
}

TEST_CASE("SNF divisor product equals HNF pivot product (full-rank lattices)") {
  SplitMix64 rng(113);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 6, 4, 7);
    HermiteForm h = hermite_normal_form(m, 4);
    if (!h.full_rank()) continue;
    long long pivot_product = 1;
    for (std::size_t r = 0; r < h.rows.size(); ++r)
      pivot_product *= h.rows[r][h.pivot_cols[r]];
    CHECK(product(smith_normal_form(m)) == pivot_product);
  }
}

TEST_CASE("mod-m HNF agrees with the generic route on lattices containing mZ^c") {
  SplitMix64 rng(163);
  for (int trial = 0; trial < 50; ++trial) {
    long long m = std::vector<long long>{2, 4, 8, 16}[rng.below(4)];
    IntMatrix rows = random_matrix(rng, 5, 4, 2 * m);
    IntMatrix with_units = rows;
    for (std::size_t c = 0; c < 4; ++c) {
      IntRow unit(4, 0);
      unit[c] = m;
      with_units.push_back(std::move(unit));
    }
    HermiteForm generic = hermite_normal_form(with_units, 4);
    HermiteForm modded = hermite_normal_form_mod(rows, 4, m);
    CHECK(generic.rows == modded.rows);
    CHECK(generic.pivot_cols == modded.pivot_cols);
  }
}

TEST_CASE("SNF is invariant under row operations") {
  SplitMix64 rng(127);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4, 9);
    auto d1 = smith_normal_form(m);
    std::swap(m[0], m[2]);
    for (auto& e : m[1]) e = -e;
    for (std::size_t c = 0; c < 4; ++c) m[3][c] += 2 * m[0][c];
    CHECK(smith_normal_form(m) == d1);
  }
}

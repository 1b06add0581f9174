#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "windlab/coloring.hpp"
#include "windlab/invariant.hpp"
#include "windlab/laurent.hpp"
#include "windlab/prng.hpp"
#include "windlab/quotient.hpp"
#include "windlab/subgroup.hpp"
#include "windlab/winding.hpp"
#include "windlab/word.hpp"

namespace windlab {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

/// Collects failures; a check passes when nothing was flagged.
class Expector {
 public:
  void expect(bool condition, const std::string& message) {
    if (!condition) {
      pass_ = false;
      if (!detail_.empty()) detail_ += "; ";
      detail_ += message;
    }
  }

  bool pass() const { return pass_; }
  const std::string& detail() const { return detail_; }

 private:
  bool pass_ = true;
  std::string detail_;
};

inline std::string show(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// the acceptance checks; each corresponds to one criterion of the suite
// ---------------------------------------------------------------------------

inline CheckResult check_winding_golden() {
  detail::Expector ex;
  ex.expect(winding_invariant(Word::parse("[x,y]")) == LaurentPoly::constant(1),
            "W([x,y]) != 1");

  LaurentPoly expected;  // Example: z = x^2 y x^-1 y^-1 x y^3 x^-3 y x y^-4
  expected.add_term(0, 0, 1);
  expected.add_term(1, 0, 2);
  expected.add_term(0, 1, 1);
  expected.add_term(1, 1, 1);
  expected.add_term(0, 2, 1);
  expected.add_term(1, 2, 1);
  expected.add_term(-1, 3, -1);
  ex.expect(winding_invariant(Word::parse("x^2 y x^-1 y^-1 x y^3 x^-3 y x y^-4")) ==
                expected,
            "golden example winding mismatch");

  for (long long m = 1; m <= 10; ++m)
    ex.expect(winding_invariant(engel_word(m)) == engel_winding(m),
              "W(e_" + std::to_string(m) + ") != -(Y-1)^" + std::to_string(m - 1));

  for (long long m = 3; m <= 8; ++m) {
    auto [u, v] = morse_words(m);
    LaurentPoly product = LaurentPoly::constant(1);
    for (long long i = 0; i <= m - 3; ++i) {
      long long e = 1LL << i;
      product = mul(product, add(LaurentPoly::constant(1), LaurentPoly::monomial(e, e, -1)));
    }
    ex.expect(winding_invariant(concat(u, invert(v))) == product,
              "Morse product formula fails at m=" + std::to_string(m));
  }
  return {"winding golden values", ex.pass(), ex.detail()};
}

inline CheckResult check_winding_oracle() {
  detail::Expector ex;
  SplitMix64 rng(20240817);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_derived_word(200, rng);
    if (!(winding_invariant(w) == winding_oracle(w))) {
      ex.expect(false, "oracle mismatch on trial " + std::to_string(trial) + ": " +
                           to_string(w, true));
      break;
    }
  }
  return {"winding oracle equivalence (500 random words)", ex.pass(), ex.detail()};
}

inline CheckResult check_worked_example() {
  detail::Expector ex;
  InvariantSpec spec{4, 0, 1, {0, 0}, standard_coloring(0, 4)};
  long long v = lambda_value(spec, Word::parse("x^2 y x^-1 y^-1 x y^3 x^-3 y x y^-4"));
  ex.expect(v == 0, "Lambda(z) = " + std::to_string(v) + ", expected 0 in Z_4");
  return {"worked example Lambda value", ex.pass(), ex.detail()};
}

inline CheckResult check_power_product_vanishing() {
  detail::Expector ex;
  // every good coloring's horizontal invariant kills n-th power products
  for (long long n : {4LL, 8LL, 16LL}) {
    auto colorings = enumerate_good_colorings(n);
    for (std::uint64_t seed = 0; seed < 200 && ex.pass(); ++seed) {
      Word z = random_nth_power_product(n, 1 + seed % 3, 8, seed * 977 + n);
      LaurentPoly p = winding_invariant(z);
      for (const auto& c : colorings) {
        InvariantSpec spec{n, 0, 1, {0, 0}, c};
        if (lambda_value(spec, p) != 0) {
          ex.expect(false, "nonzero h-invariant at n=" + std::to_string(n) +
                               ", seed=" + std::to_string(seed));
          break;
        }
      }
    }
  }
  // general odd-slope invariants with translation
  for (long long n : {4LL, 8LL}) {
    for (std::uint64_t seed = 0; seed < 100 && ex.pass(); ++seed) {
      SplitMix64 rng(seed * 31 + n);
      std::vector<CellColor> colors(static_cast<std::size_t>(n));
      for (long long a = 0; a < n / 2; ++a) {
        CellColor c = rng.next() & 1 ? CellColor::black : CellColor::white;
        colors[static_cast<std::size_t>(a)] = c;
        colors[static_cast<std::size_t>(a + n / 2)] =
            c == CellColor::black ? CellColor::white : CellColor::black;
      }
      InvariantSpec spec{n, 2 * rng.range(0, n / 2 - 1) + 1, 2 * rng.range(0, n / 2 - 1) + 1,
                         {rng.range(-8, 8), rng.range(-8, 8)},
                         TwoColoring(n, std::move(colors))};
      Word z = random_nth_power_product(n, 1 + seed % 3, 8, seed * 1009 + 7 * n);
      long long v = lambda_value(spec, z);
      ex.expect(v == 0, "nonzero Lambda at n=" + std::to_string(n) +
                            ", seed=" + std::to_string(seed) + ": " + std::to_string(v));
    }
  }
  // p = 3, n = 9: vanishing holds mod n/p
  for (std::uint64_t seed = 0; seed < 100 && ex.pass(); ++seed) {
    SplitMix64 rng(seed * 131 + 9);
    std::vector<long long> colors(9);
    for (long long a = 0; a < 6; ++a) colors[static_cast<std::size_t>(a)] = rng.range(0, 8);
    for (long long a = 0; a < 3; ++a)
      colors[static_cast<std::size_t>(a + 6)] =
          floor_mod(-colors[static_cast<std::size_t>(a)] -
                        colors[static_cast<std::size_t>(a + 3)],
                    9);
    long long units[6] = {1, 2, 4, 5, 7, 8};
    InvariantSpec spec{9, units[rng.below(6)], units[rng.below(6)],
                       {rng.range(-8, 8), rng.range(-8, 8)},
                       PGoodColoring(3, 9, std::move(colors))};
    Word z = random_nth_power_product(9, 1 + seed % 2, 6, seed * 59 + 3);
    long long v = lambda_value(spec, z);
    ex.expect(v % 3 == 0, "Lambda not divisible by 3 at seed " + std::to_string(seed) +
                              ": " + std::to_string(v));
  }
  // ... and the recorded witness that mod-n vanishing can fail for p-good
  // colorings: c = (0,1,0,3) on Z_4, phi = (1,1)
  InvariantSpec witness{4, 1, 1, {0, 0}, PGoodColoring(2, 4, {0, 1, 0, 3})};
  long long wv = lambda_value(witness, Word::parse("x^4 (x^-1 y)^4 y^-4"));
  ex.expect(wv == 2, "p-good witness value " + std::to_string(wv) + ", expected 2");
  return {"n-th power products vanish under the invariant families", ex.pass(), ex.detail()};
}

inline CheckResult check_half_power() {
  detail::Expector ex;
  for (long long n : {4LL, 8LL, 16LL}) {
    long long v = lambda_value(horizontal_spec(0, n), power(Word::parse("[x,y]"), n / 2));
    ex.expect(v == n / 2, "h^0([x,y]^{n/2}) = " + std::to_string(v) + " at n=" +
                              std::to_string(n));
    ex.expect(v != 0, "h^0([x,y]^{n/2}) vanished at n=" + std::to_string(n));
  }
  Word sq = power(Word::parse("[x,y]"), 2);
  ex.expect(!m24_is_trivial(sq), "[x,y]^2 misclassified by the invariant decider");
  ex.expect(!m24_word_problem_nf(sq), "[x,y]^2 misclassified by the normal-form decider");
  return {"[x,y]^{n/2} is not a product of n-th powers", ex.pass(), ex.detail()};
}

inline CheckResult check_engel() {
  detail::Expector ex;
  ex.expect(binomial(8, 4) == BigInt(70), "C(8,4) != 70");
  ex.expect(binomial(16, 8) == BigInt(12870), "C(16,8) != 12870");
  for (long long n : {8LL, 16LL}) {
    long long expected = (binomial(static_cast<unsigned long long>(n),
                                   static_cast<unsigned long long>(n / 2)) -
                          BigInt(2))
                             .mod(n);
    long long got = lambda_value(horizontal_spec(0, n), engel_word(n + 1));
    ex.expect(got == expected, "h^0(e_" + std::to_string(n + 1) + ") = " +
                                   std::to_string(got) + ", expected " +
                                   std::to_string(expected));
  }
  ex.expect(lambda_value(horizontal_spec(0, 16), engel_winding(25)) == 8,
            "h^0(e_25) != 8 in Z_16");
  ex.expect(engel_gamma_report(8).vanishing_index == 10, "Omega(e_j) at n=8 not first zero at j=10");
  ex.expect(engel_gamma_report(16).vanishing_index == 26,
            "Omega(e_j) at n=16 not first zero at j=26");
  ex.expect(!omega_of_poly(engel_winding(25), 16).is_zero(), "Omega(e_25) = 0 at n=16");
  for (long long k = 2; k <= 10; ++k) {
    long long residue = binomial(1ULL << k, 1ULL << (k - 1)).mod(8);
    ex.expect(residue == 6, "C(2^" + std::to_string(k) + ", 2^" + std::to_string(k - 1) +
                                ") = " + std::to_string(residue) + " mod 8, expected 6");
  }
  return {"Engel identity values", ex.pass(), ex.detail()};
}

inline CheckResult check_morse() {
  detail::Expector ex;
  for (long long k : {2LL, 3LL, 4LL}) {
    MorseReport r = morse_report(k);
    ex.expect(r.divisibility_certificate,
              "no divisibility certificate at k=" + std::to_string(k));
    ex.expect(r.h0_minus_h1 == 2, "h^0 - h^1 = " + std::to_string(r.h0_minus_h1) +
                                      " at k=" + std::to_string(k) + ", expected 2");
    ex.expect(r.violation_certificate, "Omega vanished at level k+1, k=" + std::to_string(k));
  }
  return {"Morse identity certificates (k = 2, 3, 4)", ex.pass(), ex.detail()};
}

inline CheckResult check_image_orders() {
  detail::Expector ex;
  for (long long n : {4LL, 8LL}) {
    BigInt expected_omega =
        BigInt(2) * BigInt::pow(BigInt(n / 2), static_cast<unsigned long long>(n));
    ex.expect(omega_image_order(n) == expected_omega,
              "Omega image order mismatch at n=" + std::to_string(n));
    BigInt expected_bar = BigInt::pow(BigInt(n / 2), static_cast<unsigned long long>(n + 1));
    ex.expect(omega_bar_image_order(n) == expected_bar,
              "Omega-bar image order mismatch at n=" + std::to_string(n));
  }
  // BFS closure cross-check at n = 4
  ex.expect(bfs_subgroup_order({4, 4, omega_image_generators(4)}) == omega_image_order(4),
            "BFS cross-check failed for Omega image at n=4");
  {
    std::vector<std::vector<long long>> gens;
    for (auto& g : omega_image_generators(4)) {
      std::vector<long long> v{2};
      v.insert(v.end(), g.begin(), g.end());
      gens.push_back(std::move(v));
    }
    ex.expect(bfs_subgroup_order({4, 5, gens}) == omega_bar_image_order(4),
              "BFS cross-check failed for Omega-bar image at n=4");
  }
  // corollary at n = 16: (n/2)^{n+1} * n^2 = 2^59
  ex.expect(BigInt::pow(BigInt(8), 17) * BigInt(256) == BigInt::pow(2, 59),
            "(n/2)^{n+1} * n^2 != 2^59 at n=16");
  return {"Omega image orders 2(n/2)^n and (n/2)^{n+1}", ex.pass(), ex.detail()};
}

inline CheckResult check_m24_sandwich() {
  detail::Expector ex;
  BigInt tilde_order = omega_tilde_image_order_full().order;
  ex.expect(tilde_order == BigInt(64),
            "Omega-tilde image order " + tilde_order.to_string() + ", expected 64");
  QuotientSummary q = quotient_order(build_lattice(relator_family(4), 4));
  ex.expect(q.finite, "n=4 quotient not finite");
  ex.expect(q.order == BigInt(64), "n=4 quotient order " + q.order.to_string());
  ex.expect(q.order == tilde_order, "sandwich certification failed: orders differ");
  // |M(2,4)| = |M(2,4)'| * n^2 = 2^6 * 2^4 = 2^10
  ex.expect(q.order * BigInt(16) == BigInt(1024), "|M(2,4)| != 2^10");
  SplitMix64 rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    Word u = trial % 5 == 0 ? random_nth_power_product(4, 1 + rng.below(2), 6, rng.next())
                            : random_word(static_cast<long long>(rng.below(61)), rng);
    if (m24_is_trivial(u) != m24_word_problem_nf(u)) {
      ex.expect(false, "deciders disagree on " + to_string(u, true));
      break;
    }
  }
  return {"M(2,4) sandwich: image order = quotient order = 2^6, deciders agree",
          ex.pass(), ex.detail()};
}

inline CheckResult check_quotient_n8() {
  detail::Expector ex;
  RelationLattice lat = build_lattice(relator_family(8), 8);
  QuotientSummary q = quotient_order(lat);
  ex.expect(q.finite, "n=8 quotient not finite");
  long long two_exponent = q.order.trailing_twos();
  ex.expect(two_exponent >= 57, "n=8 quotient order has 2-adic valuation " +
                                    std::to_string(two_exponent) + " < 57");
  int reduced_to_zero = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Word z = random_nth_power_product(8, 1 + seed % 3, 10, seed * 613 + 11);
    TorusPiece nf = normal_form(lat, reduce_mod_torus(winding_invariant(z), 8));
    if (nf.is_zero()) ++reduced_to_zero;
  }
  ex.expect(reduced_to_zero == 100,
            std::to_string(reduced_to_zero) +
                "/100 power-product windings reduced to zero; the computed quotient "
                "order 2^" +
                std::to_string(two_exponent) +
                " exceeds |M(2,8)'| = 2^57, i.e. the five-relator lattice is strictly "
                "coarser than the full relation module at n=8, so generic 8th-power "
                "products genuinely fall outside it");
  return {"n=8 quotient: order divisible by 2^57 (computed 2^" +
              std::to_string(two_exponent) + "), power products reduce to 0",
          ex.pass(), ex.detail()};
}

inline CheckResult check_restricted_burnside() {
  detail::Expector ex;
  RestrictedBurnsideReport r = restricted_burnside_bound();
  ex.expect(r.omega_z == std::vector<long long>({4, 0, 0, 4, 4, 0, 0, 4}),
            "Omega(z) = " + detail::show(r.omega_z));
  ex.expect(r.tuples_match_published, "conjugate tuples differ from the published nine");
  ex.expect(r.schreier_rank == 4097, "Schreier rank != 4097");
  ex.expect(r.base_exponent == 4109, "base exponent != 4109 (12 + 4097)");
  ex.expect(r.subgroup_order_log2 == 6,
            "conjugate-tuple subgroup order is 2^" + std::to_string(r.subgroup_order_log2) +
                ", published value is 2^6 (recomputation gives 2^5: the h- and v-block "
                "coefficient parities are coupled, so the nine tuples span rank 5)");
  ex.expect(r.total_exponent == 4115,
            "final bound is 2^" + std::to_string(r.total_exponent) +
                ", published value is 2^4115");
  return {"R(2,8) pipeline: Omega tuple, conjugate subgroup order, 2^4115 bound",
          ex.pass(), ex.detail()};
}

inline CheckResult check_order_bound_family() {
  detail::Expector ex;
  auto orbits = translation_orbits(8);  // validates orbit sizes internally
  ex.expect(orbits.size() == 4, "expected 4 orbits at n=8");
  OrderBoundImageReport r = order_bound_image_check(8);
  ex.expect(r.family_size == 8, "family size " + std::to_string(r.family_size));
  ex.expect(r.meets_bound, "psi image order " + r.image_order.to_string() +
                               " below bound " + r.lower_bound.to_string());
  for (std::size_t choice : {3u, 7u}) {
    OrderBoundImageReport alt = order_bound_image_check(8, choice);
    ex.expect(alt.image_order == r.image_order,
              "image order depends on the orbit representatives (choice " +
                  std::to_string(choice) + ")");
  }
  return {"psi-family at n=8: orbit structure and image order >= 2^4", ex.pass(),
          ex.detail()};
}

inline CheckResult check_basic_commutators() {
  detail::Expector ex;
  for (long long n : {8LL, 16LL}) {
    BasicCommutatorReport r = basic_commutator_report(n);
    ex.expect(r.all_equal_expected, "basic commutator values at n=" + std::to_string(n) +
                                        " differ from C(n,n/2)-2: " + detail::show(r.values));
    ex.expect(r.none_divisible_by_8,
              "some basic commutator invariant is divisible by 8 at n=" + std::to_string(n));
  }
  return {"basic commutators of weight n+2 are nontrivial (n = 8, 16)", ex.pass(),
          ex.detail()};
}

inline CheckResult check_n2n() {
  detail::Expector ex;
  for (long long n : {4LL, 6LL, 8LL}) {
    ex.expect(n2n_is_trivial(power(Word::parse("[x,y]"), n / 2), n),
              "[x,y]^{n/2} not trivial in N(2," + std::to_string(n) + ")");
    ex.expect(area(power(Word::parse("[x,y]"), n)) == BigInt(n),
              "A([x,y]^n) != n at n=" + std::to_string(n));
    Word staircase = Word::parse("x^" + std::to_string(n) + " (x^-1 y)^" + std::to_string(n) +
                                 " y^-" + std::to_string(n));
    ex.expect(area(staircase) == BigInt(n * (n - 1) / 2),
              "A(x^n (x^-1 y)^n y^-n) != n(n-1)/2 at n=" + std::to_string(n));
    ex.expect(!n2n_is_trivial(Word::parse("[x,y]"), n),
              "[x,y] trivial in N(2," + std::to_string(n) + ")");
  }
  ex.expect(n2n_is_trivial(concat(Word::parse("[[x,y],x]"), power(Word::parse("[x,y]"), 6)), 6),
            "gamma_3 element times an n-th power not trivial in N(2,6)");
  return {"N(2,n) decider and area formulas", ex.pass(), ex.detail()};
}

// ---------------------------------------------------------------------------
// the runner
// ---------------------------------------------------------------------------

struct NamedCheck {
  std::string id;
  CheckResult (*run)();
};

inline const std::vector<NamedCheck>& acceptance_checks() {
  static const std::vector<NamedCheck> checks = {
      {"winding-golden", check_winding_golden},
      {"winding-oracle", check_winding_oracle},
      {"worked-example", check_worked_example},
      {"power-vanishing", check_power_product_vanishing},
      {"half-power", check_half_power},
      {"engel", check_engel},
      {"morse", check_morse},
      {"image-orders", check_image_orders},
      {"m24-sandwich", check_m24_sandwich},
      {"quotient-n8", check_quotient_n8},
      {"r28", check_restricted_burnside},
      {"order-bound-family", check_order_bound_family},
      {"basic-commutators", check_basic_commutators},
      {"n2n", check_n2n},
  };
  return checks;
}

inline unsigned verify_thread_cap() {
  if (const char* env = std::getenv("WINDLAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs the selected checks (all of them for an empty selection) on a small
/// worker pool and returns results in suite order.
inline std::vector<CheckResult> run_checks(const std::vector<std::string>& selection = {},
                                           unsigned threads = verify_thread_cap()) {
  std::vector<const NamedCheck*> chosen;
  for (const auto& check : acceptance_checks()) {
    if (selection.empty()) {
      chosen.push_back(&check);
      continue;
    }
    for (const auto& want : selection)
      if (check.id == want) {
        chosen.push_back(&check);
        break;
      }
  }
  std::vector<CheckResult> results(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= chosen.size()) return;
      auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = chosen[i]->run();
      } catch (const std::exception& e) {
        r = {chosen[i]->id, false, std::string("exception: ") + e.what()};
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results[i] = std::move(r);
    }
  };
  unsigned pool = std::min<unsigned>(threads, static_cast<unsigned>(chosen.size()));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < pool; ++t) workers.emplace_back(worker);
    for (auto& t : workers) t.join();
  }
  return results;
}

}  // namespace windlab

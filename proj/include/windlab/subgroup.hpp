#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "windlab/bigint.hpp"
#include "windlab/intmat.hpp"
#include "windlab/invariant.hpp"
#include "windlab/laurent.hpp"
#include "windlab/word.hpp"

namespace windlab {

/// Product of prime powers; the machine-readable "2^17"-style order format.
struct Factorization {
  std::vector<std::pair<long long, long long>> primes;  // (p, exponent), p ascending

  void multiply_by(long long v) {
    if (v <= 0) throw std::invalid_argument("Factorization: nonpositive factor");
    for (long long p = 2; p * p <= v; ++p)
      while (v % p == 0) {
        bump(p, 1);
        v /= p;
      }
    if (v > 1) bump(v, 1);
  }

  void bump(long long p, long long e) {
    for (auto& [q, f] : primes)
      if (q == p) {
        f += e;
        return;
      }
    primes.push_back({p, e});
    std::sort(primes.begin(), primes.end());
  }

  BigInt value() const {
    BigInt v = 1;
    for (const auto& [p, e] : primes)
      v *= BigInt::pow(BigInt(p), static_cast<unsigned long long>(e));
    return v;
  }

  std::string to_string() const {
    if (primes.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : primes) {
      if (!s.empty()) s += "*";
      s += std::to_string(p);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }
};

/// Generators of a subgroup of (Z_n)^r.
struct ResidueVectorSet {
  long long n;
  std::size_t r;
  std::vector<std::vector<long long>> generators;
};

struct SubgroupOrderResult {
  BigInt order;
  std::vector<long long> quotient_divisors;  // elementary divisors of Z^r/(L + nZ^r)
  Factorization factored;
};

/// Order of the subgroup of (Z_n)^r generated by the given vectors, computed
/// as n^r divided by |Z^r / (L + nZ^r)| where L is the integer span of lifted
/// generators: Smith normal form of the r x (k + r) matrix [G | nI].  Every
/// elementary divisor divides n, so the order is the exact product of the
/// cofactors n / d_i.
inline SubgroupOrderResult subgroup_order_full(const ResidueVectorSet& gens) {
  if (gens.n < 1) throw std::invalid_argument("subgroup_order: modulus must be >= 1");
  for (const auto& g : gens.generators)
    if (g.size() != gens.r)
      throw std::invalid_argument("subgroup_order: generator of wrong dimension");
  std::size_t r = gens.r;
  std::size_t k = gens.generators.size();
  IntMatrix m(r, IntRow(k + r, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < r; ++i) m[i][j] = gens.generators[j][i];
  for (std::size_t i = 0; i < r; ++i) m[i][k + i] = gens.n;
  std::vector<long long> divisors = smith_normal_form(std::move(m));
  SubgroupOrderResult result;
  result.order = 1;
  for (long long d : divisors) {
    if (d <= 0 || gens.n % d != 0)
      throw std::logic_error("subgroup_order: elementary divisor does not divide n");
    result.quotient_divisors.push_back(d);
    result.order *= BigInt(gens.n / d);
    if (gens.n / d > 1) result.factored.multiply_by(gens.n / d);
  }
  return result;
}

inline BigInt subgroup_order(const ResidueVectorSet& gens) {
  return subgroup_order_full(gens).order;
}

/// Independent closure oracle: breadth-first closure of {0} under addition of
/// the generators mod n.  Guarded to state spaces of at most 10^6.
inline BigInt bfs_subgroup_order(const ResidueVectorSet& gens) {
  if (gens.n < 1) throw std::invalid_argument("bfs_subgroup_order: modulus must be >= 1");
  double states = 1;
  for (std::size_t i = 0; i < gens.r; ++i) {
    states *= static_cast<double>(gens.n);
    if (states > 1e6)
      throw std::invalid_argument("bfs_subgroup_order: n^r exceeds the 10^6 guard");
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < gens.r; ++i) total *= static_cast<std::size_t>(gens.n);
  std::vector<bool> seen(total, false);
  auto encode = [&](const std::vector<long long>& v) {
    std::size_t idx = 0;
    for (long long coord : v) idx = idx * static_cast<std::size_t>(gens.n) +
                                    static_cast<std::size_t>(coord);
    return idx;
  };
  std::vector<std::vector<long long>> frontier{std::vector<long long>(gens.r, 0)};
  seen[0] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    std::vector<long long> v = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens.generators) {
      std::vector<long long> w(gens.r);
      for (std::size_t i = 0; i < gens.r; ++i) w[i] = (v[i] + g[i]) % gens.n;
      std::size_t idx = encode(w);
      if (!seen[idx]) {
        seen[idx] = true;
        ++count;
        frontier.push_back(std::move(w));
      }
    }
  }
  return BigInt(static_cast<long long>(count));
}

// ---------------------------------------------------------------------------
// image orders of the Omega-style invariants
// ---------------------------------------------------------------------------

/// Since every coordinate of Omega is linear in the piece, the Omega-values
/// of the n^2 single-square pieces X^i Y^j, 0 <= i, j < n, generate the full
/// image of Omega over all of F_2'.
inline std::vector<std::vector<long long>> omega_image_generators(long long n) {
  std::vector<std::vector<long long>> gens;
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      gens.push_back(omega_of_poly(LaurentPoly::monomial(i, j, 1), n).flatten());
  return gens;
}

inline SubgroupOrderResult omega_image_order_full(long long n) {
  require_omega_modulus(n);
  return subgroup_order_full(
      {n, static_cast<std::size_t>(n), omega_image_generators(n)});
}

inline BigInt omega_image_order(long long n) { return omega_image_order_full(n).order; }

/// Image order of Omega-bar = (area mod n/2, Omega).  The Z_{n/2} area
/// coordinate is embedded into Z_n by doubling (an injective homomorphism,
/// so the image order is unchanged) and the whole image lives in (Z_n)^{n+1}.
inline SubgroupOrderResult omega_bar_image_order_full(long long n) {
  require_omega_modulus(n);
  std::vector<std::vector<long long>> gens;
  for (auto& g : omega_image_generators(n)) {
    std::vector<long long> v;
    v.push_back(2 % n);  // doubled area of a single square
    v.insert(v.end(), g.begin(), g.end());
    gens.push_back(std::move(v));
  }
  return subgroup_order_full({n, static_cast<std::size_t>(n) + 1, gens});
}

inline BigInt omega_bar_image_order(long long n) {
  return omega_bar_image_order_full(n).order;
}

/// Image order of Omega-tilde = (Omega over Z_4, diagonal Lambda).
inline SubgroupOrderResult omega_tilde_image_order_full() {
  std::vector<std::vector<long long>> gens;
  for (long long i = 0; i < 4; ++i)
    for (long long j = 0; j < 4; ++j) {
      auto t = omega_tilde_of_poly(LaurentPoly::monomial(i, j, 1));
      gens.emplace_back(t.begin(), t.end());
    }
  return subgroup_order_full({4, 5, gens});
}

// ---------------------------------------------------------------------------
// the R(2,8) lower bound pipeline
// ---------------------------------------------------------------------------

struct RestrictedBurnsideReport {
  std::vector<long long> omega_z;                      // expected (4,0,0,4,4,0,0,4)
  std::vector<std::vector<long long>> conjugate_tuples;  // the nine 8-tuples
  bool tuples_match_published;   // against the published list of nine tuples
  BigInt subgroup_order;
  long long subgroup_order_log2;
  long long published_subgroup_order_log2;  // the paper states 2^6
  bool subgroup_order_matches_published;
  long long burnside_b24_log2;   // |B(2,4)| = 2^12
  long long schreier_rank;       // rk(F_2^4) = 1 + 2^12 = 4097
  long long base_exponent;       // |F_2 / (F_2^4)^2| = 2^4109
  long long total_exponent;      // base_exponent + subgroup_order_log2
  long long published_total_exponent;  // the paper states 4115
  BigInt bound;                  // 2^total_exponent <= |R(2,8)|
};

/// Recomputes the whole pipeline behind the R(2,8) lower bound from words:
/// Omega over Z_8 of z = (x^4 (x^-1 y)^4 y^-4)^2 and of its nine conjugates
/// x^i y^j z y^-j x^-i, the order of the subgroup of (Z_8)^8 these tuples
/// generate, and the Schreier-formula base 2^4109.  Computed values are
/// reported next to the published ones rather than assumed; the published
/// subgroup order 2^6 does not survive recomputation (the nine tuples span
/// only 2^5 because the h-block and v-block coefficient parities are
/// coupled), which the report surfaces via the mismatch flags.
inline RestrictedBurnsideReport restricted_burnside_bound() {
  const long long n = 8;
  Word t = concat(concat(power(x_word(), 4), power(concat(invert(x_word()), y_word()), 4)),
                  power(y_word(), -4));
  Word z = power(t, 2);
  RestrictedBurnsideReport report;
  report.omega_z = omega(z, n).flatten();
  std::vector<std::vector<long long>> tuples;
  for (long long i = 0; i < 3; ++i)
    for (long long j = 0; j < 3; ++j) {
      Word u = concat(power(x_word(), i), power(y_word(), j));
      tuples.push_back(omega(conjugate(u, z), n).flatten());
    }
  report.conjugate_tuples = tuples;

  const std::array<std::array<long long, 4>, 3> patterns{
      {{4, 0, 0, 4}, {4, 4, 0, 0}, {0, 4, 4, 0}}};
  std::set<std::vector<long long>> published;
  for (const auto& a : patterns)
    for (const auto& b : patterns) {
      std::vector<long long> v(a.begin(), a.end());
      v.insert(v.end(), b.begin(), b.end());
      published.insert(v);
    }
  report.tuples_match_published =
      std::set<std::vector<long long>>(tuples.begin(), tuples.end()) == published;

  auto order = subgroup_order_full({n, 8, tuples});
  report.subgroup_order = order.order;
  report.subgroup_order_log2 = order.order.trailing_twos();
  if (BigInt::pow(2, static_cast<unsigned long long>(report.subgroup_order_log2)) !=
      order.order)
    throw std::logic_error("restricted_burnside_bound: subgroup order is not a 2-power");
  report.published_subgroup_order_log2 = 6;
  report.subgroup_order_matches_published = report.subgroup_order_log2 == 6;

  report.burnside_b24_log2 = 12;
  report.schreier_rank = 1 + (1LL << 12);  // 1 + (rank(F_2) - 1) * |F_2 : F_2^4|
  report.base_exponent = report.burnside_b24_log2 + report.schreier_rank;
  report.total_exponent = report.base_exponent + report.subgroup_order_log2;
  report.published_total_exponent = 4115;
  report.bound = BigInt::pow(2, static_cast<unsigned long long>(report.total_exponent));
  return report;
}

// ---------------------------------------------------------------------------
// psi-image order for the n^2 2^{5n^2/16 - 1} lower bound
// ---------------------------------------------------------------------------

struct OrderBoundImageReport {
  long long n;
  std::size_t family_size;
  BigInt image_order;
  BigInt lower_bound;  // 2^{n^2/16}
  bool meets_bound;
};

/// Generates the psi-image restricted to even-coefficient window polynomials
/// from the psi-values of the doubled single-square pieces 2 X^i Y^j over
/// [0,n)^2 (psi is linear, and those pieces generate the even window
/// subgroup).  The image order must be at least 2^{n^2/16}.
inline OrderBoundImageReport order_bound_image_check(long long n, std::size_t rep_choice = 0) {
  if (n != 8 && n != 16)
    throw std::invalid_argument("order_bound_image_check: n must be 8 or 16 (guard)");
  std::vector<InvariantSpec> family = order_bound_family(n, rep_choice);
  std::vector<std::vector<long long>> gens;
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      gens.push_back(evaluate_family(family, LaurentPoly::monomial(i, j, 2)));
  BigInt order = subgroup_order({n, family.size(), gens});
  BigInt bound = BigInt::pow(2, static_cast<unsigned long long>(n * n / 16));
  return {n, family.size(), order, bound, order >= bound};
}

}  // namespace windlab

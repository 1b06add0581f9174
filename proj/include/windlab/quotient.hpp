#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "windlab/bigint.hpp"
#include "windlab/intmat.hpp"
#include "windlab/invariant.hpp"
#include "windlab/laurent.hpp"
#include "windlab/subgroup.hpp"
#include "windlab/winding.hpp"
#include "windlab/word.hpp"

namespace windlab {

/// HNF basis of the sublattice L of Z^{n^2} spanned by all n^2 torus
/// translates of every relator's reduced winding piece.  Z^{n^2}/L computes
/// the Laurent-ring quotient by the (computable part of the) relator ideal:
/// once 1 - X^n and 1 - Y^n are among the relator windings, reducing
/// exponents mod n loses nothing.
struct RelationLattice {
  long long n;
  std::vector<std::string> relator_names;
  HermiteForm basis;

  bool finite_quotient() const { return basis.full_rank(); }
};

inline RelationLattice build_lattice(const std::vector<Word>& relators, long long n) {
  if (n < 2) throw std::invalid_argument("build_lattice: n must be >= 2");
  RelationLattice lat;
  lat.n = n;
  IntMatrix rows;
  for (const Word& w : relators) {
    if (!in_derived_subgroup(w)) throw NotInDerivedSubgroup(w);
    lat.relator_names.push_back(to_string(w, /*fold_exponents=*/true));
    TorusPiece piece = reduce_mod_torus(winding_invariant(w), n);
    for (long long di = 0; di < n; ++di)
      for (long long dj = 0; dj < n; ++dj) {
        IntRow row(static_cast<std::size_t>(n * n), 0);
        for (long long a = 0; a < n; ++a)
          for (long long b = 0; b < n; ++b)
            row[static_cast<std::size_t>(((a + di) % n) * n + (b + dj) % n)] =
                piece.at(a, b);
        rows.push_back(std::move(row));
      }
  }
  // When the translate rows contain +-n e_k for every coordinate (the
  // [x,y]^n relator and its symmetry images provide exactly these), the
  // lattice contains nZ^{n^2} and the mod-n elimination applies; it keeps
  // every entry below n, where the generic routine can blow up at n = 16.
  std::vector<bool> covered(static_cast<std::size_t>(n * n), false);
  for (const IntRow& row : rows) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) {
        ++nonzero;
        where = c;
      }
    if (nonzero == 1 && (row[where] == n || row[where] == -n)) covered[where] = true;
  }
  bool contains_unit_multiples = true;
  for (bool b : covered) contains_unit_multiples = contains_unit_multiples && b;
  lat.basis = contains_unit_multiples
                  ? hermite_normal_form_mod(rows, static_cast<std::size_t>(n * n), n)
                  : hermite_normal_form(rows, static_cast<std::size_t>(n * n));
  return lat;
}

struct QuotientSummary {
  long long n;
  std::vector<std::string> relators;
  std::vector<long long> elementary_divisors;  // length n^2; zeros mean infinite
  bool finite;
  BigInt order;  // product of the divisors when finite
  Factorization factored;
};

/// Elementary divisors of Z^{n^2}/L and the quotient order.
inline QuotientSummary quotient_order(const RelationLattice& lat) {
  QuotientSummary summary;
  summary.n = lat.n;
  summary.relators = lat.relator_names;
  std::vector<long long> divisors = smith_normal_form(lat.basis.rows);
  divisors.resize(static_cast<std::size_t>(lat.n * lat.n), 0);
  summary.elementary_divisors = divisors;
  summary.finite = true;
  summary.order = 1;
  for (long long d : divisors) {
    if (d == 0) {
      summary.finite = false;
      continue;
    }
    summary.order *= BigInt(d);
    if (d > 1) summary.factored.multiply_by(d);
  }
  if (!summary.finite) summary.order = 0;
  return summary;
}

/// Canonical coset representative of a torus piece modulo the lattice.
/// Idempotent and constant on cosets: normal_form(a) == normal_form(b)
/// exactly when a - b lies in L.
inline TorusPiece normal_form(const RelationLattice& lat, const TorusPiece& piece) {
  if (piece.n != lat.n) throw std::invalid_argument("normal_form: modulus mismatch");
  if (!lat.finite_quotient())
    throw std::invalid_argument("normal_form: lattice quotient is not finite");
  TorusPiece out;
  out.n = piece.n;
  out.entries = lat.basis.reduce(piece.entries);
  return out;
}

/// The normal-form route to the M(2,4) word problem: exponent check mod 4,
/// then the canonical form of the winding of x^{-a} y^{-b} u must vanish.
/// Agrees with m24_is_trivial on every input; the acceptance suite
/// cross-validates the two deciders and certifies completeness by matching
/// the quotient order against the Omega-tilde image order (both 2^6).
inline bool m24_word_problem_nf(const Word& u) {
  static const RelationLattice lattice = build_lattice(relator_family(4), 4);
  long long a = exponent_sum(u, Generator::x);
  long long b = exponent_sum(u, Generator::y);
  if (floor_mod(a, 4) != 0 || floor_mod(b, 4) != 0) return false;
  Word v = concat(concat(power(x_word(), -a), power(y_word(), -b)), u);
  return normal_form(lattice, reduce_mod_torus(winding_invariant(v), 4)).is_zero();
}

// ---------------------------------------------------------------------------
// closed-form order bounds
// ---------------------------------------------------------------------------

struct BoundEntry {
  std::string name;
  std::string formula;
  bool applicable;
  BigInt value;  // zero when not applicable
  std::string note;
};

struct ClosedFormBounds {
  long long d;
  long long n;
  long long p;
  long long k;
  std::vector<BoundEntry> entries;
};

namespace detail {

inline unsigned long long pow_u64_checked(long long base, long long exp) {
  unsigned long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    unsigned long long next = r * static_cast<unsigned long long>(base);
    if (base != 0 && next / static_cast<unsigned long long>(base) != r)
      throw std::overflow_error("exponent tower too large");
    r = next;
  }
  return r;
}

}  // namespace detail

/// Exact big-integer evaluation of the closed-form order bounds, with
/// applicability flags.  Pass p = 0 / k = 0 to let the prime-power shape of n
/// be inferred.
inline ClosedFormBounds closed_form_bounds(long long d, long long n, long long p = 0,
                                           long long k = 0) {
  if (d < 1 || n < 1) throw std::invalid_argument("closed_form_bounds: d, n must be >= 1");
  if (p == 0) {
    // infer p^k = n when n is a prime power
    long long m = n;
    for (long long q = 2; q <= m; ++q)
      if (m % q == 0) {
        p = q;
        k = 0;
        while (m % q == 0) {
          m /= q;
          ++k;
        }
        if (m != 1) {
          p = 0;
          k = 0;
        }
        break;
      }
  } else {
    long long check = 1;
    long long inferred = 0;
    while (check < n) {
      check *= p;
      ++inferred;
    }
    if (check != n) throw std::invalid_argument("closed_form_bounds: n is not a power of p");
    if (k == 0) k = inferred;
    if (k != inferred) throw std::invalid_argument("closed_form_bounds: n != p^k");
  }
  ClosedFormBounds out{d, n, p, k, {}};

  {
    BoundEntry e{"newman_upper", "n^(1 + d + (d-1) n^d)", true, 0, ""};
    try {
      unsigned long long nd = detail::pow_u64_checked(n, d);
      unsigned long long exp = 1 + static_cast<unsigned long long>(d) +
                               static_cast<unsigned long long>(d - 1) * nd;
      e.value = BigInt::pow(BigInt(n), exp);
    } catch (const std::overflow_error&) {
      e.applicable = false;
      e.note = "exponent exceeds the supported range";
    }
    out.entries.push_back(std::move(e));
  }
  {
    BoundEntry e{"newman_lower", "p^(1 + d(k-1) + (d-1) p^((k-1)d))", p != 0, 0, ""};
    if (p == 0) {
      e.note = "n is not a prime power";
    } else {
      unsigned long long ptow = detail::pow_u64_checked(p, (k - 1) * d);
      unsigned long long exp = 1 + static_cast<unsigned long long>(d * (k - 1)) +
                               static_cast<unsigned long long>(d - 1) * ptow;
      e.value = BigInt::pow(BigInt(p), exp);
    }
    out.entries.push_back(std::move(e));
  }
  bool two_power = is_power_of(n, 2) && n >= 2;
  {
    BoundEntry e{"power2_range_lower", "n^2 * 2^(n^2/4 - 1)", d == 2 && two_power && n >= 4,
                 0, "rank 2, n = 2^k"};
    if (e.applicable)
      e.value = BigInt(n) * BigInt(n) *
                BigInt::pow(2, static_cast<unsigned long long>(n * n / 4 - 1));
    out.entries.push_back(std::move(e));
  }
  {
    BoundEntry e{"power2_range_upper", "n^(n^2 + 3)", d == 2 && two_power, 0,
                 "rank 2, n = 2^k"};
    if (e.applicable)
      e.value = BigInt::pow(BigInt(n), static_cast<unsigned long long>(n * n + 3));
    out.entries.push_back(std::move(e));
  }
  {
    BoundEntry e{"invariant_family_lower", "n^2 * 2^(5 n^2/16 - 1)", d == 2 && two_power && n >= 8,
                 0, "rank 2, n = 2^k, k >= 3"};
    if (e.applicable)
      e.value = BigInt(n) * BigInt(n) *
                BigInt::pow(2, static_cast<unsigned long long>(5 * n * n / 16 - 1));
    out.entries.push_back(std::move(e));
  }
  {
    BoundEntry e{"window_upper", "n^((n-1)^2)", d == 2 && n >= 3, 0, "rank 2, n >= 3"};
    if (e.applicable)
      e.value = BigInt::pow(BigInt(n), static_cast<unsigned long long>((n - 1) * (n - 1)));
    out.entries.push_back(std::move(e));
  }
  if (d == 2 && n == 16) {
    out.entries.push_back({"published_range", "2^87 <= |M(2,16)| <= 2^376", true, 0,
                           "documented range for M(2,16); the upper bound is a "
                           "published computation, not a formula evaluated here"});
  }
  return out;
}

}  // namespace windlab

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "windlab/bigint.hpp"
#include "windlab/numeric.hpp"
#include "windlab/symmetry.hpp"

namespace windlab {

/// Sparse element of Z[X^{+-1}, Y^{+-1}], a finite map from lattice points
/// (i, j) to nonzero integer coefficients.  The zero polynomial has an empty
/// support.  Terms are kept in (i, j)-lexicographic order, which makes text
/// and JSON output deterministic.
class LaurentPoly {
 public:
  using Exponent = std::pair<long long, long long>;
  using TermMap = std::map<Exponent, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly monomial(long long i, long long j, BigInt coeff) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_[{i, j}] = std::move(coeff);
    return p;
  }

  static LaurentPoly constant(BigInt c) { return monomial(0, 0, std::move(c)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  BigInt coefficient(long long i, long long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt{} : it->second;
  }

  void add_term(long long i, long long j, const BigInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  TermMap terms_;
};

inline LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e.first, e.second, c);
  return r;
}

inline LaurentPoly negate(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.first, e.second, -c);
  return r;
}

inline LaurentPoly subtract(const LaurentPoly& p, const LaurentPoly& q) {
  return add(p, negate(q));
}

inline LaurentPoly scalar_mul(const BigInt& k, const LaurentPoly& p) {
  LaurentPoly r;
  if (k.is_zero()) return r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.first, e.second, k * c);
  return r;
}

inline LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms())
      r.add_term(ep.first + eq.first, ep.second + eq.second, cp * cq);
  return r;
}

/// Multiplication by the monomial X^i Y^j: translation of the piece.
inline LaurentPoly translate(const LaurentPoly& p, std::pair<long long, long long> v) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.first + v.first, e.second + v.second, c);
  return r;
}

/// The area evaluation P(1, 1): sum of all coefficients.
inline BigInt eval_at_ones(const LaurentPoly& p) {
  BigInt s;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

/// Divisibility by 1 - X^a Y^b, tested as vanishing of the coefficient sum
/// over every coset of Z(a,b) in Z^2.  (P is divisible by 1 - m exactly when
/// P maps to zero in the quotient by the ideal (1 - m), and monomials in one
/// coset of the cyclic subgroup generated by m are identified there.)
inline bool divisible_by_one_minus_monomial(const LaurentPoly& p,
                                            std::pair<long long, long long> v) {
  auto [a, b] = v;
  if (a == 0 && b == 0)
    throw std::invalid_argument("divisible_by_one_minus_monomial: direction (0,0)");
  std::map<std::pair<long long, long long>, BigInt> coset_sums;
  for (const auto& [e, c] : p.terms()) {
    long long t = a != 0 ? floor_div(e.first, a) : floor_div(e.second, b);
    std::pair<long long, long long> key{e.first - t * a, e.second - t * b};
    coset_sums[key] += c;
  }
  for (const auto& [key, s] : coset_sums)
    if (!s.is_zero()) return false;
  return true;
}

inline LaurentPoly apply_poly_symmetry(const LaurentPoly& p, Symmetry sym) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    switch (sym) {
      case Symmetry::swap_xy:
        r.add_term(e.second, e.first, c);
        break;
      case Symmetry::invert_x:
        r.add_term(-e.first, e.second, c);
        break;
      case Symmetry::invert_y:
        r.add_term(e.first, -e.second, c);
        break;
    }
  }
  return r;
}

/// A Laurent polynomial reduced modulo X^n = 1, Y^n = 1: a dense n x n
/// integer window indexed by (i mod n, j mod n).
struct TorusPiece {
  long long n = 0;
  std::vector<long long> entries;  // size n*n, index i*n + j

  long long& at(long long i, long long j) { return entries[static_cast<std::size_t>(i * n + j)]; }
  long long at(long long i, long long j) const {
    return entries[static_cast<std::size_t>(i * n + j)];
  }
  bool is_zero() const {
    for (long long e : entries)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const TorusPiece&, const TorusPiece&) = default;
};

/// Exponent reduction mod n: entries[(i mod n, j mod n)] accumulates every
/// coefficient of that residue class.  Linear in P.
inline TorusPiece reduce_mod_torus(const LaurentPoly& p, long long n) {
  if (n < 2) throw std::invalid_argument("reduce_mod_torus: n must be >= 2");
  TorusPiece t;
  t.n = n;
  t.entries.assign(static_cast<std::size_t>(n * n), 0);
  std::vector<BigInt> acc(static_cast<std::size_t>(n * n));
  for (const auto& [e, c] : p.terms())
    acc[static_cast<std::size_t>(floor_mod(e.first, n) * n + floor_mod(e.second, n))] += c;
  for (std::size_t k = 0; k < acc.size(); ++k) t.entries[k] = acc[k].to_ll();
  return t;
}

/// Deterministic text form, terms in (i, j)-lexicographic order.
inline std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigInt mag = c.is_negative() ? -c : c;
    if (first) {
      if (c.is_negative()) out += "-";
      first = false;
    } else {
      out += c.is_negative() ? " - " : " + ";
    }
    std::string factors;
    if (e.first != 0) factors += e.first == 1 ? "X" : "X^" + std::to_string(e.first);
    if (e.second != 0) {
      if (!factors.empty()) factors += "*";
      factors += e.second == 1 ? "Y" : "Y^" + std::to_string(e.second);
    }
    if (factors.empty())
      out += mag.to_string();
    else if (mag == BigInt(1))
      out += factors;
    else
      out += mag.to_string() + "*" + factors;
  }
  return out;
}

}  // namespace windlab

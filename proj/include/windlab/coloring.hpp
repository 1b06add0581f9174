#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "windlab/numeric.hpp"

namespace windlab {

enum class CellColor { black, white };

/// Good coloring of Z_n: antipodal elements (offset n/2) get opposite colors.
/// The theorems need n to be a power of 2; the type only needs n even.
class TwoColoring {
 public:
  TwoColoring(long long n, std::vector<CellColor> colors)
      : n_(n), colors_(std::move(colors)) {
    if (n_ < 2 || n_ % 2 != 0)
      throw std::invalid_argument("TwoColoring: modulus must be even and >= 2");
    if (static_cast<long long>(colors_.size()) != n_)
      throw std::invalid_argument("TwoColoring: need exactly n colors");
    for (long long a = 0; a < n_; ++a)
      if (colors_[static_cast<std::size_t>(a)] ==
          colors_[static_cast<std::size_t>((a + n_ / 2) % n_)])
        throw std::invalid_argument("TwoColoring: not a good coloring");
  }

  long long modulus() const { return n_; }

  CellColor color(long long a) const {
    return colors_[static_cast<std::size_t>(floor_mod(a, n_))];
  }

  const std::vector<CellColor>& colors() const { return colors_; }

  friend bool operator==(const TwoColoring&, const TwoColoring&) = default;

 private:
  long long n_;
  std::vector<CellColor> colors_;
};

/// The coloring c_i: paints i, i+1, ..., i+n/2-1 with black, the rest white.
inline TwoColoring standard_coloring(long long i, long long n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("standard_coloring: n must be even");
  if (i < 0 || i > n / 2 - 1)
    throw std::out_of_range("standard_coloring: index must be in [0, n/2)");
  std::vector<CellColor> colors(static_cast<std::size_t>(n), CellColor::white);
  for (long long t = 0; t < n / 2; ++t)
    colors[static_cast<std::size_t>((i + t) % n)] = CellColor::black;
  return TwoColoring(n, std::move(colors));
}

/// All 2^{n/2} good colorings of Z_n: colors are free on [0, n/2) and forced
/// on the rest.  Guarded to keep oracle suites fast.
inline std::vector<TwoColoring> enumerate_good_colorings(long long n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("enumerate_good_colorings: n must be even");
  if (n > 24) throw std::invalid_argument("enumerate_good_colorings: n > 24 guard");
  std::vector<TwoColoring> out;
  long long half = n / 2;
  for (long long mask = 0; mask < (1LL << half); ++mask) {
    std::vector<CellColor> colors(static_cast<std::size_t>(n));
    for (long long a = 0; a < half; ++a) {
      CellColor c = (mask >> a) & 1 ? CellColor::black : CellColor::white;
      colors[static_cast<std::size_t>(a)] = c;
      colors[static_cast<std::size_t>(a + half)] =
          c == CellColor::black ? CellColor::white : CellColor::black;
    }
    out.emplace_back(n, std::move(colors));
  }
  return out;
}

/// Number of black terms minus white terms in the arithmetic progression
/// a, a+b, ..., a+(len-1)b, read in Z_n.  Plain integer, not reduced.
inline long long progression_balance(const TwoColoring& c, long long a, long long b,
                                     long long len) {
  if (len < 1) throw std::invalid_argument("progression_balance: len must be >= 1");
  long long balance = 0;
  for (long long t = 0; t < len; ++t)
    balance += c.color(a + t * b) == CellColor::black ? 1 : -1;
  return balance;
}

/// p-good coloring of Z_{p^k}: Z_n-valued, and every difference-(n/p)
/// progression of length p has color sum zero in Z_n.
class PGoodColoring {
 public:
  PGoodColoring(long long p, long long n, std::vector<long long> colors)
      : p_(p), n_(n), colors_(std::move(colors)) {
    if (p_ < 2) throw std::invalid_argument("PGoodColoring: p must be >= 2");
    for (long long d = 2; d * d <= p_; ++d)
      if (p_ % d == 0) throw std::invalid_argument("PGoodColoring: p must be prime");
    if (!is_power_of(n_, p_))
      throw std::invalid_argument("PGoodColoring: n must be a power of p");
    if (static_cast<long long>(colors_.size()) != n_)
      throw std::invalid_argument("PGoodColoring: need exactly n colors");
    for (long long& c : colors_) c = floor_mod(c, n_);
    long long step = n_ / p_;
    for (long long a = 0; a < step; ++a) {
      long long sum = 0;
      for (long long t = 0; t < p_; ++t) sum += colors_[static_cast<std::size_t>(a + t * step)];
      if (sum % n_ != 0)
        throw std::invalid_argument("PGoodColoring: progression sums do not vanish mod n");
    }
  }

  long long p() const { return p_; }
  long long modulus() const { return n_; }

  long long color(long long a) const {
    return colors_[static_cast<std::size_t>(floor_mod(a, n_))];
  }

  const std::vector<long long>& colors() const { return colors_; }

  friend bool operator==(const PGoodColoring&, const PGoodColoring&) = default;

 private:
  long long p_;
  long long n_;
  std::vector<long long> colors_;
};

/// Sum of colors over the progression a, a+b, ..., a+(len-1)b, mod n.
inline long long p_good_progression_sum(const PGoodColoring& c, long long a, long long b,
                                        long long len) {
  if (len < 1) throw std::invalid_argument("p_good_progression_sum: len must be >= 1");
  long long sum = 0;
  for (long long t = 0; t < len; ++t) sum = floor_mod(sum + c.color(a + t * b), c.modulus());
  return sum;
}

/// Partition of [0, n) into arithmetic progressions of p terms and common
/// difference d; exists exactly when pd divides n.  Returns failure
/// (nullopt) otherwise.  The returned partition is validated exhaustively.
inline std::optional<std::vector<std::vector<long long>>> matching_oracle(long long n,
                                                                          long long d,
                                                                          long long p = 2) {
  if (n < 1 || d < 1 || p < 2) throw std::invalid_argument("matching_oracle: bad arguments");
  if (n % (p * d) != 0) return std::nullopt;
  std::vector<std::vector<long long>> parts;
  for (long long block = 0; block < n; block += p * d)
    for (long long i = 0; i < d; ++i) {
      std::vector<long long> part;
      for (long long t = 0; t < p; ++t) part.push_back(block + i + t * d);
      parts.push_back(std::move(part));
    }
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (const auto& part : parts)
    for (long long v : part) {
      if (v < 0 || v >= n || covered[static_cast<std::size_t>(v)])
        throw std::logic_error("matching_oracle: invalid partition");
      covered[static_cast<std::size_t>(v)] = true;
    }
  for (bool b : covered)
    if (!b) throw std::logic_error("matching_oracle: partition does not cover [0, n)");
  return parts;
}

}  // namespace windlab

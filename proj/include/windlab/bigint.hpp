#pragma once

#include <cstdint>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace windlab {

/// Arbitrary-precision signed integer, sign + little-endian base-2^32 magnitude.
///
/// Supports exactly the arithmetic this project needs: ring operations,
/// comparison, powers, division by machine-word divisors (for decimal output
/// and residue reduction) and exact binomial coefficients.  There is no
/// general big/big division; no caller requires it.
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT(google-explicit-constructor): numeric literal convenience
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // two's-complement-safe magnitude, including LLONG_MIN
    unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (m != 0) {
      mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt{};
      const BigInt& big = c > 0 ? a : b;
      const BigInt& small = c > 0 ? b : a;
      r.mag_ = sub_mag(big.mag_, small.mag_);
      r.sign_ = big.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                            r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      std::size_t k = i + b.mag_.size();
      while (carry != 0) {
        std::uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }

  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
    return c <=> 0;
  }

  static BigInt pow(const BigInt& base, unsigned long long exp) {
    BigInt r = 1, b = base;
    while (exp != 0) {
      if (exp & 1ULL) r *= b;
      exp >>= 1;
      if (exp != 0) b *= b;
    }
    return r;
  }

  /// Truncated division (quotient toward zero, remainder with the sign of
  /// the dividend).  Binary shift-subtract over the magnitudes.
  std::pair<BigInt, BigInt> divmod(const BigInt& d) const {
    if (d.sign_ == 0) throw std::invalid_argument("BigInt: division by zero");
    if (cmp_mag(mag_, d.mag_) < 0) return {BigInt{}, *this};
    BigInt q, r;
    std::size_t bits = mag_.size() * 32;
    q.mag_.assign(mag_.size(), 0);
    for (std::size_t bit = bits; bit-- > 0;) {
      // r = 2r + bit(a, bit)
      std::uint32_t carry = (mag_[bit / 32] >> (bit % 32)) & 1u;
      for (std::size_t i = 0; i < r.mag_.size(); ++i) {
        std::uint32_t next = r.mag_[i] >> 31;
        r.mag_[i] = (r.mag_[i] << 1) | carry;
        carry = next;
      }
      if (carry != 0) r.mag_.push_back(carry);
      if (cmp_mag(r.mag_, d.mag_) >= 0) {
        r.mag_ = sub_mag(r.mag_, d.mag_);
        q.mag_[bit / 32] |= 1u << (bit % 32);
      }
    }
    q.trim();
    r.trim();
    q.sign_ = q.mag_.empty() ? 0 : sign_ * d.sign_;
    r.sign_ = r.mag_.empty() ? 0 : sign_;
    return {q, r};
  }

  /// Quotient and remainder by a positive machine divisor; remainder carries
  /// the sign of *this (magnitude remainder).
  std::pair<BigInt, std::uint32_t> divmod_u32(std::uint32_t d) const {
    if (d == 0) throw std::invalid_argument("BigInt: division by zero");
    BigInt q;
    q.mag_.assign(mag_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag_[i];
      q.mag_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    q.trim();
    q.sign_ = q.mag_.empty() ? 0 : sign_;
    return {q, static_cast<std::uint32_t>(rem)};
  }

  /// Mathematical residue in [0, m).
  long long mod(long long m) const {
    if (m <= 0) throw std::invalid_argument("BigInt::mod: modulus must be positive");
    if (m > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("BigInt::mod: modulus too large");
    auto [q, r] = divmod_u32(static_cast<std::uint32_t>(m));
    long long rr = static_cast<long long>(r);
    if (sign_ < 0 && rr != 0) rr = m - rr;
    return rr;
  }

  long long to_ll() const {
    unsigned long long m = 0;
    if (mag_.size() > 2) throw std::overflow_error("BigInt: value exceeds long long");
    for (std::size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    if (sign_ >= 0) {
      if (m > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
        throw std::overflow_error("BigInt: value exceeds long long");
      return static_cast<long long>(m);
    }
    if (m > static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ULL)
      throw std::overflow_error("BigInt: value exceeds long long");
    return static_cast<long long>(~m + 1ULL);
  }

  bool fits_ll() const {
    if (mag_.size() < 2) return true;
    if (mag_.size() > 2) return false;
    unsigned long long m = (static_cast<unsigned long long>(mag_[1]) << 32) | mag_[0];
    unsigned long long lim =
        static_cast<unsigned long long>(std::numeric_limits<long long>::max());
    return sign_ >= 0 ? m <= lim : m <= lim + 1ULL;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
    BigInt cur = *this;
    cur.sign_ = 1;
    while (!cur.is_zero()) {
      auto [q, r] = cur.divmod_u32(1000000000u);
      chunks.push_back(r);
      cur = q;
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

  /// Exponent of the largest power of 2 dividing *this; -1 for zero.
  long long trailing_twos() const {
    if (sign_ == 0) return -1;
    long long e = 0;
    for (std::size_t i = 0; i < mag_.size(); ++i) {
      if (mag_[i] == 0) {
        e += 32;
        continue;
      }
      std::uint32_t w = mag_[i];
      while ((w & 1u) == 0) {
        ++e;
        w >>= 1;
      }
      return e;
    }
    return e;
  }

 private:
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r = big;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                          (i < small.size() ? small[i] : 0u);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (carry == 0 && i >= small.size()) break;
    }
    if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? b[i] : 0u);
      borrow = cur < 0 ? 1 : 0;
      r[i] = static_cast<std::uint32_t>(cur + (borrow ? (1LL << 32) : 0));
      if (borrow == 0 && i >= b.size()) break;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  int sign_ = 0;
  std::vector<std::uint32_t> mag_;
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

inline BigInt abs(const BigInt& v) { return v.is_negative() ? -v : v; }

/// Floor division (rounds toward negative infinity).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero() && (r.is_negative() != b.is_negative())) q -= BigInt(1);
  return q;
}

/// Exact binomial coefficient C(n, k).
inline BigInt binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (unsigned long long i = 0; i < k; ++i) {
    c *= BigInt(static_cast<long long>(n - i));
    auto [q, r] = c.divmod_u32(static_cast<std::uint32_t>(i + 1));
    if (r != 0) throw std::logic_error("binomial: non-exact intermediate division");
    c = q;
  }
  return c;
}

}  // namespace windlab

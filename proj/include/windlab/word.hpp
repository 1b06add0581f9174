#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "windlab/prng.hpp"
#include "windlab/symmetry.hpp"

namespace windlab {

enum class Generator : std::uint8_t { x, y };

struct Letter {
  Generator gen;
  std::int8_t sign;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, static_cast<std::int8_t>(-l.sign)}; }

/// Free reduction: repeatedly cancel adjacent g^{+1} g^{-1} pairs.
/// Idempotent and length-nonincreasing.
inline std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Element of the free group F_2 = F(x, y), stored freely reduced at all
/// times; every constructor reduces eagerly.
class Word {
 public:
  Word() = default;

  explicit Word(std::vector<Letter> letters) : letters_(free_reduce(letters)) {}

  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  // Bypass re-reduction when the caller guarantees the input is reduced.
  struct already_reduced_t {};
  Word(already_reduced_t, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  friend Word concat(const Word& a, const Word& b);
  friend Word invert(const Word& w);

  std::vector<Letter> letters_;
};

inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  std::size_t keep = out.size();
  std::size_t skip = 0;
  while (keep > 0 && skip < b.letters_.size() &&
         out[keep - 1] == inverse(b.letters_[skip])) {
    --keep;
    ++skip;
  }
  out.resize(keep);
  out.insert(out.end(), b.letters_.begin() + static_cast<std::ptrdiff_t>(skip),
             b.letters_.end());
  return Word(Word::already_reduced_t{}, std::move(out));
}

inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (std::size_t i = w.letters_.size(); i-- > 0;) out.push_back(inverse(w.letters_[i]));
  return Word(Word::already_reduced_t{}, std::move(out));
}

/// u z u^{-1}
inline Word conjugate(const Word& u, const Word& z) {
  return concat(concat(u, z), invert(u));
}

inline Word power(const Word& w, long long k) {
  Word base = k < 0 ? invert(w) : w;
  long long reps = k < 0 ? -k : k;
  Word out;
  for (long long i = 0; i < reps; ++i) out = concat(out, base);
  return out;
}

/// [a, b] = a b a^{-1} b^{-1}
inline Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(invert(a), invert(b)));
}

inline long long exponent_sum(const Word& w, Generator g) {
  long long s = 0;
  for (Letter l : w.letters())
    if (l.gen == g) s += l.sign;
  return s;
}

/// Membership in F_2': both total exponents vanish.
inline bool in_derived_subgroup(const Word& w) {
  return exponent_sum(w, Generator::x) == 0 && exponent_sum(w, Generator::y) == 0;
}

inline Word x_word() { return Word({{Generator::x, 1}}); }
inline Word y_word() { return Word({{Generator::y, 1}}); }

// ---------------------------------------------------------------------------
// parsing / printing
//
// word := term* ; term := atom ['^' signed-integer]
// atom := 'x' | 'y' | '(' word ')' | '[' word ',' word ']'
// whitespace ignored; [a,b] expands to a b a^-1 b^-1.
// ---------------------------------------------------------------------------

namespace detail {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse_full() {
    Word w = parse_word();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return w;
  }

 private:
  Word parse_word() {
    Word out;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == ')' || c == ',' || c == ']') break;
      Word atom = parse_atom();
      skip_ws();
      long long exp = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        exp = parse_integer();
      }
      out = concat(out, power(atom, exp));
    }
    return out;
  }

  Word parse_atom() {
    char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return x_word();
    }
    if (c == 'y') {
      ++pos_;
      return y_word();
    }
    if (c == '(') {
      ++pos_;
      Word inner = parse_word();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word a = parse_word();
      expect(',');
      Word b = parse_word();
      expect(']');
      return commutator(a, b);
    }
    throw ParseError("expected 'x', 'y', '(' or '['", pos_);
  }

  long long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
      throw ParseError("expected integer exponent", pos_);
    long long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<long long>::max() - digit) / 10)
        throw ParseError("exponent overflows platform integer range", start);
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word Word::parse(std::string_view text) {
  return detail::WordParser(text).parse_full();
}

/// Canonical printing: "x", "y", "x^-1", "y^-1" concatenated without
/// whitespace.  With fold_exponents, runs of one letter print as x^k.
inline std::string to_string(const Word& w, bool fold_exponents = false) {
  std::string out;
  const auto& ls = w.letters();
  auto emit = [&out](Letter l, long long count) {
    out += l.gen == Generator::x ? 'x' : 'y';
    long long e = l.sign * count;
    if (e != 1) out += "^" + std::to_string(e);
  };
  if (!fold_exponents) {
    for (Letter l : ls) emit(l, 1);
    return out;
  }
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    emit(ls[i], static_cast<long long>(j - i));
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// word families
// ---------------------------------------------------------------------------

/// m-th Engel word: e_1 = [y,x], e_m = [y, e_{m-1}].
/// The reduced length roughly doubles per step; callers needing invariants of
/// e_m for large m should work with its winding polynomial -(Y-1)^{m-1}
/// instead of materializing the word (see invariant.hpp).
inline Word engel_word(long long m) {
  if (m < 1) throw std::invalid_argument("engel_word: m must be >= 1");
  Word e = commutator(y_word(), x_word());
  for (long long i = 1; i < m; ++i) e = commutator(y_word(), e);
  return e;
}

/// Basic commutator e_{i,j} = [x,...,x, y,...,y, x] (i x's, j y's, left
/// nested).  e_{0,j} coincides with the j-th Engel word.
inline Word basic_commutator(long long i, long long j) {
  if (i < 0) throw std::invalid_argument("basic_commutator: i must be >= 0");
  if (j < 1) throw std::invalid_argument("basic_commutator: j must be >= 1");
  Word w = commutator(y_word(), x_word());
  for (long long t = 1; t < j; ++t) w = commutator(y_word(), w);
  for (long long t = 0; t < i; ++t) w = commutator(x_word(), w);
  return w;
}

/// Morse words: u_1 = x, v_1 = y, u_{i+1} = u_i v_i, v_{i+1} = v_i u_i.
/// Both are positive words of length 2^{m-1}.
inline std::pair<Word, Word> morse_words(long long m) {
  if (m < 1) throw std::invalid_argument("morse_words: m must be >= 1");
  Word u = x_word(), v = y_word();
  for (long long i = 1; i < m; ++i) {
    Word nu = concat(u, v);
    Word nv = concat(v, u);
    u = std::move(nu);
    v = std::move(nv);
  }
  return {u, v};
}

/// Letter-wise substitution (x<->y, x->x^-1 or y->y^-1) followed by free
/// reduction.  Each symmetry is an involution.
inline Word apply_symmetry(const Word& w, Symmetry sym) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    switch (sym) {
      case Symmetry::swap_xy:
        out.push_back({l.gen == Generator::x ? Generator::y : Generator::x, l.sign});
        break;
      case Symmetry::invert_x:
        out.push_back({l.gen, l.gen == Generator::x ? static_cast<std::int8_t>(-l.sign)
                                                    : l.sign});
        break;
      case Symmetry::invert_y:
        out.push_back({l.gen, l.gen == Generator::y ? static_cast<std::int8_t>(-l.sign)
                                                    : l.sign});
        break;
    }
  }
  return Word(std::move(out));
}

/// The relator words of the M(2,n) quotient construction, closed under the
/// symmetry group generated by apply_symmetry (x<->y swap and the two
/// inversions generate all reflections and quarter-turn rotations, which
/// preserve the set of n-th power products in F_2').
/// Base words: [x,y]^n, ([x,y]y[y,x])^n y^-n, (xyx^-1)^n y^-n,
/// x^n (x^-1 y)^n y^-n, x^{2n} (x^-2 y)^n y^-n.
inline std::vector<Word> relator_family(long long n) {
  if (n < 2) throw std::invalid_argument("relator_family: n must be >= 2");
  const Word x = x_word(), y = y_word();
  const Word c = commutator(x, y);
  std::vector<Word> base;
  base.push_back(power(c, n));
  base.push_back(concat(power(concat(concat(c, y), commutator(y, x)), n), power(y, -n)));
  base.push_back(concat(power(conjugate(x, y), n), power(y, -n)));
  base.push_back(concat(concat(power(x, n), power(concat(invert(x), y), n)), power(y, -n)));
  base.push_back(concat(concat(power(x, 2 * n), power(concat(power(x, -2), y), n)),
                        power(y, -n)));

  std::vector<Word> family;
  std::set<Word> seen;
  for (const Word& b : base) {
    std::vector<Word> frontier{b};
    while (!frontier.empty()) {
      Word cur = frontier.back();
      frontier.pop_back();
      if (!seen.insert(cur).second) continue;
      family.push_back(cur);
      for (Symmetry s : {Symmetry::swap_xy, Symmetry::invert_x, Symmetry::invert_y})
        frontier.push_back(apply_symmetry(cur, s));
    }
  }
  for (const Word& w : family)
    if (!in_derived_subgroup(w))
      throw std::logic_error("relator_family: relator escaped F_2'");
  return family;
}

/// Uniform random letters, freely reduced; the result may be shorter than
/// len.
inline Word random_word(long long len, SplitMix64& rng) {
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(len));
  for (long long i = 0; i < len; ++i)
    ls.push_back({rng.next() & 1 ? Generator::y : Generator::x,
                  static_cast<std::int8_t>(rng.next() & 1 ? 1 : -1)});
  return Word(std::move(ls));
}

/// Random element of F_2': a shuffled balanced multiset of letters (equal
/// counts of x and x^-1, of y and y^-1), freely reduced.
inline Word random_derived_word(long long approx_len, SplitMix64& rng) {
  long long q = static_cast<long long>(rng.below(static_cast<std::uint64_t>(approx_len / 4 + 1)));
  long long r = static_cast<long long>(rng.below(static_cast<std::uint64_t>(approx_len / 4 + 1)));
  std::vector<Letter> ls;
  for (long long i = 0; i < q; ++i) {
    ls.push_back({Generator::x, 1});
    ls.push_back({Generator::x, -1});
  }
  for (long long i = 0; i < r; ++i) {
    ls.push_back({Generator::y, 1});
    ls.push_back({Generator::y, -1});
  }
  for (std::size_t i = ls.size(); i > 1; --i)
    std::swap(ls[i - 1], ls[rng.below(i)]);
  return Word(std::move(ls));
}

/// Pseudo-random product u_1^n u_2^n ... u_r^n lying in F_2'.  The exponent
/// sums are balanced inside the last base word u_r (not by a correction
/// factor outside the powers), so the result is a genuine product of n-th
/// powers.  Deterministic for a fixed seed.
inline Word random_nth_power_product(long long n, long long r, long long max_len,
                                     std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_nth_power_product: n must be >= 1");
  if (r < 1) throw std::invalid_argument("random_nth_power_product: r must be >= 1");
  if (max_len < 0) throw std::invalid_argument("random_nth_power_product: max_len < 0");
  SplitMix64 rng(seed);
  auto random_word = [&rng](long long max) {
    std::vector<Letter> ls;
    long long len = max > 0 ? static_cast<long long>(rng.below(static_cast<std::uint64_t>(max + 1))) : 0;
    for (long long i = 0; i < len; ++i)
      ls.push_back({rng.next() & 1 ? Generator::y : Generator::x,
                    static_cast<std::int8_t>(rng.next() & 1 ? 1 : -1)});
    return Word(std::move(ls));
  };
  Word product;
  long long acc_x = 0, acc_y = 0;
  for (long long i = 0; i < r; ++i) {
    Word u = random_word(max_len);
    acc_x += exponent_sum(u, Generator::x);
    acc_y += exponent_sum(u, Generator::y);
    if (i == r - 1)
      u = concat(u, concat(power(x_word(), -acc_x), power(y_word(), -acc_y)));
    product = concat(product, power(u, n));
  }
  return product;
}

}  // namespace windlab

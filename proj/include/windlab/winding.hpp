#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "windlab/laurent.hpp"
#include "windlab/word.hpp"

namespace windlab {

class NotInDerivedSubgroup : public std::runtime_error {
 public:
  explicit NotInDerivedSubgroup(const Word& w)
      : std::runtime_error("word is not in F_2' (exponent sums " +
                           std::to_string(exponent_sum(w, Generator::x)) + ", " +
                           std::to_string(exponent_sum(w, Generator::y)) + ")") {}
};

/// The lattice path of a word: starts at (0,0), one unit step per letter,
/// horizontal for x-letters and vertical for y-letters.  Open paths are
/// allowed here (they render fine); the path is closed exactly when the word
/// lies in F_2'.
struct LatticePath {
  std::vector<std::pair<long long, long long>> vertices;

  bool closed() const { return vertices.front() == vertices.back(); }
};

inline LatticePath curve_points(const Word& w) {
  LatticePath path;
  path.vertices.reserve(w.size() + 1);
  long long px = 0, py = 0;
  path.vertices.emplace_back(px, py);
  for (Letter l : w.letters()) {
    if (l.gen == Generator::x)
      px += l.sign;
    else
      py += l.sign;
    path.vertices.emplace_back(px, py);
  }
  return path;
}

namespace detail {

// Signed vertical unit edge of the curve: column `col`, spanning rows
// [row, row+1], sign +1 for an up-step and -1 for a down-step.
struct VerticalEdge {
  long long col;
  long long row;
  int sign;
};

inline std::vector<VerticalEdge> vertical_edges(const Word& w) {
  std::vector<VerticalEdge> edges;
  long long px = 0, py = 0;
  for (Letter l : w.letters()) {
    if (l.gen == Generator::x) {
      px += l.sign;
    } else {
      edges.push_back({px, l.sign > 0 ? py : py - 1, l.sign});
      py += l.sign;
    }
  }
  return edges;
}

}  // namespace detail

/// Winding invariant W(w): the Laurent polynomial whose (i, j) coefficient is
/// the winding number of the closed curve of w around (i + 1/2, j + 1/2).
///
/// Algorithm: record a signed vertical edge per y-letter, then per row the
/// coefficient at square (i, j) is the signed count of edges in row j with
/// column > i (a rightward ray crossing count), computed by suffix sums over
/// the distinct columns.  O(L log L) in the word length.
inline LaurentPoly winding_invariant(const Word& w) {
  if (!in_derived_subgroup(w)) throw NotInDerivedSubgroup(w);
  // per row: column -> signed edge count
  std::map<long long, std::map<long long, long long>> rows;
  for (const auto& e : detail::vertical_edges(w)) {
    long long& slot = rows[e.row][e.col];
    slot += e.sign;
    if (slot == 0) rows[e.row].erase(e.col);
  }
  LaurentPoly p;
  for (const auto& [row, cols] : rows) {
    if (cols.empty()) continue;
    // suffix sums over columns, rightmost first; squares in [prev_col, col)
    // all see the same set of edges to their right
    long long suffix = 0;
    auto it = cols.rbegin();
    long long upper = it->first;  // squares with i >= upper have coefficient 0
    for (; it != cols.rend(); ++it) {
      suffix += it->second;
      auto next = std::next(it);
      long long lower = next == cols.rend() ? it->first - 1 : next->first;
      // NOTE: when next exists, squares i in [next->col, it->col) see suffix;
      // below the leftmost column the suffix is the whole row sum, which is 0
      // for a closed curve.
      for (long long i = lower; i < upper; ++i)
        if (suffix != 0) p.add_term(i, row, BigInt(suffix));
      upper = lower;
    }
    if (suffix != 0)
      throw std::logic_error("winding_invariant: nonzero row crossing total on a closed curve");
  }
  return p;
}

/// Independent brute-force winding computation: for every square of the
/// padded bounding box, cast a rightward ray from the square center and count
/// signed crossings with the vertical unit edges of the path.  O(L * area).
/// The outermost ring of the padded box must come out zero (asserted).
inline LaurentPoly winding_oracle(const Word& w) {
  if (!in_derived_subgroup(w)) throw NotInDerivedSubgroup(w);
  auto edges = detail::vertical_edges(w);
  LatticePath path = curve_points(w);
  long long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& [vx, vy] : path.vertices) {
    min_x = std::min(min_x, vx);
    max_x = std::max(max_x, vx);
    min_y = std::min(min_y, vy);
    max_y = std::max(max_y, vy);
  }
  LaurentPoly p;
  for (long long j = min_y - 1; j <= max_y; ++j) {
    for (long long i = min_x - 1; i <= max_x; ++i) {
      long long crossings = 0;
      for (const auto& e : edges)
        if (e.row == j && e.col > i) crossings += e.sign;
      bool on_ring = i == min_x - 1 || i == max_x || j == min_y - 1 || j == max_y;
      if (on_ring && crossings != 0)
        throw std::logic_error("winding_oracle: nonzero winding on the padding ring");
      if (crossings != 0) p.add_term(i, j, BigInt(crossings));
    }
  }
  return p;
}

}  // namespace windlab

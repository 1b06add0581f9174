#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "windlab/bigint.hpp"
#include "windlab/numeric.hpp"

namespace windlab {

using IntRow = std::vector<long long>;
using IntMatrix = std::vector<IntRow>;

/// Row-style Hermite normal form of the lattice spanned by the input rows.
/// rows[r] has a positive pivot at pivot_cols[r] (strictly increasing), zeros
/// below-left, and every entry above a pivot is reduced into [0, pivot).
/// This basis is unique for the lattice, independent of input row order.
struct HermiteForm {
  std::size_t cols = 0;
  IntMatrix rows;
  std::vector<std::size_t> pivot_cols;

  bool full_rank() const { return rows.size() == cols; }

  /// Canonical coset representative of v modulo the lattice: reduce against
  /// each basis row top-down.  Constant on cosets and idempotent.
  IntRow reduce(IntRow v) const {
    if (v.size() != cols) throw std::invalid_argument("HermiteForm::reduce: size mismatch");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      long long q = floor_div(v[pivot_cols[r]], rows[r][pivot_cols[r]]);
      if (q == 0) continue;
      for (std::size_t c = pivot_cols[r]; c < cols; ++c)
        v[c] = add_checked(v[c], -mul_checked(q, rows[r][c]));
    }
    return v;
  }

  /// Membership test: v is in the lattice iff its canonical representative
  /// vanishes.
  bool contains(IntRow v) const {
    for (long long e : reduce(std::move(v)))
      if (e != 0) return false;
    return true;
  }
};

/// Incremental HNF: insert each row, Euclid-reducing against the current
/// basis; then normalize the above-pivot entries.  Each insertion round
/// reduces the working row against every basis pivot, which keeps the
/// intermediate entries from cascading (once the basis is full rank with
/// small pivots, every entry stays below the largest pivot).
inline HermiteForm hermite_normal_form(const IntMatrix& input, std::size_t cols) {
  HermiteForm h;
  h.cols = cols;
  // basis kept sorted by pivot column
  for (IntRow row : input) {
    if (row.size() != cols) throw std::invalid_argument("hermite_normal_form: ragged input");
    for (;;) {
      for (std::size_t r = 0; r < h.rows.size(); ++r) {
        std::size_t pc = h.pivot_cols[r];
        long long q = floor_div(row[pc], h.rows[r][pc]);
        if (q == 0) continue;
        for (std::size_t c = pc; c < cols; ++c)
          row[c] = add_checked(row[c], -mul_checked(q, h.rows[r][c]));
      }
      std::size_t pc = 0;
      while (pc < cols && row[pc] == 0) ++pc;
      if (pc == cols) break;  // row reduced to zero
      auto it = std::lower_bound(h.pivot_cols.begin(), h.pivot_cols.end(), pc);
      std::size_t idx = static_cast<std::size_t>(it - h.pivot_cols.begin());
      if (it == h.pivot_cols.end() || *it != pc) {
        if (row[pc] < 0)
          for (long long& e : row) e = -e;
        h.pivot_cols.insert(it, pc);
        h.rows.insert(h.rows.begin() + static_cast<std::ptrdiff_t>(idx), row);
        break;
      }
      // row[pc] lies in (0, pivot): swap in the smaller pivot and keep
      // reducing the displaced basis row
      std::swap(row, h.rows[idx]);
    }
  }
  // Normalize entries above each pivot into [0, pivot).  Ascending pivot
  // order: step r only touches columns >= pivot_cols[r], so the columns
  // normalized by earlier steps stay normalized.
  for (std::size_t r = 1; r < h.rows.size(); ++r) {
    std::size_t pc = h.pivot_cols[r];
    long long pivot = h.rows[r][pc];
    for (std::size_t above = 0; above < r; ++above) {
      long long q = floor_div(h.rows[above][pc], pivot);
      if (q == 0) continue;
      for (std::size_t c = pc; c < h.cols; ++c)
        h.rows[above][c] = add_checked(h.rows[above][c], -mul_checked(q, h.rows[r][c]));
    }
  }
  return h;
}

/// HNF of the lattice spanned by the input rows together with m*e_c for
/// every coordinate, i.e. of L + mZ^cols.  Every intermediate entry stays in
/// [0, m), so no coefficient explosion is possible.  Reducing an entry mod m
/// is sound throughout: the running span always contains mZ^cols (it starts
/// from the m*I basis and row operations preserve spans).
inline HermiteForm hermite_normal_form_mod(const IntMatrix& input, std::size_t cols,
                                           long long m) {
  if (m < 1) throw std::invalid_argument("hermite_normal_form_mod: modulus must be >= 1");
  HermiteForm h;
  h.cols = cols;
  h.rows.assign(cols, IntRow(cols, 0));
  h.pivot_cols.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    h.rows[c][c] = m;
    h.pivot_cols[c] = c;
  }
  for (IntRow row : input) {
    if (row.size() != cols)
      throw std::invalid_argument("hermite_normal_form_mod: ragged input");
    for (long long& e : row) e = floor_mod(e, m);
    for (;;) {
      for (std::size_t r = 0; r < cols; ++r) {
        long long q = floor_div(row[r], h.rows[r][r]);
        if (q == 0) continue;
        for (std::size_t c = r; c < cols; ++c)
          row[c] = floor_mod(row[c] - q * h.rows[r][c], m);
      }
      std::size_t pc = 0;
      while (pc < cols && row[pc] == 0) ++pc;
      if (pc == cols) break;
      // row[pc] lies in (0, pivot): swap in the smaller pivot, keep reducing
      std::swap(row, h.rows[pc]);
    }
  }
  for (std::size_t r = 1; r < cols; ++r) {
    long long pivot = h.rows[r][r];
    for (std::size_t above = 0; above < r; ++above) {
      long long q = floor_div(h.rows[above][r], pivot);
      if (q == 0) continue;
      // mod-m reduction is sound here too and keeps the entries bounded; at
      // column r itself the subtraction already lands in [0, pivot)
      for (std::size_t c = r; c < cols; ++c)
        h.rows[above][c] = floor_mod(h.rows[above][c] - q * h.rows[r][c], m);
    }
  }
  return h;
}

/// Smith normal form: returns the min(rows, cols) diagonal entries
/// d_1 | d_2 | ... (nonnegative, zeros trailing).  Pivots are chosen by least
/// absolute value; intermediate entries can still grow to the determinant
/// scale, so the elimination runs on arbitrary-precision integers.
inline std::vector<long long> smith_normal_form(const IntMatrix& input) {
  std::size_t nrows = input.size();
  std::size_t ncols = nrows == 0 ? 0 : input[0].size();
  for (const auto& r : input)
    if (r.size() != ncols) throw std::invalid_argument("smith_normal_form: ragged input");
  std::vector<std::vector<BigInt>> m(nrows, std::vector<BigInt>(ncols));
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) m[i][j] = BigInt(input[i][j]);

  std::size_t dim = std::min(nrows, ncols);
  std::vector<long long> divisors(dim, 0);

  for (std::size_t t = 0; t < dim; ++t) {
    for (;;) {
      // least-absolute-value nonzero entry of the trailing submatrix
      std::size_t pr = t, pcx = t;
      BigInt best;
      for (std::size_t i = t; i < nrows; ++i)
        for (std::size_t j = t; j < ncols; ++j)
          if (!m[i][j].is_zero() && (best.is_zero() || abs(m[i][j]) < best)) {
            best = abs(m[i][j]);
            pr = i;
            pcx = j;
          }
      if (best.is_zero()) return divisors;  // trailing submatrix is zero
      std::swap(m[t], m[pr]);
      if (pcx != t)
        for (std::size_t i = 0; i < nrows; ++i) std::swap(m[i][t], m[i][pcx]);
      if (m[t][t].is_negative())
        for (std::size_t j = t; j < ncols; ++j) m[t][j] = -m[t][j];

      bool clean = true;
      for (std::size_t i = t + 1; i < nrows; ++i) {
        BigInt q = floor_div(m[i][t], m[t][t]);
        if (!q.is_zero())
          for (std::size_t j = t; j < ncols; ++j) m[i][j] -= q * m[t][j];
        if (!m[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < ncols; ++j) {
        BigInt q = floor_div(m[t][j], m[t][t]);
        if (!q.is_zero())
          for (std::size_t i = t; i < nrows; ++i) m[i][j] -= q * m[i][t];
        if (!m[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;

      // divisibility fix-up: the pivot must divide every remaining entry
      bool divides_all = true;
      for (std::size_t i = t + 1; i < nrows && divides_all; ++i)
        for (std::size_t j = t + 1; j < ncols && divides_all; ++j)
          if (!m[i][j].divmod(m[t][t]).second.is_zero()) {
            for (std::size_t c = t; c < ncols; ++c) m[t][c] += m[i][c];
            divides_all = false;
          }
      if (divides_all) break;
    }
    divisors[t] = m[t][t].to_ll();
  }
  return divisors;
}

}  // namespace windlab

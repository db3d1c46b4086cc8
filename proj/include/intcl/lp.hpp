#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "intcl/errors.hpp"

namespace intcl::lp {

using Rational = mpq_class;
using Matrix = std::vector<std::vector<Rational>>;

/// A point of { x : A x = b, x >= 0 }, or nothing if the set is empty.
/// Phase-one simplex in exact arithmetic with Bland's rule (no cycling).
inline std::optional<std::vector<Rational>> feasible_point(Matrix A, std::vector<Rational> b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw PreconditionError("lp: row count mismatch");
  const std::size_t n = m == 0 ? 0 : A[0].size();
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw PreconditionError("lp: ragged matrix");
    if (b[i] < 0) {
      for (auto& a : A[i]) a = -a;
      b[i] = -b[i];
    }
  }
  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t rhs = n + m;
  Matrix T(m, std::vector<Rational>(rhs + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][rhs] = b[i];
    basis[i] = n + i;
  }
  // Reduced costs of "minimize the sum of artificials".
  std::vector<Rational> cost(rhs + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= T[i][j];
    cost[rhs] -= T[i][rhs];
  }

  while (true) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == rhs) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][rhs] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw Error("lp: phase one unbounded");  // cannot happen: objective >= 0
    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j <= rhs; ++j) T[i][j] -= f * T[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j <= rhs; ++j) cost[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[rhs] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][rhs];
  return x;
}

/// Row echelon form built one row at a time. Each stored row is zero in the
/// pivot columns of the rows stored before it and has 1 at its own pivot.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

  /// Reduces `row` and keeps it if it is independent; returns whether it was kept.
  bool add(std::vector<Rational> row) {
    if (row.size() != ncols_) throw PreconditionError("echelon: row length mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = row[pivots_[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (rows_[k][j] != 0) row[j] -= f * rows_[k][j];
    }
    std::size_t c = 0;
    while (c < ncols_ && row[c] == 0) ++c;
    if (c == ncols_) return false;
    const Rational inv = 1 / row[c];
    for (auto& v : row) v *= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(c);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  /// Basis of { x : every added row · x = 0 }.
  std::vector<std::vector<Rational>> nullspace() const {
    // back substitution to reduced form
    Matrix R = rows_;
    for (std::size_t k = R.size(); k-- > 0;)
      for (std::size_t i = 0; i < k; ++i) {
        const Rational f = R[i][pivots_[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ncols_; ++j) R[i][j] -= f * R[k][j];
      }
    std::vector<bool> pivot(ncols_, false);
    for (auto c : pivots_) pivot[c] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t free = 0; free < ncols_; ++free) {
      if (pivot[free]) continue;
      std::vector<Rational> v(ncols_, Rational(0));
      v[free] = 1;
      for (std::size_t k = 0; k < R.size(); ++k) v[pivots_[k]] = -R[k][free];
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t ncols_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// coef · x <= rhs, or < rhs when strict.
struct Inequality {
  std::vector<Rational> coef;
  Rational rhs;
  bool strict = false;
};

/// Feasibility of a system of (possibly strict) inequalities by
/// Fourier–Motzkin elimination. Exponential in the number of variables.
inline bool fm_feasible(std::vector<Inequality> sys, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<Inequality> pos, neg, next;
    for (auto& q : sys) {
      if (q.coef.size() != nvars) throw PreconditionError("fm: coefficient length mismatch");
      if (q.coef[v] > 0)
        pos.push_back(std::move(q));
      else if (q.coef[v] < 0)
        neg.push_back(std::move(q));
      else
        next.push_back(std::move(q));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Rational sp = 1 / p.coef[v], sq = -1 / q.coef[v];
        Inequality c{std::vector<Rational>(nvars), p.rhs * sp + q.rhs * sq, p.strict || q.strict};
        for (std::size_t k = 0; k < nvars; ++k) c.coef[k] = p.coef[k] * sp + q.coef[k] * sq;
        c.coef[v] = 0;
        next.push_back(std::move(c));
      }
    // drop exact duplicates
    std::set<std::string> seen;
    sys.clear();
    for (auto& q : next) {
      std::string key = q.strict ? "<" : "<=";
      for (const auto& c : q.coef) key += c.get_str() + ",";
      key += q.rhs.get_str();
      if (seen.insert(key).second) sys.push_back(std::move(q));
    }
  }
  for (const auto& q : sys)
    if (q.strict ? !(0 < q.rhs) : !(0 <= q.rhs)) return false;
  return true;
}

}  // namespace intcl::lp

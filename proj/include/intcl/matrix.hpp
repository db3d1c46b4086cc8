#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "intcl/polynomial.hpp"

namespace intcl {

/// Dense row-major matrix of polynomials over one ring. Zero rows or columns
/// are allowed (an empty syzygy matrix has zero columns).
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw PreconditionError("entry count != rows * cols");
    for (const auto& e : entries_) require_same_ring(e.ring(), ring_);
  }

  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
    std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
    std::vector<Polynomial> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw PreconditionError("ragged matrix rows");
      e.insert(e.end(), row.begin(), row.end());
    }
    return PolyMatrix(std::move(ring), r, c, std::move(e));
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Polynomial>& entries() const { return entries_; }

  std::vector<Polynomial> column(std::size_t j) const {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!(*this)(i, i).is_zero()) return false;
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// Row vector times matrix: (v^T M)_j = sum_i v_i M(i, j).
inline std::vector<Polynomial> row_times(std::span<const Polynomial> v, const PolyMatrix& m) {
  if (v.size() != m.rows()) throw PreconditionError("dimension mismatch in row_times");
  std::vector<Polynomial> out(m.cols(), Polynomial(m.ring()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!v[i].is_zero() && !m(i, j).is_zero()) out[j] += v[i] * m(i, j);
  return out;
}

/// (#vars x #gens) matrix whose column j is the gradient of gens[j].
inline PolyMatrix jacobian_matrix(const RingPtr& ring, std::span<const Polynomial> gens) {
  ring->require_char0("jacobian_matrix");
  PolyMatrix m(ring, ring->nvars(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    require_same_ring(gens[j].ring(), ring);
    for (std::size_t i = 0; i < ring->nvars(); ++i) m(i, j) = partial_derivative(gens[j], i);
  }
  return m;
}

namespace detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

// Determinant of the submatrix on row set `rows` and column set `cols`
// (equal popcounts) by Laplace expansion along the lowest row, memoized.
class MinorTable {
 public:
  explicit MinorTable(const PolyMatrix& m) : m_(m) {}

  const Polynomial& det(Mask rows, Mask cols) {
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Polynomial d(m_.ring());
    if (rows == 0) {
      d = Polynomial::one(m_.ring());
    } else {
      std::size_t r = static_cast<std::size_t>(__builtin_ctzll(rows));
      Mask rest = rows & (rows - 1);
      int sign = 1;
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        if (!(cols >> c & 1)) continue;
        const auto& e = m_(r, c);
        if (!e.is_zero()) {
          const Polynomial& sub = det(rest, cols & ~(Mask{1} << c));
          if (!sub.is_zero()) d = sign > 0 ? d + e * sub : d - e * sub;
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(d)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::map<std::pair<Mask, Mask>, Polynomial> memo_;
};

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    f(m);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

inline Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() > 63) throw PreconditionError("matrix too large");
  detail::MinorTable t(m);
  detail::Mask all = m.rows() == 0 ? 0 : (~detail::Mask{0} >> (64 - m.rows()));
  return t.det(all, all);
}

/// All nonzero r x r minors (fraction-free Laplace expansion).
inline std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t r) {
  if (r == 0 || r > std::min(m.rows(), m.cols()))
    throw PreconditionError("minor size out of range");
  if (m.rows() > 63 || m.cols() > 63) throw PreconditionError("matrix too large for minors");
  detail::MinorTable t(m);
  std::vector<Polynomial> out;
  detail::for_each_subset(m.rows(), r, [&](detail::Mask rows) {
    detail::for_each_subset(m.cols(), r, [&](detail::Mask cols) {
      const auto& d = t.det(rows, cols);
      if (!d.is_zero()) out.push_back(d);
    });
  });
  return out;
}

namespace detail {

// Pfaffian of the principal submatrix on index set `idx` (even popcount),
// expanded along its first row: pf = sum_j (-1)^(j+1) a_{1j} pf(A minus rows/cols 1,j).
inline const Polynomial& pfaffian_rec(const PolyMatrix& m, Mask idx, std::map<Mask, Polynomial>& memo) {
  if (auto it = memo.find(idx); it != memo.end()) return it->second;
  Polynomial p(m.ring());
  if (idx == 0) {
    p = Polynomial::one(m.ring());
  } else {
    std::size_t first = static_cast<std::size_t>(__builtin_ctzll(idx));
    Mask rest = idx & (idx - 1);
    int sign = 1;
    for (std::size_t j = first + 1; j < m.rows(); ++j) {
      if (!(rest >> j & 1)) continue;
      const auto& a = m(first, j);
      if (!a.is_zero()) {
        const Polynomial& sub = pfaffian_rec(m, rest & ~(Mask{1} << j), memo);
        if (!sub.is_zero()) p = sign > 0 ? p + a * sub : p - a * sub;
      }
      sign = -sign;
    }
  }
  return memo.emplace(idx, std::move(p)).first->second;
}

}  // namespace detail

/// Pfaffian of a skew-symmetric matrix of even size.
inline Polynomial pfaffian(const PolyMatrix& m) {
  if (!m.is_skew_symmetric()) throw PreconditionError("matrix is not skew-symmetric");
  if (m.rows() % 2 != 0) throw PreconditionError("Pfaffian of odd size");
  if (m.rows() > 63) throw PreconditionError("matrix too large");
  std::map<detail::Mask, Polynomial> memo;
  detail::Mask all = m.rows() == 0 ? 0 : (~detail::Mask{0} >> (64 - m.rows()));
  return detail::pfaffian_rec(m, all, memo);
}

/// Pfaffians of all size x size principal submatrices, zeros dropped, in
/// lexicographic order of the deleted index sets.
inline std::vector<Polynomial> pfaffians(const PolyMatrix& m, std::size_t size) {
  if (!m.is_skew_symmetric()) throw PreconditionError("matrix is not skew-symmetric");
  if (size == 0 || size % 2 != 0) throw PreconditionError("Pfaffian size must be even and positive");
  if (size > m.rows()) throw PreconditionError("Pfaffian size exceeds matrix size");
  if (m.rows() > 63) throw PreconditionError("matrix too large");
  std::map<detail::Mask, Polynomial> memo;
  std::vector<Polynomial> out;
  detail::for_each_subset(m.rows(), size, [&](detail::Mask idx) {
    const auto& p = detail::pfaffian_rec(m, idx, memo);
    if (!p.is_zero()) out.push_back(p);
  });
  return out;
}

}  // namespace intcl

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "intcl/errors.hpp"

namespace intcl {

/// Exponent vector of a power product. Length equals the number of ring
/// variables; the total degree is cached.
class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
  }

  static Monomial variable(std::size_t nvars, std::size_t i, exponent_type power = 1) {
    Monomial m(nvars);
    m.exps_[i] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  std::span<const exponent_type> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// Bitmask of variables with positive exponent (first 64 variables).
  std::uint64_t support() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
      if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
    return mask;
  }

  bool coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  /// Plain lexicographic comparison of exponent vectors (x_0 most significant).
  friend bool lex_less(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  std::vector<exponent_type> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { grevlex, lex, block };

/// Admissible monomial order. `block` compares the first `block_size`
/// variables by grevlex and breaks ties with grevlex on the rest, so any
/// polynomial whose leading monomial avoids the first block avoids it entirely.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr MonomialOrder(OrderKind kind, std::size_t block_size = 0)
      : kind_(kind), block_size_(block_size) {}

  static constexpr MonomialOrder grevlex() { return {OrderKind::grevlex}; }
  static constexpr MonomialOrder lex() { return {OrderKind::lex}; }
  static constexpr MonomialOrder block(std::size_t eliminated) {
    return {OrderKind::block, eliminated};
  }

  OrderKind kind() const { return kind_; }
  std::size_t block_size() const { return block_size_; }

  /// Three-way comparison: negative if a < b, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case OrderKind::grevlex:
        return grevlex_range(a, b, 0, a.size(), a.degree(), b.degree());
      case OrderKind::block: {
        std::size_t k = std::min(block_size_, a.size());
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < k; ++i) {
          da += a[i];
          db += b[i];
        }
        if (int c = grevlex_range(a, b, 0, k, da, db); c != 0) return c;
        return grevlex_range(a, b, k, a.size(), a.degree() - da, b.degree() - db);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::grevlex: return "grevlex";
      case OrderKind::lex: return "lex";
      case OrderKind::block: return "block(" + std::to_string(block_size_) + ")";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                           std::uint64_t da, std::uint64_t db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i > lo; --i)
      if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
    return 0;
  }

  OrderKind kind_ = OrderKind::grevlex;
  std::size_t block_size_ = 0;
};

}  // namespace intcl

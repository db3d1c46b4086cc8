#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "intcl/errors.hpp"
#include "intcl/monomial.hpp"

namespace intcl {

/// Exact coefficient. In characteristic p the value is kept as an integer
/// residue in [0, p).
using Coefficient = mpq_class;

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

/// k[x_1..x_n] with a fixed monomial order; k = Q or GF(p).
class PolynomialRing {
 public:
  PolynomialRing(std::vector<std::string> variables, MonomialOrder order,
                 std::uint64_t characteristic)
      : vars_(std::move(variables)), order_(order), characteristic_(characteristic) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.empty()) throw PreconditionError("empty variable name");
      if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
    }
    if (characteristic_ != 0 && !is_prime(characteristic_))
      throw PreconditionError("characteristic must be 0 or a prime");
    if (order_.kind() == OrderKind::block && order_.block_size() > vars_.size())
      throw PreconditionError("block order larger than the variable list");
  }

  static RingPtr make(std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::grevlex(),
                      std::uint64_t characteristic = 0) {
    return std::make_shared<const PolynomialRing>(std::move(variables), order, characteristic);
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_[i]; }
  const MonomialOrder& order() const { return order_; }
  std::uint64_t characteristic() const { return characteristic_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  /// Same variables, characteristic and order.
  bool same_as(const PolynomialRing& other) const {
    return this == &other || (vars_ == other.vars_ && order_ == other.order_ &&
                              characteristic_ == other.characteristic_);
  }

  RingPtr with_order(MonomialOrder order) const {
    return make(vars_, order, characteristic_);
  }

  /// Brings c into canonical field representation.
  void normalize(Coefficient& c) const {
    if (characteristic_ == 0) {
      c.canonicalize();
      return;
    }
    mpz_class p(static_cast<unsigned long>(characteristic_));
    mpz_class num = c.get_num() % p;
    mpz_class den = c.get_den() % p;
    if (den == 0) throw Error("denominator divisible by the characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    if (r < 0) r += p;
    c = mpq_class(r);
  }

  Coefficient inverse(const Coefficient& c) const {
    if (c == 0) throw Error("division by zero");
    Coefficient r = 1 / c;
    normalize(r);
    return r;
  }

  void require_char0(const std::string& op) const {
    if (characteristic_ != 0) throw CharacteristicError(op);
  }

 private:
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::uint64_t characteristic_ = 0;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !a->same_as(*b)) throw RingMismatch();
}

}  // namespace intcl

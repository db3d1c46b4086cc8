#pragma once

#include <string>
#include <vector>

#include "intcl/polynomial.hpp"

namespace intcl {

/// A ring R = k[x_1..x_n] / (relations). With no relations this is the
/// polynomial ring itself. Ideals of R are represented by their preimages in
/// k[x], so every computation adjoins the relations.
class Ring {
 public:
  explicit Ring(RingPtr base, std::vector<Polynomial> relations = {})
      : base_(std::move(base)) {
    for (auto& r : relations) {
      require_same_ring(r.ring(), base_);
      if (!r.is_zero()) relations_.push_back(r.primitive());
    }
  }

  static Ring polynomial(std::vector<std::string> variables,
                         MonomialOrder order = MonomialOrder::grevlex(),
                         std::uint64_t characteristic = 0) {
    return Ring(PolynomialRing::make(std::move(variables), order, characteristic));
  }

  const RingPtr& base() const { return base_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  bool is_quotient() const { return !relations_.empty(); }
  std::size_t nvars() const { return base_->nvars(); }

  Polynomial var(const std::string& name) const { return Polynomial::variable(base_, name); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(base_, i); }
  Polynomial constant(Coefficient c) const { return Polynomial::constant(base_, std::move(c)); }

  bool same_as(const Ring& other) const {
    if (!base_->same_as(*other.base_)) return false;
    return relations_ == other.relations_;
  }

 private:
  RingPtr base_;
  std::vector<Polynomial> relations_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw RingMismatch();
}

}  // namespace intcl

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "intcl/errors.hpp"
#include "intcl/monomial.hpp"
#include "intcl/poly_ring.hpp"

namespace intcl {

struct Term {
  Coefficient coef;
  Monomial mono;
};

/// Sparse polynomial in canonical form: nonzero coefficients, distinct
/// monomials, terms strictly descending in the ring's monomial order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Canonicalizes an arbitrary term list (any order, repeats, zeros).
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial constant(RingPtr ring, Coefficient c) {
    std::vector<Term> t;
    t.push_back({std::move(c), Monomial(ring->nvars())});
    return Polynomial(std::move(ring), std::move(t));
  }

  static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }

  static Polynomial variable(RingPtr ring, std::size_t i) {
    std::vector<Term> t;
    t.push_back({Coefficient(1), Monomial::variable(ring->nvars(), i)});
    return Polynomial(std::move(ring), std::move(t));
  }

  static Polynomial variable(RingPtr ring, const std::string& name) {
    auto i = ring->index_of(name);
    if (!i) throw PreconditionError("unknown variable '" + name + "'");
    return variable(std::move(ring), *i);
  }

  static Polynomial monomial(RingPtr ring, Coefficient c, Monomial m) {
    std::vector<Term> t;
    t.push_back({std::move(c), std::move(m)});
    return Polynomial(std::move(ring), std::move(t));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Coefficient& leading_coefficient() const { return terms_.front().coef; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Degree in variable i.
  std::uint64_t degree_in(std::size_t i) const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max<std::uint64_t>(d, t.mono[i]);
    return d;
  }

  bool involves(std::size_t i) const {
    for (const auto& t : terms_)
      if (t.mono[i] != 0) return true;
    return false;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.coef = -t.coef;
      ring_->normalize(t.coef);
    }
    return r;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring_, g.ring_);
    return f.combine(g, Coefficient(1), nullptr);
  }

  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring_, g.ring_);
    return f.combine(g, Coefficient(-1), nullptr);
  }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring_, g.ring_);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
    const Polynomial& small = f.size() <= g.size() ? f : g;
    const Polynomial& big = f.size() <= g.size() ? g : f;
    Polynomial acc(f.ring_);
    for (const auto& t : small.terms_) acc = acc.combine(big, t.coef, &t.mono);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(const Coefficient& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.coef *= c;
      ring_->normalize(t.coef);
    }
    return r;
  }

  Polynomial times_monomial(const Coefficient& c, const Monomial& m) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.coef *= c;
      ring_->normalize(t.coef);
      t.mono = t.mono * m;
    }
    return r;
  }

  /// this - c * m * g in a single merge pass.
  Polynomial minus_multiple(const Coefficient& c, const Monomial& m, const Polynomial& g) const {
    return combine(g, -c, &m);
  }

  /// In place: the terms from index `pos` on become (those terms) - c * m * g.
  /// Terms before `pos` must all exceed c * m * g in the monomial order.
  void subtract_multiple_at(std::size_t pos, const Coefficient& c, const Monomial& m, const Polynomial& g) {
    std::vector<Term> tail;
    merge(std::span<const Term>(terms_).subspan(pos), g, -c, &m, tail);
    terms_.resize(pos);
    for (auto& t : tail) terms_.push_back(std::move(t));
  }

  Polynomial pow(unsigned n) const {
    Polynomial r = one(ring_);
    Polynomial base = *this;
    while (n != 0) {
      if (n & 1u) r *= base;
      n >>= 1;
      if (n != 0) base *= base;
    }
    return r;
  }

  /// Leading coefficient 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->inverse(leading_coefficient()));
  }

  /// Integer coefficients with gcd 1 and positive leading coefficient
  /// (characteristic 0); monic in characteristic p.
  Polynomial primitive() const {
    if (is_zero()) return *this;
    return scaled(primitive_factor());
  }

  /// The scalar s with scaled(s) == primitive(). Nonzero polynomials only.
  Coefficient primitive_factor() const {
    if (ring_->characteristic() != 0) return ring_->inverse(leading_coefficient());
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : terms_) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    }
    Coefficient s(den_lcm, num_gcd);
    s.canonicalize();
    if (leading_coefficient() < 0) s = -s;
    return s;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.ring_ != g.ring_ && !f.ring_->same_as(*g.ring_)) return false;
    if (f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
      if (f.terms_[i].coef != g.terms_[i].coef || !(f.terms_[i].mono == g.terms_[i].mono))
        return false;
    return true;
  }

  /// Canonical text form, e.g. "x^2-1/2*x*y+3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      Coefficient c = t.coef;
      bool neg = c < 0;
      if (neg) c = -c;
      if (neg) out += '-';
      else if (k != 0) out += '+';
      std::string mono = monomial_string(t.mono);
      if (mono.empty()) {
        out += c.get_str();
      } else {
        if (c != 1) out += c.get_str() + "*";
        out += mono;
      }
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += ring_->variable(i);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
  }

 private:
  // this + c * (m * g); m == nullptr means m = 1. Both inputs are sorted, and
  // multiplying by a monomial preserves the order, so a linear merge suffices.
  Polynomial combine(const Polynomial& g, const Coefficient& c, const Monomial* m) const {
    Polynomial r(ring_);
    merge(terms_, g, c, m, r.terms_);
    return r;
  }

  // out = a + c * m * g by a linear merge (m == nullptr means m = 1).
  void merge(std::span<const Term> a, const Polynomial& g, const Coefficient& c, const Monomial* m,
             std::vector<Term>& out) const {
    const auto& ord = ring_->order();
    out.reserve(a.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    auto scaled_term = [&](const Term& t) {
      Term s{t.coef * c, m ? t.mono * *m : t.mono};
      ring_->normalize(s.coef);
      return s;
    };
    while (i < a.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Term s = scaled_term(g.terms_[j]);
      if (i == a.size()) {
        if (s.coef != 0) out.push_back(std::move(s));
        ++j;
        continue;
      }
      int cmp = ord.compare(a[i].mono, s.mono);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        if (s.coef != 0) out.push_back(std::move(s));
        ++j;
      } else {
        Coefficient sum = a[i].coef + s.coef;
        ring_->normalize(sum);
        if (sum != 0) out.push_back({std::move(sum), std::move(s.mono)});
        ++i;
        ++j;
      }
    }
  }

  void canonicalize() {
    for (auto& t : terms_) {
      if (t.mono.size() != ring_->nvars()) throw PreconditionError("monomial length mismatch");
      ring_->normalize(t.coef);
    }
    const auto& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coef += t.coef;
        ring_->normalize(out.back().coef);
      } else {
        if (!out.empty() && out.back().coef == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Formal partial derivative with respect to variable i. Characteristic 0 only.
inline Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  f.ring()->require_char0("partial_derivative");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono[i] == 0) continue;
    std::vector<Monomial::exponent_type> e(t.mono.exponents().begin(), t.mono.exponents().end());
    Coefficient c = t.coef * e[i];
    --e[i];
    out.push_back({std::move(c), Monomial(std::move(e))});
  }
  return Polynomial(f.ring(), std::move(out));
}

inline Polynomial partial_derivative(const Polynomial& f, const std::string& var) {
  auto i = f.ring()->index_of(var);
  if (!i) throw PreconditionError("unknown variable '" + var + "'");
  return partial_derivative(f, *i);
}

/// Ring homomorphism x_i -> images[i] into the images' ring.
inline Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images,
                             const RingPtr& target) {
  if (images.size() != f.ring()->nvars())
    throw PreconditionError("substitution needs one image per variable");
  for (const auto& img : images) require_same_ring(img.ring(), target);
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(Polynomial::one(target));
    while (p.size() <= e) p.push_back(p.back() * images[i]);
    return p[e];
  };
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) term *= power(i, t.mono[i]);
    out += term;
  }
  return out;
}

/// Re-expresses f in `target`, matching variables by name. Variables of f that
/// do not occur in `target` must not appear in f.
inline Polynomial change_ring(const Polynomial& f, const RingPtr& target) {
  if (f.ring() == target) return f;
  const auto& src = *f.ring();
  if (src.characteristic() != target->characteristic())
    throw RingMismatch("characteristic differs");
  std::vector<std::optional<std::size_t>> map(src.nvars());
  for (std::size_t i = 0; i < src.nvars(); ++i) map[i] = target->index_of(src.variable(i));
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Monomial::exponent_type> e(target->nvars(), 0);
    for (std::size_t i = 0; i < src.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw RingMismatch("variable '" + src.variable(i) + "' missing in target ring");
      e[*map[i]] = t.mono[i];
    }
    out.push_back({t.coef, Monomial(std::move(e))});
  }
  return Polynomial(target, std::move(out));
}

/// Linear change of coordinates: each mapped variable goes to a polynomial of
/// degree at most one in `target`; unmapped variables keep their name.
inline Polynomial substitute_linear(const Polynomial& f,
                                    const std::map<std::string, Polynomial>& map,
                                    const RingPtr& target) {
  const auto& src = *f.ring();
  for (const auto& [name, img] : map) {
    if (!src.index_of(name)) throw PreconditionError("undefined variable '" + name + "' in map");
    require_same_ring(img.ring(), target);
    if (img.total_degree() > 1)
      throw PreconditionError("image of '" + name + "' is not of degree at most one");
  }
  std::vector<Polynomial> images;
  images.reserve(src.nvars());
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    auto it = map.find(src.variable(i));
    if (it != map.end()) {
      images.push_back(it->second);
    } else {
      auto j = target->index_of(src.variable(i));
      if (!j) throw PreconditionError("variable '" + src.variable(i) + "' has no image");
      images.push_back(Polynomial::variable(target, *j));
    }
  }
  return substitute(f, images, target);
}

/// Exact quotient f / g; throws if g does not divide f.
inline Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw Error("division by zero polynomial");
  const auto& ring = f.ring();
  Polynomial q(ring), r = f;
  Coefficient inv = ring->inverse(g.leading_coefficient());
  while (!r.is_zero()) {
    const auto& lt = r.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) throw Error("polynomial is not divisible");
    Coefficient c = lt.coef * inv;
    ring->normalize(c);
    Monomial m = lt.mono / g.leading_monomial();
    q = q + Polynomial::monomial(ring, c, m);
    r = r.minus_multiple(c, m, g);
  }
  return q;
}

}  // namespace intcl

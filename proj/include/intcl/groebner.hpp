#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "intcl/errors.hpp"
#include "intcl/polynomial.hpp"

namespace intcl {

/// Caps on a single Buchberger run. Exceeding either raises ResourceLimitError.
struct GroebnerLimits {
  std::size_t max_pairs = 2'000'000;
  std::size_t max_terms = 500'000;
  std::size_t max_coefficient_bits = 1'000'000;  // numerators of stored basis elements
};

/// Limits in effect for the calling thread.
inline GroebnerLimits& current_groebner_limits() {
  thread_local GroebnerLimits limits;
  return limits;
}

/// Installs limits for the lifetime of the guard.
class ScopedGroebnerLimits {
 public:
  explicit ScopedGroebnerLimits(GroebnerLimits limits) : saved_(current_groebner_limits()) {
    current_groebner_limits() = limits;
  }
  ~ScopedGroebnerLimits() { current_groebner_limits() = saved_; }
  ScopedGroebnerLimits(const ScopedGroebnerLimits&) = delete;
  ScopedGroebnerLimits& operator=(const ScopedGroebnerLimits&) = delete;

 private:
  GroebnerLimits saved_;
};

/// Remainder of multivariate division of f by G: no term of the result is
/// divisible by a leading monomial of G. Divisors are tried in list order.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G) {
  const auto& ring = f.ring();
  for (const auto& g : G) require_same_ring(g.ring(), ring);
  Polynomial r = f;
  std::size_t pos = 0;
  while (pos < r.size()) {
    const Term& t = r.terms()[pos];
    const Polynomial* div = nullptr;
    for (const auto& g : G)
      if (!g.is_zero() && g.leading_monomial().divides(t.mono)) {
        div = &g;
        break;
      }
    if (div) {
      Coefficient c = t.coef * ring->inverse(div->leading_coefficient());
      ring->normalize(c);
      Monomial m = t.mono / div->leading_monomial();
      r.subtract_multiple_at(pos, c, m, *div);
    } else {
      ++pos;
    }
  }
  return r;
}

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// f = sum quotients[k] * G[k] + remainder, remainder as in normal_form.
inline Division divide(const Polynomial& f, std::span<const Polynomial> G) {
  const auto& ring = f.ring();
  Division d{std::vector<Polynomial>(G.size(), Polynomial(ring)), Polynomial(ring)};
  Polynomial r = f;
  std::size_t pos = 0;
  while (pos < r.size()) {
    const Term& t = r.terms()[pos];
    std::size_t k = 0;
    while (k < G.size() && (G[k].is_zero() || !G[k].leading_monomial().divides(t.mono))) ++k;
    if (k == G.size()) {
      ++pos;
      continue;
    }
    Coefficient c = t.coef * ring->inverse(G[k].leading_coefficient());
    ring->normalize(c);
    Monomial m = t.mono / G[k].leading_monomial();
    d.quotients[k] += Polynomial::monomial(ring, c, m);
    r.subtract_multiple_at(pos, c, m, G[k]);
  }
  d.remainder = std::move(r);
  return d;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& ring = f.ring();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_monomial(ring->inverse(f.leading_coefficient()), l / f.leading_monomial());
  return a.minus_multiple(ring->inverse(g.leading_coefficient()), l / g.leading_monomial(), g);
}

/// Reduced Gröbner basis: monic, sorted ascending by leading monomial.
/// The zero ideal has an empty basis; the unit ideal has basis {1}.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> polys)
      : ring_(std::move(ring)), polys_(std::move(polys)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& polys() const { return polys_; }
  bool is_unit() const { return polys_.size() == 1 && polys_[0].is_constant(); }
  bool is_zero_ideal() const { return polys_.empty(); }

  Polynomial reduce(const Polynomial& f) const { return normal_form(f, polys_); }
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& p : polys_) out.push_back(p.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_->same_as(*b.ring_) && a.polys_ == b.polys_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> polys_;
};

/// A Gröbner basis together with the expression of each element in terms of
/// the input generators: basis[k] = sum_j cofactors[k][j] * gens[j].
struct LiftedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};

namespace detail {

struct CriticalPair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

// Normal strategy: smallest lcm degree first, ties broken by lexicographic
// comparison of the lcm exponent vectors, then by indices.
struct PairLess {
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (!(a.lcm == b.lcm)) return lex_less(a.lcm, b.lcm);
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, std::size_t ngens, bool track)
      : ring_(std::move(ring)),
        limits_(current_groebner_limits()),
        ngens_(ngens),
        track_(track),
        integral_(ring_->characteristic() == 0) {}

  void run(std::span<const Polynomial> gens) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      require_same_ring(gens[j].ring(), ring_);
      std::vector<Polynomial> cof;
      if (track_) {
        cof.assign(ngens_, Polynomial(ring_));
        cof[j] = Polynomial::one(ring_);
      }
      Polynomial h = reduce(gens[j], cof);
      if (!h.is_zero()) insert(std::move(h), std::move(cof));
      if (unit_) return;
    }
    while (!pairs_.empty()) {
      if (++processed_ > limits_.max_pairs)
        throw ResourceLimitError("Groebner basis: pair limit " + std::to_string(limits_.max_pairs) +
                                 " exceeded");
      CriticalPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      std::vector<Polynomial> cof;
      Polynomial s = spoly(p, cof);
      Polynomial h = reduce(s, cof);
      if (!h.is_zero()) insert(std::move(h), std::move(cof));
      if (unit_) return;
    }
  }

  std::vector<Polynomial> reduced() const {
    std::vector<Polynomial> basis;
    for (std::size_t k = 0; k < G_.size(); ++k)
      if (active_[k]) basis.push_back(G_[k]);
    if (unit_) return {Polynomial::one(ring_)};
    // Leading monomials are already minimal; interreduce the tails.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.push_back(basis[l]);
      const Term& lt = basis[k].leading_term();
      std::vector<Term> tail(basis[k].terms().begin() + 1, basis[k].terms().end());
      Polynomial t = normal_form(Polynomial(ring_, std::move(tail)), others);
      basis[k] = (Polynomial::monomial(ring_, lt.coef, lt.mono) + t).monic();
    }
    const auto& ord = ring_->order();
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    return basis;
  }

  LiftedBasis lifted() const {
    LiftedBasis out;
    for (std::size_t k = 0; k < G_.size(); ++k)
      if (active_[k]) {
        out.basis.push_back(G_[k]);
        out.cofactors.push_back(cof_[k]);
      }
    return out;
  }

 private:
  // Multipliers (u, v) with u * a == v * b. Over Q they are the cofactors of
  // gcd(a, b) when a and b are integers, so reductions stay fraction-free.
  std::pair<Coefficient, Coefficient> cancel(const Coefficient& a, const Coefficient& b) const {
    if (!integral_) return {ring_->inverse(a), ring_->inverse(b)};
    if (a.get_den() != 1 || b.get_den() != 1) return {b, a};
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    return {Coefficient(b.get_num() / d), Coefficient(a.get_num() / d)};
  }

  void scale(Polynomial& r, std::vector<Polynomial>& cof, const Coefficient& s) const {
    if (s == 1) return;
    r = r.scaled(s);
    if (track_)
      for (auto& c : cof) c = c.scaled(s);
  }

  Polynomial spoly(const CriticalPair& p, std::vector<Polynomial>& cof) {
    const auto& f = G_[p.i];
    const auto& g = G_[p.j];
    Monomial mf = p.lcm / f.leading_monomial(), mg = p.lcm / g.leading_monomial();
    auto [cf, cg] = cancel(f.leading_coefficient(), g.leading_coefficient());
    if (track_) {
      cof.assign(ngens_, Polynomial(ring_));
      for (std::size_t j = 0; j < ngens_; ++j)
        cof[j] = cof_[p.i][j].times_monomial(cf, mf).minus_multiple(cg, mg, cof_[p.j][j]);
    }
    return f.times_monomial(cf, mf).minus_multiple(cg, mg, g);
  }

  // Full reduction against the active basis elements. Over Q the working
  // polynomial is kept integral and its content is removed periodically.
  Polynomial reduce(const Polynomial& f, std::vector<Polynomial>& cof) {
    Polynomial r = f;
    if (r.is_zero()) return r;
    if (integral_) scale(r, cof, r.primitive_factor());
    std::size_t pos = 0, steps = 0;
    while (pos < r.size()) {
      if (r.size() > limits_.max_terms)
        throw ResourceLimitError("Groebner basis: polynomial length limit " +
                                 std::to_string(limits_.max_terms) + " exceeded");
      const Term& t = r.terms()[pos];
      std::size_t k = 0;
      while (k < G_.size() && !(active_[k] && G_[k].leading_monomial().divides(t.mono))) ++k;
      if (k == G_.size()) {
        ++pos;
        continue;
      }
      Monomial m = t.mono / G_[k].leading_monomial();
      Coefficient c;
      if (integral_) {
        auto [u, v] = cancel(t.coef, G_[k].leading_coefficient());
        scale(r, cof, u);
        c = std::move(v);
      } else {
        c = t.coef * ring_->inverse(G_[k].leading_coefficient());
        ring_->normalize(c);
      }
      if (track_)
        for (std::size_t j = 0; j < ngens_; ++j)
          if (!cof_[k][j].is_zero()) cof[j] = cof[j].minus_multiple(c, m, cof_[k][j]);
      r.subtract_multiple_at(pos, c, m, G_[k]);
      if (integral_ && ++steps % 8 == 0 && !r.is_zero()) scale(r, cof, r.primitive_factor());
    }
    return r;
  }

  // Gebauer–Möller update with the product and chain criteria. Elements are
  // stored primitive over Q and monic over GF(p).
  void insert(Polynomial h, std::vector<Polynomial> cof) {
    scale(h, cof, h.primitive_factor());
    for (const auto& t : h.terms())
      if (mpz_sizeinbase(t.coef.get_num_mpz_t(), 2) > limits_.max_coefficient_bits)
        throw ResourceLimitError("Groebner basis: coefficient size limit " +
                                 std::to_string(limits_.max_coefficient_bits) + " bits exceeded");
    const std::size_t k = G_.size();
    const Monomial lh = h.leading_monomial();
    if (h.is_constant()) unit_ = true;

    std::vector<CriticalPair> C;
    for (std::size_t i = 0; i < k; ++i)
      if (active_[i]) C.push_back({i, k, lcm(G_[i].leading_monomial(), lh)});

    std::vector<CriticalPair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const auto& p = C[a];
      bool keep = G_[p.i].leading_monomial().coprime_with(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const auto& l = it->lcm;
      if (lh.divides(l) && !(lcm(G_[it->i].leading_monomial(), lh) == l) &&
          !(lcm(G_[it->j].leading_monomial(), lh) == l))
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (auto& p : D)
      if (!G_[p.i].leading_monomial().coprime_with(lh)) pairs_.insert(std::move(p));

    for (std::size_t i = 0; i < k; ++i)
      if (active_[i] && lh.divides(G_[i].leading_monomial())) active_[i] = false;

    G_.push_back(std::move(h));
    cof_.push_back(std::move(cof));
    active_.push_back(true);
    if (unit_) {
      for (std::size_t i = 0; i < k; ++i) active_[i] = false;
      pairs_.clear();
    }
  }

  RingPtr ring_;
  GroebnerLimits limits_;
  std::size_t ngens_;
  bool track_;
  bool integral_;
  std::vector<Polynomial> G_;
  std::vector<std::vector<Polynomial>> cof_;
  std::vector<bool> active_;
  std::set<CriticalPair, PairLess> pairs_;
  std::size_t processed_ = 0;
  bool unit_ = false;
};

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by `gens` in the monomial
/// order of `ring`. Independent of the order of `gens`.
inline GroebnerBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens) {
  detail::Buchberger b(ring, gens.size(), false);
  b.run(gens);
  return GroebnerBasis(ring, b.reduced());
}

inline GroebnerBasis groebner_basis(std::span<const Polynomial> gens) {
  if (gens.empty()) throw PreconditionError("groebner_basis: empty generator list needs a ring");
  return groebner_basis(gens.front().ring(), gens);
}

/// A (not necessarily reduced) Gröbner basis with cofactors over `gens`.
inline LiftedBasis lifted_groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens) {
  detail::Buchberger b(ring, gens.size(), true);
  b.run(gens);
  return b.lifted();
}

/// Buchberger criterion: every S-polynomial of G reduces to zero modulo G.
inline bool is_groebner_basis(std::span<const Polynomial> G) {
  if (G.empty()) throw PreconditionError("is_groebner_basis: empty list");
  for (const auto& g : G)
    if (g.is_zero()) throw PreconditionError("is_groebner_basis: zero polynomial in list");
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
  return true;
}

}  // namespace intcl

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "intcl/errors.hpp"
#include "intcl/groebner.hpp"
#include "intcl/matrix.hpp"
#include "intcl/polynomial.hpp"
#include "intcl/ring.hpp"
#include "intcl/univariate.hpp"

namespace intcl {

/// Ideal of a (quotient) ring given by generators. The reduced Gröbner basis
/// of gens + relations is computed on first use and shared between copies.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    std::set<std::string> seen;
    for (const auto& g : gens) {
      require_same_ring(g.ring(), ring_.base());
      if (g.is_zero()) continue;
      Polynomial p = g.primitive();
      if (seen.insert(p.to_string()).second) gens_.push_back(std::move(p));
    }
  }

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring) {
    auto one = Polynomial::one(ring.base());
    return Ideal(std::move(ring), {one});
  }

  const Ring& ring() const { return ring_; }
  const RingPtr& base() const { return ring_.base(); }
  const std::vector<Polynomial>& gens() const { return gens_; }

  /// Generators together with the ring relations (the preimage ideal).
  std::vector<Polynomial> preimage_gens() const {
    std::vector<Polynomial> all = gens_;
    all.insert(all.end(), ring_.relations().begin(), ring_.relations().end());
    return all;
  }

  const GroebnerBasis& groebner() const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->gb) {
      auto all = preimage_gens();
      cache_->gb = std::make_shared<const GroebnerBasis>(groebner_basis(base(), all));
    }
    return *cache_->gb;
  }

  bool contains(const Polynomial& f) const {
    require_same_ring(f.ring(), base());
    return groebner().contains(f);
  }

  bool is_unit() const { return groebner().is_unit(); }

  /// Zero as an ideal of the ring (every generator lies in the relations).
  bool is_zero() const {
    if (gens_.empty()) return true;
    if (!ring_.is_quotient()) return false;
    auto rel = groebner_basis(base(), ring_.relations());
    return std::all_of(gens_.begin(), gens_.end(), [&](const Polynomial& g) { return rel.contains(g); });
  }

  /// Reduced Gröbner basis, integer-cleared with positive leading
  /// coefficients, ascending by leading monomial.
  std::vector<Polynomial> canonical_gens() const {
    std::vector<Polynomial> out;
    for (const auto& p : groebner().polys()) out.push_back(p.primitive());
    return out;
  }

  std::vector<std::string> canonical_strings() const {
    std::vector<std::string> out;
    for (const auto& p : canonical_gens()) out.push_back(p.to_string());
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ")";
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const GroebnerBasis> gb;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline void require_same_ring(const Ideal& a, const Ideal& b) { require_same_ring(a.ring(), b.ring()); }

/// A name not used by `ring`, derived from `base`.
inline std::string fresh_variable(const PolynomialRing& ring, std::string base) {
  while (ring.index_of(base)) base += "'";
  return base;
}

namespace detail {

/// Generators of (gens) ∩ k[target variables], where `eliminate` lists the
/// variables (by index in the gens' ring) to remove. Uses a block order with
/// the eliminated variables first and grevlex inside each block.
inline std::vector<Polynomial> eliminate_variables(std::span<const Polynomial> gens,
                                                   const RingPtr& ring,
                                                   const std::vector<std::size_t>& eliminate,
                                                   const RingPtr& target) {
  std::vector<bool> drop(ring->nvars(), false);
  for (auto i : eliminate) drop.at(i) = true;
  std::vector<std::string> names;
  for (auto i : eliminate) names.push_back(ring->variable(i));
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!drop[i]) names.push_back(ring->variable(i));
  auto elim_ring = PolynomialRing::make(names, MonomialOrder::block(eliminate.size()), ring->characteristic());
  std::vector<Polynomial> mapped;
  for (const auto& g : gens) mapped.push_back(change_ring(g, elim_ring));
  auto gb = groebner_basis(elim_ring, mapped);
  std::vector<Polynomial> out;
  for (const auto& p : gb.polys()) {
    bool free = true;
    for (std::size_t i = 0; i < eliminate.size() && free; ++i) free = !p.involves(i);
    if (free) out.push_back(change_ring(p, target));
  }
  return out;
}

/// Drops generators that lie in the ideal of the ones kept before them
/// (processed by ascending degree, then length).
inline std::vector<Polynomial> trim_generators(const Ring& ring, std::vector<Polynomial> polys) {
  for (auto& p : polys) p = p.primitive();
  std::stable_sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.size() < b.size();
  });
  std::vector<Polynomial> kept;
  std::vector<Polynomial> basis = ring.relations();
  GroebnerBasis gb = groebner_basis(ring.base(), basis);
  for (auto& p : polys) {
    if (p.is_zero() || gb.contains(p)) continue;
    kept.push_back(p);
    std::vector<Polynomial> next = gb.polys();
    next.push_back(p);
    gb = groebner_basis(ring.base(), next);
    if (gb.is_unit()) return {Polynomial::one(ring.base())};
  }
  return kept;
}

constexpr std::size_t kTrimThreshold = 16;

inline Ideal make_trimmed(const Ring& ring, std::vector<Polynomial> polys) {
  if (polys.size() > kTrimThreshold) polys = trim_generators(ring, std::move(polys));
  return Ideal(ring, std::move(polys));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ideal algebra

inline Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  auto g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(g));
}

inline Ideal product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> g;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(a * b);
  return detail::make_trimmed(I.ring(), std::move(g));
}

/// I^n; products over multisets of generators. I^0 = (1).
inline Ideal power(const Ideal& I, int n) {
  if (n < 0) throw PreconditionError("negative ideal power");
  if (n == 0) return Ideal::unit(I.ring());
  const auto& gens = I.gens();
  std::vector<Polynomial> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  if (gens.empty()) return Ideal::zero(I.ring());
  while (true) {
    Polynomial p = gens[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) p *= gens[idx[k]];
    out.push_back(std::move(p));
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t l = k; l < idx.size(); ++l) idx[l] = idx[k - 1];
  }
  return detail::make_trimmed(I.ring(), std::move(out));
}

inline bool contains(const Ideal& I, const Polynomial& f) { return I.contains(f); }

/// I ⊆ J.
inline bool is_subset(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  return std::all_of(I.gens().begin(), I.gens().end(), [&](const Polynomial& g) { return J.contains(g); });
}

/// Equality of reduced Gröbner bases (relations adjoined on both sides).
inline bool equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  return I.groebner() == J.groebner();
}

inline Ideal principal(const Ring& ring, const Polynomial& f) { return Ideal(ring, {f}); }

/// I ∩ J by eliminating t from t·I + (1 − t)·J.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  const auto& base = I.base();
  if (I.gens().empty() || J.gens().empty()) return Ideal::zero(I.ring());
  std::vector<std::string> names{fresh_variable(*base, "t")};
  names.insert(names.end(), base->variables().begin(), base->variables().end());
  auto ext = PolynomialRing::make(names, MonomialOrder::block(1), base->characteristic());
  auto t = Polynomial::variable(ext, 0);
  auto one_minus_t = Polynomial::one(ext) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.preimage_gens()) gens.push_back(t * change_ring(g, ext));
  for (const auto& g : J.preimage_gens()) gens.push_back(one_minus_t * change_ring(g, ext));
  auto gb = groebner_basis(ext, gens);
  std::vector<Polynomial> out;
  for (const auto& p : gb.polys())
    if (!p.involves(0)) out.push_back(change_ring(p, base));
  return Ideal(I.ring(), std::move(out));
}

/// I : (g) = (I ∩ (g)) / g. Over a quotient ring the preimage is
/// (I + relations) : g, so the intersection is taken in the polynomial ring
/// with the bare principal ideal.
inline Ideal colon(const Ideal& I, const Polynomial& g) {
  require_same_ring(g.ring(), I.base());
  if (I.contains(g)) return Ideal::unit(I.ring());
  Ring S(I.base());
  Ideal meet = intersect(Ideal(S, I.preimage_gens()), principal(S, g));
  std::vector<Polynomial> out;
  for (const auto& p : meet.gens()) out.push_back(exact_quotient(p, g));
  return Ideal(I.ring(), std::move(out));
}

/// I : J = ∩ over generators g of J of I : (g).
inline Ideal colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (J.is_zero()) throw PreconditionError("colon by the zero ideal");
  if (J.is_unit()) return I;
  // Use whichever of the given generators or the reduced basis is shorter.
  std::vector<Polynomial> dens = J.gens();
  if (J.groebner().polys().size() < dens.size()) dens = J.groebner().polys();
  std::optional<Ideal> acc;
  for (const auto& g : dens) {
    if (I.contains(g)) continue;
    Ideal q = colon(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return acc ? *acc : Ideal::unit(I.ring());
}

/// I : J^∞ as the stabilized chain I ⊆ I:J ⊆ I:J^2 ⊆ ...
inline Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  while (true) {
    Ideal next = colon(cur, J);
    if (equal(next, cur)) return cur;
    cur = next;
  }
}

/// I ∩ k[keep], as an ideal of the polynomial ring in the kept variables
/// (listed in the original order).
inline Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep) {
  const auto& base = I.base();
  std::vector<bool> kept(base->nvars(), false);
  for (const auto& v : keep) {
    auto i = base->index_of(v);
    if (!i) throw PreconditionError("eliminate: unknown variable '" + v + "'");
    kept[*i] = true;
  }
  std::vector<std::size_t> elim;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < base->nvars(); ++i) {
    if (kept[i]) names.push_back(base->variable(i));
    else elim.push_back(i);
  }
  auto target = PolynomialRing::make(names, MonomialOrder::grevlex(), base->characteristic());
  auto gens = I.preimage_gens();
  return Ideal(Ring(target), detail::eliminate_variables(gens, base, elim, target));
}

// ---------------------------------------------------------------------------
// Syzygies and Fitting ideals

/// Columns generate the first syzygy module of `gens` (over the quotient ring
/// when relations are given): Schreyer syzygies of a lifted Gröbner basis,
/// pruned by the chain criterion and pulled back to the generators.
inline PolyMatrix syzygy_matrix(const Ring& ring, std::span<const Polynomial> gens) {
  const auto& base = ring.base();
  const std::size_t q = gens.size();
  for (const auto& g : gens) {
    require_same_ring(g.ring(), base);
    if (g.is_zero()) throw PreconditionError("syzygy_matrix: zero generator");
  }
  std::vector<Polynomial> all(gens.begin(), gens.end());
  all.insert(all.end(), ring.relations().begin(), ring.relations().end());
  const std::size_t total = all.size();
  if (total <= 1) return PolyMatrix(base, q, 0);

  LiftedBasis lb = lifted_groebner_basis(base, all);
  const auto& G = lb.basis;
  const auto& A = lb.cofactors;
  const std::size_t s = G.size();

  std::vector<std::vector<Polynomial>> columns;
  auto pull_back = [&](const std::vector<Polynomial>& coords) {
    std::vector<Polynomial> col(total, Polynomial(base));
    for (std::size_t l = 0; l < s; ++l) {
      if (coords[l].is_zero()) continue;
      for (std::size_t j = 0; j < total; ++j)
        if (!A[l][j].is_zero()) col[j] += coords[l] * A[l][j];
    }
    return col;
  };

  std::vector<Monomial> lm;
  for (const auto& g : G) lm.push_back(g.leading_monomial());
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      Monomial l = lcm(lm[i], lm[j]);
      bool redundant = false;
      for (std::size_t k = 0; k < s && !redundant; ++k) {
        if (k == i || k == j || !lm[k].divides(l)) continue;
        redundant = !(lcm(lm[i], lm[k]) == l) && !(lcm(lm[j], lm[k]) == l);
      }
      if (redundant) continue;
      Coefficient ci = base->inverse(G[i].leading_coefficient());
      Coefficient cj = base->inverse(G[j].leading_coefficient());
      Division d = divide(s_polynomial(G[i], G[j]), G);
      if (!d.remainder.is_zero()) throw Error("syzygy_matrix: basis is not a Gröbner basis");
      std::vector<Polynomial> coords(s, Polynomial(base));
      coords[i] = Polynomial::monomial(base, ci, l / lm[i]);
      coords[j] = -Polynomial::monomial(base, cj, l / lm[j]);
      for (std::size_t k = 0; k < s; ++k) coords[k] -= d.quotients[k];
      columns.push_back(pull_back(coords));
    }
  }
  // Generators are combinations of the basis: e_j − (their expression).
  for (std::size_t j = 0; j < total; ++j) {
    Division d = divide(all[j], G);
    auto col = pull_back(d.quotients);
    for (auto& c : col) c = -c;
    col[j] += Polynomial::one(base);
    columns.push_back(std::move(col));
  }

  // Keep the generator rows, drop zero and repeated columns.
  std::vector<std::vector<Polynomial>> kept;
  std::set<std::string> seen;
  for (auto& col : columns) {
    col.resize(q, Polynomial(base));
    auto nz = std::find_if(col.begin(), col.end(), [](const Polynomial& p) { return !p.is_zero(); });
    if (nz == col.end()) continue;
    Coefficient inv = base->inverse(nz->leading_coefficient());
    std::string key;
    for (auto& c : col) {
      c = c.scaled(inv);
      key += c.to_string() + ";";
    }
    if (seen.insert(key).second) kept.push_back(std::move(col));
  }

  PolyMatrix m(base, q, kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c)
    for (std::size_t r = 0; r < q; ++r) m(r, c) = kept[c][r];

  // gens · M = 0 modulo the relations.
  auto rel = groebner_basis(base, ring.relations());
  for (const auto& v : row_times(gens, m))
    if (!rel.contains(v)) throw Error("syzygy_matrix: column does not annihilate the generators");
  return m;
}

inline PolyMatrix syzygy_matrix(const Ideal& I) { return syzygy_matrix(I.ring(), I.gens()); }

/// Ideal of k x k minors; I_0 = (1).
inline Ideal fitting_ideal(const Ring& ring, const PolyMatrix& m, std::size_t k) {
  require_same_ring(m.ring(), ring.base());
  if (k == 0) return Ideal::unit(ring);
  if (k > std::min(m.rows(), m.cols())) throw PreconditionError("fitting_ideal: k out of range");
  auto ms = minors(m, k);
  return Ideal(ring, detail::trim_generators(ring, std::move(ms)));
}

inline Ideal fitting_ideal(const PolyMatrix& m, std::size_t k) { return fitting_ideal(Ring(m.ring()), m, k); }

// ---------------------------------------------------------------------------
// Dimension

namespace detail {

// Smallest set of variables meeting the support of every monomial
// (complement of a maximal independent set of the leading-term ideal).
inline std::size_t min_transversal(std::size_t n, const std::vector<std::uint64_t>& supports) {
  for (std::size_t t = 0; t <= n; ++t) {
    bool found = false;
    for_each_subset(n, t, [&](Mask T) {
      if (found) return;
      found = std::all_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & T) != 0; });
    });
    if (found) return t;
  }
  return n;
}

}  // namespace detail

/// Krull dimension of R / I; −1 for the unit ideal.
inline int dimension(const Ideal& I) {
  const auto& gb = I.groebner();
  if (gb.is_unit()) return -1;
  const std::size_t n = I.base()->nvars();
  if (n > 63) throw PreconditionError("dimension: too many variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : gb.leading_monomials()) supports.push_back(m.support());
  return static_cast<int>(n - detail::min_transversal(n, supports));
}

/// Codimension in the polynomial ring; the unit ideal gets #vars by convention.
inline int height(const Ideal& I) {
  if (I.ring().is_quotient()) throw PreconditionError("height is only defined here for polynomial rings");
  const int n = static_cast<int>(I.base()->nvars());
  if (I.is_unit()) return n;
  return n - dimension(I);
}

// ---------------------------------------------------------------------------
// Radicals

/// f ∈ √I iff 1 ∈ I + (1 − z f) with z a new variable.
inline bool radical_membership(const Polynomial& f, const Ideal& I) {
  const auto& base = I.base();
  require_same_ring(f.ring(), base);
  if (f.is_zero()) return true;
  auto names = base->variables();
  names.push_back(fresh_variable(*base, "z"));
  auto ext = PolynomialRing::make(names, MonomialOrder::grevlex(), base->characteristic());
  std::vector<Polynomial> gens;
  for (const auto& g : I.preimage_gens()) gens.push_back(change_ring(g, ext));
  auto z = Polynomial::variable(ext, names.size() - 1);
  gens.push_back(Polynomial::one(ext) - z * change_ring(f, ext));
  return groebner_basis(ext, gens).is_unit();
}

/// √I for zero-dimensional I in characteristic 0: adjoin the squarefree part
/// of the minimal polynomial of every variable.
inline Ideal radical_zero_dim(const Ideal& I) {
  const auto& base = I.base();
  base->require_char0("radical_zero_dim");
  int d = dimension(I);
  if (d < 0) return I;
  if (d != 0) throw PreconditionError("radical_zero_dim: ideal is not zero-dimensional");
  auto gens = I.preimage_gens();
  std::vector<Polynomial> out = I.gens();
  for (std::size_t i = 0; i < base->nvars(); ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < base->nvars(); ++j)
      if (j != i) others.push_back(j);
    auto uni = detail::eliminate_variables(gens, base, others, base);
    if (uni.empty()) throw Error("radical_zero_dim: missing univariate polynomial");
    auto g = univariate::from_polynomial(uni.front(), i);
    out.push_back(univariate::to_polynomial(univariate::squarefree_part(g), base, i));
  }
  return Ideal(I.ring(), std::move(out));
}

enum class RadicalCheck { verified_partial, refuted };

struct RadicalVerification {
  RadicalCheck status = RadicalCheck::verified_partial;
  std::optional<Polynomial> offending;
  std::string reason;
};

/// I ⊆ C and C ⊆ √I generator-wise. Radicality of C itself is not certified.
inline RadicalVerification verify_radical_candidate(const Ideal& I, const Ideal& C) {
  require_same_ring(I, C);
  for (const auto& g : I.gens())
    if (!C.contains(g)) return {RadicalCheck::refuted, g, "generator of I not in candidate"};
  for (const auto& g : C.gens())
    if (!radical_membership(g, I)) return {RadicalCheck::refuted, g, "candidate generator not in radical"};
  return {};
}

// ---------------------------------------------------------------------------
// Unmixedness and generic complete intersections

constexpr int kUnmixedAttempts = 20;

/// Height-unmixedness via I = J : (J : I) for a random complete intersection
/// J ⊆ I of the same height. Zero-dimensional ideals are unmixed outright.
inline bool is_unmixed(const Ideal& I, std::uint64_t seed) {
  if (I.ring().is_quotient()) throw PreconditionError("is_unmixed: polynomial rings only");
  if (I.is_unit() || I.gens().empty()) return true;
  const int m = height(I);
  if (dimension(I) == 0) return true;
  std::mt19937_64 rng(seed);
  static constexpr int kCoeffs[] = {-3, -2, -1, 1, 2, 3};
  for (int attempt = 0; attempt < kUnmixedAttempts; ++attempt) {
    std::vector<Polynomial> combos;
    for (int k = 0; k < m; ++k) {
      Polynomial c(I.base());
      for (const auto& g : I.gens()) c += g.scaled(kCoeffs[rng() % 6]);
      combos.push_back(c);
    }
    Ideal J(I.ring(), combos);
    if (J.gens().size() != static_cast<std::size_t>(m) || height(J) != m) continue;
    return equal(I, colon(J, colon(J, I)));
  }
  throw Error("is_unmixed: no complete intersection of height " + std::to_string(m) + " found in " +
              std::to_string(kUnmixedAttempts) + " attempts");
}

/// Height of the Fitting ideal I_{q−m}(φ) of a presentation is at least m + 1.
/// The unit ideal passes (it lies in no prime).
inline bool is_generically_ci(const Ideal& I) {
  if (I.ring().is_quotient()) throw PreconditionError("is_generically_ci: polynomial rings only");
  if (I.is_unit() || I.gens().empty()) return true;
  const int q = static_cast<int>(I.gens().size());
  const int m = height(I);
  const int k = q - m;
  if (k <= 0) return true;
  PolyMatrix phi = syzygy_matrix(I);
  if (static_cast<std::size_t>(k) > std::min(phi.rows(), phi.cols())) return false;
  Ideal F = fitting_ideal(I.ring(), phi, static_cast<std::size_t>(k));
  if (F.is_unit()) return true;
  if (F.gens().empty()) return false;
  return height(F) >= m + 1;
}

}  // namespace intcl

#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "intcl/closure.hpp"
#include "intcl/ideal.hpp"
#include "intcl/lp.hpp"

namespace intcl {

/// R[It] as R[T_1..T_n]/Q for I = (a_1..a_n).
struct ReesPresentation {
  Ring base;
  std::vector<Polynomial> generators;  // a_i
  RingPtr ring;                        // base variables, then T_1..T_n
  std::vector<std::string> t_names;
  Ideal presentation;                  // Q, an ideal of `ring`
  std::vector<std::string> trace;
};

namespace detail {

/// Names T1, T2, ... (or prefix-based) avoiding every name in `taken`.
inline std::vector<std::string> fresh_names(std::vector<std::string> taken, const std::string& prefix,
                                            std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) {
    std::string s = prefix + std::to_string(i);
    while (std::find(taken.begin(), taken.end(), s) != taken.end()) s += "'";
    taken.push_back(s);
    out.push_back(s);
  }
  return out;
}

inline std::string fresh_name(const std::vector<std::string>& taken, std::string s) {
  while (std::find(taken.begin(), taken.end(), s) != taken.end()) s += "'";
  return s;
}

}  // namespace detail

/// Q = (T_i - a_i t) ∩ R[T], with t eliminated. Over a quotient ring the
/// relations ride along, so Q is returned as a preimage in S[T].
inline ReesPresentation rees_presentation(const Ideal& I) {
  if (I.is_zero()) throw PreconditionError("rees_presentation: zero ideal");
  const auto& base = I.base();
  const std::size_t nv = base->nvars(), n = I.gens().size();
  auto tn = detail::fresh_names(base->variables(), "T", n);
  std::vector<std::string> taken = base->variables();
  taken.insert(taken.end(), tn.begin(), tn.end());
  std::string t = detail::fresh_name(taken, "t");

  // big ring: base vars, T's, t
  std::vector<std::string> big_names = taken;
  big_names.push_back(t);
  auto big = PolynomialRing::make(big_names, MonomialOrder::grevlex(), base->characteristic());
  auto target = PolynomialRing::make(taken, MonomialOrder::grevlex(), base->characteristic());
  auto tvar = Polynomial::variable(big, nv + n);

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(big, nv + i) - change_ring(I.gens()[i], big) * tvar);
  for (const auto& rel : I.ring().relations()) gens.push_back(change_ring(rel, big));
  auto q = detail::eliminate_variables(gens, big, {nv + n}, target);

  std::vector<Polynomial> rels;
  for (const auto& rel : I.ring().relations()) rels.push_back(change_ring(rel, target));
  ReesPresentation out{I.ring(), I.gens(), target, tn, Ideal(Ring(target, rels), q), {}};
  out.trace.push_back("eliminated " + t + " from " + std::to_string(gens.size()) + " generators");
  out.trace.push_back("presentation has " + std::to_string(q.size()) + " generators");

  // substitution check: T_i -> a_i t must kill Q modulo the relations
  std::vector<std::string> rt_names = base->variables();
  rt_names.push_back(t);
  auto rt = PolynomialRing::make(rt_names, MonomialOrder::grevlex(), base->characteristic());
  auto t_in_rt = Polynomial::variable(rt, nv);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < nv; ++i) images.push_back(Polynomial::variable(rt, i));
  for (std::size_t i = 0; i < n; ++i) images.push_back(change_ring(I.gens()[i], rt) * t_in_rt);
  std::vector<Polynomial> rt_rels;
  for (const auto& rel : I.ring().relations()) rt_rels.push_back(change_ring(rel, rt));
  auto rel_gb = groebner_basis(rt, rt_rels);
  for (const auto& g : q)
    if (!rel_gb.contains(substitute(g, images, rt))) throw Error("rees_presentation: substitution check failed");
  out.trace.push_back("substitution check passed");
  return out;
}

namespace detail {

inline bool homogeneous_of_degree(const Polynomial& f, std::uint64_t e) {
  for (const auto& t : f.terms())
    if (t.mono.degree() != e) return false;
  return !f.is_zero();
}

/// Rank of the Jacobian of `fs` at a few integer points: a lower bound for
/// the transcendence degree of k[fs] in characteristic 0.
inline std::size_t jacobian_rank_lower_bound(const RingPtr& ring, const std::vector<Polynomial>& fs) {
  std::mt19937_64 rng(kDefaultSeed);
  std::size_t best = 0;
  for (int attempt = 0; attempt < 3 && best < fs.size(); ++attempt) {
    std::vector<Polynomial> point;
    for (std::size_t j = 0; j < ring->nvars(); ++j)
      point.push_back(Polynomial::constant(ring, Coefficient(static_cast<long>(rng() % 101) - 50)));
    lp::Echelon ech(ring->nvars());
    for (const auto& f : fs) {
      std::vector<lp::Rational> row;
      for (std::size_t j = 0; j < ring->nvars(); ++j) {
        auto v = substitute(partial_derivative(f, j), point, ring);
        row.push_back(v.is_zero() ? lp::Rational(0) : v.leading_coefficient());
      }
      ech.add(std::move(row));
    }
    best = std::max(best, ech.rank());
  }
  return best;
}

/// Homogeneous relations of T-degree d among fs: the nullspace of the
/// coefficient matrix of the products f^α, |α| = d.
inline std::vector<Polynomial> relations_of_degree(const RingPtr& ring, const std::vector<Polynomial>& fs,
                                                   const RingPtr& target, std::uint32_t d) {
  const std::size_t n = fs.size();
  std::vector<std::vector<Monomial::exponent_type>> alphas;
  std::vector<Monomial::exponent_type> a(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      a[i] = left;
      alphas.push_back(a);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      a[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  if (alphas.size() > current_groebner_limits().max_terms)
    throw ResourceLimitError("kernel_of_ring_map: too many monomials in degree " + std::to_string(d));

  // f^α built from f^(α - e_i) f_i, memoized
  std::map<std::vector<Monomial::exponent_type>, Polynomial> memo;
  memo.emplace(std::vector<Monomial::exponent_type>(n, 0), Polynomial::one(ring));
  std::function<const Polynomial&(const std::vector<Monomial::exponent_type>&)> pw =
      [&](const std::vector<Monomial::exponent_type>& al) -> const Polynomial& {
    auto it = memo.find(al);
    if (it != memo.end()) return it->second;
    auto prev = al;
    std::size_t i = 0;
    while (prev[i] == 0) ++i;
    --prev[i];
    Polynomial v = pw(prev) * fs[i];
    return memo.emplace(al, std::move(v)).first->second;
  };

  std::unordered_map<Monomial, std::vector<lp::Rational>, MonomialHash> rows;
  for (std::size_t c = 0; c < alphas.size(); ++c)
    for (const auto& t : pw(alphas[c]).terms()) {
      auto [it, fresh] = rows.try_emplace(t.mono);
      if (fresh) it->second.assign(alphas.size(), lp::Rational(0));
      it->second[c] = t.coef;
    }
  lp::Echelon ech(alphas.size());
  for (auto& [m, row] : rows) ech.add(std::move(row));

  std::vector<Polynomial> out;
  for (const auto& v : ech.nullspace()) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < alphas.size(); ++c)
      if (v[c] != 0) terms.push_back({v[c], Monomial(alphas[c])});
    out.push_back(Polynomial(target, std::move(terms)).primitive());
  }
  return out;
}

}  // namespace detail

/// Defining ideal of k[f_1..f_n] inside k[T_1..T_n].
///
/// For forms of one common degree the kernel is homogeneous. A Jacobian of
/// rank n makes it zero; rank n-1 makes it a height one prime, hence
/// principal, generated by its lowest-degree element. Other inputs go
/// through elimination.
inline Ideal kernel_of_ring_map(const RingPtr& ring, const std::vector<Polynomial>& targets) {
  if (ring->characteristic() != 0) throw PreconditionError("kernel_of_ring_map: characteristic 0 required");
  const std::size_t nv = ring->nvars(), n = targets.size();
  for (const auto& f : targets) require_same_ring(f.ring(), ring);
  auto tn = detail::fresh_names(ring->variables(), "T", n);
  auto target = PolynomialRing::make(tn, MonomialOrder::grevlex(), 0);

  auto checked = [&](std::vector<Polynomial> k) {
    for (const auto& g : k)
      if (!substitute(g, targets, ring).is_zero()) throw Error("kernel_of_ring_map: substitution check failed");
    return Ideal(Ring(target), std::move(k));
  };

  const std::uint64_t e = n ? targets[0].total_degree() : 0;
  bool graded = n > 0 && e > 0;
  for (const auto& f : targets) graded = graded && detail::homogeneous_of_degree(f, e);
  if (graded) {
    auto rank = detail::jacobian_rank_lower_bound(ring, targets);
    if (rank == n) return Ideal::zero(Ring(target));
    if (rank + 1 == n) {
      // the generator has degree at most e^(n-2), the degree bound for the image
      std::uint64_t bound = 1;
      for (std::size_t i = 0; i + 2 < n && bound < 1'000'000; ++i) bound *= e;
      for (std::uint32_t d = 1; d <= bound; ++d) {
        auto rel = detail::relations_of_degree(ring, targets, target, d);
        if (rel.empty()) continue;
        if (rel.size() != 1) throw Error("kernel_of_ring_map: kernel of height one is not principal");
        return checked(std::move(rel));
      }
      throw Error("kernel_of_ring_map: no relation found below the degree bound");
    }
  }

  std::vector<std::string> names = ring->variables();
  names.insert(names.end(), tn.begin(), tn.end());
  auto big = PolynomialRing::make(names, MonomialOrder::grevlex(), 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(big, nv + i) - change_ring(targets[i], big));
  std::vector<std::size_t> elim(nv);
  for (std::size_t i = 0; i < nv; ++i) elim[i] = i;
  return checked(detail::eliminate_variables(gens, big, elim, target));
}

/// Smallest r <= rmax with I^{r+1} = J I^r.
inline std::optional<int> is_reduction(const Ideal& J, const Ideal& I, int rmax) {
  require_same_ring(J, I);
  if (rmax < 0) throw PreconditionError("is_reduction: rmax must be nonnegative");
  if (!is_subset(J, I)) throw PreconditionError("is_reduction: J is not contained in I");
  Ideal Ir = Ideal::unit(I.ring());
  for (int r = 0; r <= rmax; ++r) {
    Ideal next = product(Ir, I);
    if (equal(next, product(J, Ir))) return r;
    Ir = next;
  }
  return std::nullopt;
}

struct AscentStep {
  Ideal ideal;
  bool reduction_ok;  // I_k^2 == J I_k
};

/// I_k = J : radJ^k for k = 1..kmax.
inline std::vector<AscentStep> colon_ascent_chain(const Ideal& J, const Ideal& radJ, int kmax) {
  require_same_ring(J, radJ);
  if (kmax < 1) throw PreconditionError("colon_ascent_chain: kmax must be positive");
  auto v = verify_radical_candidate(J, radJ);
  if (v.status == RadicalCheck::refuted) throw PreconditionError("radical candidate refuted: " + v.reason);
  std::vector<AscentStep> out;
  Ideal mk = Ideal::unit(J.ring());
  for (int k = 1; k <= kmax; ++k) {
    mk = product(mk, radJ);
    Ideal Ik = colon(J, mk);
    if (!out.empty() && !is_subset(out.back().ideal, Ik)) throw Error("colon_ascent_chain: chain not ascending");
    if (!is_subset(J, Ik)) throw Error("colon_ascent_chain: J not contained in I_k");
    bool ok = equal(power(Ik, 2), product(J, Ik));
    out.push_back({std::move(Ik), ok});
  }
  return out;
}

constexpr int kDefaultPowerNmax = 3;

/// (a,b)^{n-1} Jbar == Jbar^n for n = 2..nmax.
inline bool power_closure_check(const Polynomial& a, const Polynomial& b, const Ideal& Jbar,
                                int nmax = kDefaultPowerNmax) {
  require_same_ring(a.ring(), Jbar.base());
  require_same_ring(b.ring(), Jbar.base());
  if (nmax < 2) throw PreconditionError("power_closure_check: nmax must be at least 2");
  Ideal ab(Jbar.ring(), {a, b});
  if (height(ab) != 2) throw PreconditionError("power_closure_check: (a, b) does not have height 2");
  if (!is_subset(ab, Jbar)) throw PreconditionError("power_closure_check: (a, b) not contained in Jbar");
  Ideal abp = Ideal::unit(Jbar.ring()), Jp = Jbar;
  for (int n = 2; n <= nmax; ++n) {
    abp = product(abp, ab);
    Jp = product(Jp, Jbar);
    if (!equal(product(abp, Jbar), Jp)) return false;
  }
  return true;
}

struct HypersurfaceNormality {
  int dim_hypersurface;  // dim V(g)
  int dim_singular;      // dim V(g, dg); -1 when empty
  bool normal() const { return dim_singular <= dim_hypersurface - 2; }
};

/// Jacobian criterion for k[T]/(g), g assumed irreducible by the caller.
inline HypersurfaceNormality hypersurface_normality_report(const Polynomial& g) {
  const auto& r = g.ring();
  if (r->characteristic() != 0) throw PreconditionError("hypersurface_normality: characteristic 0 required");
  if (g.total_degree() < 1) throw PreconditionError("hypersurface_normality: constant polynomial");
  Ring R(r);
  std::vector<Polynomial> sing{g};
  for (std::size_t i = 0; i < r->nvars(); ++i) sing.push_back(partial_derivative(g, i));
  return {dimension(principal(R, g)), dimension(Ideal(R, sing))};
}

inline bool hypersurface_normality(const Polynomial& g) { return hypersurface_normality_report(g).normal(); }

}  // namespace intcl

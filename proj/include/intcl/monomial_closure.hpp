#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "intcl/ideal.hpp"
#include "intcl/lp.hpp"

namespace intcl {

using Exponents = std::vector<long>;

/// Convex hull of the generator exponents plus the nonnegative orthant.
struct NewtonPolyhedron {
  std::vector<Exponents> generators;
  std::size_t dim = 0;

  NewtonPolyhedron(std::vector<Exponents> gens, std::size_t n) : generators(std::move(gens)), dim(n) {
    if (generators.empty()) throw PreconditionError("Newton polyhedron needs a generator");
    for (const auto& v : generators)
      if (v.size() != dim) throw PreconditionError("exponent vector has wrong length");
  }
};

inline Exponents exponents_of(const Monomial& m) {
  return Exponents(m.exponents().begin(), m.exponents().end());
}

/// Exponent vectors of the reduced Gröbner basis when every element is a
/// single term; nothing otherwise.
inline std::optional<std::vector<Exponents>> monomial_exponents(const Ideal& I) {
  std::vector<Exponents> out;
  for (const auto& g : I.groebner().polys()) {
    if (g.terms().size() != 1) return std::nullopt;
    out.push_back(exponents_of(g.leading_monomial()));
  }
  return out;
}

inline bool is_monomial_ideal(const Ideal& I) { return monomial_exponents(I).has_value(); }

namespace detail {

inline void check_dim(const Exponents& a, const NewtonPolyhedron& np) {
  if (a.size() != np.dim) throw PreconditionError("exponent vector has wrong length");
}

}  // namespace detail

/// a ∈ NP: λ ≥ 0, Σλ = 1, Σ λ_i v_i + s = a with slacks s ≥ 0.
inline bool np_membership(const Exponents& a, const NewtonPolyhedron& np) {
  detail::check_dim(a, np);
  const std::size_t m = np.generators.size(), n = np.dim;
  lp::Matrix A(n + 1, std::vector<lp::Rational>(m + n, lp::Rational(0)));
  std::vector<lp::Rational> b(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) A[j][i] = np.generators[i][j];
    A[j][m + j] = 1;
    b[j] = a[j];
  }
  for (std::size_t i = 0; i < m; ++i) A[n][i] = 1;
  b[n] = 1;
  return lp::feasible_point(std::move(A), std::move(b)).has_value();
}

/// Same decision through the dual side: a ∉ NP iff some weight w ≥ 0 with
/// Σw = 1 has w·a < min_i w·v_i. Variables (w, t), eliminated by FM.
inline bool np_membership_fm(const Exponents& a, const NewtonPolyhedron& np) {
  detail::check_dim(a, np);
  const std::size_t n = np.dim, nv = n + 1;
  if (n > 4) throw PreconditionError("Fourier-Motzkin check limited to n <= 4");
  std::vector<lp::Inequality> sys;
  auto row = [&] { return lp::Inequality{std::vector<lp::Rational>(nv, lp::Rational(0)), 0, false}; };
  for (std::size_t j = 0; j < n; ++j) {
    auto q = row();
    q.coef[j] = -1;
    sys.push_back(q);
  }
  for (const auto& v : np.generators) {
    auto q = row();  // t - w·v <= 0
    for (std::size_t j = 0; j < n; ++j) q.coef[j] = -v[j];
    q.coef[n] = 1;
    sys.push_back(q);
  }
  auto sep = row();  // w·a - t < 0
  for (std::size_t j = 0; j < n; ++j) sep.coef[j] = a[j];
  sep.coef[n] = -1;
  sep.strict = true;
  sys.push_back(sep);
  auto up = row(), down = row();
  for (std::size_t j = 0; j < n; ++j) {
    up.coef[j] = 1;
    down.coef[j] = -1;
  }
  up.rhs = 1;
  down.rhs = -1;
  sys.push_back(up);
  sys.push_back(down);
  return !lp::fm_feasible(std::move(sys), nv);
}

/// Divisibility-minimal elements.
inline std::vector<Exponents> minimalize(std::vector<Exponents> vs) {
  auto divides = [](const Exponents& u, const Exponents& v) {
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[j] > v[j]) return false;
    return true;
  };
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < vs.size() && minimal; ++k)
      if (k != i && divides(vs[k], vs[i])) minimal = false;
    if (minimal) out.push_back(vs[i]);
  }
  return out;
}

/// Minimal lattice points of NP, found in the box 0 <= a_j <= max_i v_ij.
/// The box suffices: every point of the hull has a_j <= max_i v_ij, so a
/// member above that bound stays a member after lowering a_j to it.
inline std::vector<Exponents> np_minimal_points(const NewtonPolyhedron& np) {
  const std::size_t n = np.dim;
  Exponents hi(n, 0);
  for (const auto& v : np.generators)
    for (std::size_t j = 0; j < n; ++j) hi[j] = std::max(hi[j], v[j]);

  // Enumerate by total degree so anything divisible by a found point is skipped.
  long top = 0;
  for (auto h : hi) top += h;
  std::vector<Exponents> found;
  Exponents a(n, 0);
  auto covered = [&](const Exponents& p) {
    for (const auto& f : found) {
      bool div = true;
      for (std::size_t j = 0; j < n && div; ++j) div = f[j] <= p[j];
      if (div) return true;
    }
    return false;
  };
  std::vector<Exponents> layer;
  for (long d = 0; d <= top; ++d) {
    layer.clear();
    // all a in the box with |a| = d
    std::function<void(std::size_t, long)> rec = [&](std::size_t j, long left) {
      if (j + 1 == n) {
        if (left > hi[j]) return;
        a[j] = left;
        layer.push_back(a);
        return;
      }
      for (long e = 0; e <= std::min(left, hi[j]); ++e) {
        a[j] = e;
        rec(j + 1, left - e);
      }
    };
    if (n == 0) {
      if (d == 0) layer.push_back(a);
    } else {
      rec(0, d);
    }
    for (const auto& p : layer)
      if (!covered(p) && np_membership(p, np)) found.push_back(p);
  }
  return minimalize(std::move(found));
}

/// Integral closure of a monomial ideal.
inline Ideal monomial_integral_closure(const Ideal& I) {
  if (I.ring().is_quotient()) throw PreconditionError("monomial closure needs a polynomial ring");
  auto ex = monomial_exponents(I);
  if (!ex) throw PreconditionError("ideal is not monomial");
  if (ex->empty()) return I;
  const auto& base = I.base();
  NewtonPolyhedron np(*ex, base->nvars());
  std::vector<Polynomial> gens;
  for (const auto& p : np_minimal_points(np)) {
    std::vector<Monomial::exponent_type> e(p.begin(), p.end());
    gens.push_back(Polynomial::monomial(base, Coefficient(1), Monomial(std::move(e))));
  }
  return Ideal(I.ring(), std::move(gens));
}

/// Is k·a ≥ (sum of k generator exponents) for some 1 <= k <= K?
/// A hit gives x^{ka} ∈ I^k, hence x^a integral over I.
inline bool brute_force_oracle(const Exponents& a, const std::vector<Exponents>& gens, int K) {
  if (K < 1) throw PreconditionError("oracle bound K must be positive");
  const std::size_t n = a.size();
  for (const auto& v : gens)
    if (v.size() != n) throw PreconditionError("exponent vector has wrong length");
  for (int k = 1; k <= K; ++k) {
    // partial sums only grow, so drop any that already exceed k·a
    std::set<Exponents> sums{Exponents(n, 0)};
    for (int step = 0; step < k && !sums.empty(); ++step) {
      std::set<Exponents> next;
      for (const auto& s : sums)
        for (const auto& v : gens) {
          Exponents t(n);
          bool ok = true;
          for (std::size_t j = 0; j < n && ok; ++j) {
            t[j] = s[j] + v[j];
            ok = t[j] <= k * a[j];
          }
          if (ok) next.insert(std::move(t));
        }
      sums = std::move(next);
    }
    if (!sums.empty()) return true;
  }
  return false;
}

}  // namespace intcl

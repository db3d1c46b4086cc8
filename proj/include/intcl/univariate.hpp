#pragma once

#include <vector>

#include "intcl/polynomial.hpp"

namespace intcl::univariate {

// Dense coefficients, index = degree, no trailing zeros. Characteristic 0.
using Dense = std::vector<Coefficient>;

inline void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Dense from_polynomial(const Polynomial& f, std::size_t var) {
  Dense a(f.degree_in(var) + 1, Coefficient(0));
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != t.mono[var]) throw PreconditionError("polynomial is not univariate");
    a[t.mono[var]] += t.coef;
  }
  trim(a);
  return a;
}

inline Polynomial to_polynomial(const Dense& a, const RingPtr& ring, std::size_t var) {
  std::vector<Term> t;
  for (std::size_t d = 0; d < a.size(); ++d)
    if (a[d] != 0) t.push_back({a[d], Monomial::variable(ring->nvars(), var, static_cast<Monomial::exponent_type>(d))});
  return Polynomial(ring, std::move(t));
}

inline Dense derivative(const Dense& a) {
  Dense d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  if (b.empty()) throw Error("univariate division by zero");
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Coefficient(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Coefficient c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline Dense monic(Dense a) {
  if (a.empty()) return a;
  Coefficient lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

inline Dense gcd(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

/// g / gcd(g, g'), monic.
inline Dense squarefree_part(const Dense& g) {
  if (g.size() <= 1) return monic(g);
  return monic(divmod(g, gcd(g, derivative(g))).first);
}

}  // namespace intcl::univariate

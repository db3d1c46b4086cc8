#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intcl/ideal.hpp"
#include "intcl/matrix.hpp"

namespace intcl {

constexpr std::uint64_t kDefaultSeed = 1;
constexpr int kDefaultWitnessRmax = 5;

enum class ClosureMethod { radical_formula, jacobian, gorenstein, automatic };
enum class CheckStatus { pass, fail, skipped };
enum class Verdict { closed, not_closed, inconclusive };
enum class JacobianVariant { minors_only, ideal_plus_minors };

inline const char* to_string(ClosureMethod m) {
  switch (m) {
    case ClosureMethod::radical_formula: return "radical-formula";
    case ClosureMethod::jacobian: return "jacobian";
    case ClosureMethod::gorenstein: return "gorenstein";
    case ClosureMethod::automatic: return "auto";
  }
  return "?";
}

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::closed: return "closed";
    case Verdict::not_closed: return "not-closed";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

inline const char* to_string(JacobianVariant v) {
  return v == JacobianVariant::minors_only ? "minors-only" : "ideal-plus-minors";
}

struct NamedIdeal {
  std::string name;
  Ideal ideal;
};

/// Outcome of is_integrally_closed. A verdict other than inconclusive is
/// only issued when every hypothesis the method needs has passed.
struct ClosednessReport {
  ClosureMethod method = ClosureMethod::automatic;
  std::map<std::string, CheckStatus> hypotheses;
  bool raw_result = false;
  Verdict verdict = Verdict::inconclusive;
  std::vector<NamedIdeal> witnesses;
  std::vector<std::string> notes;

  CheckStatus hypothesis(const std::string& name) const {
    auto it = hypotheses.find(name);
    return it == hypotheses.end() ? CheckStatus::skipped : it->second;
  }
};

// ---------------------------------------------------------------------------
// Radical-formula test

/// L = I : √I for a radical candidate that survives verification.
inline Ideal generic_socle(const Ideal& I, const Ideal& radI) {
  auto v = verify_radical_candidate(I, radI);
  if (v.status == RadicalCheck::refuted)
    throw PreconditionError("radical candidate refuted: " + v.reason +
                            (v.offending ? " (" + v.offending->to_string() + ")" : ""));
  return colon(I, radI);
}

struct RadicalFormula {
  bool holds;
  Ideal socle;    // L
  Ideal quotient; // IL : L^2
};

inline RadicalFormula radical_formula_test(const Ideal& I, const Ideal& radI) {
  Ideal L = generic_socle(I, radI);
  Ideal Q = colon(product(I, L), power(L, 2));
  return {equal(radI, Q), L, Q};
}

// ---------------------------------------------------------------------------
// Integral elements from a failed test

struct IntegralGrowth {
  Ideal socle;     // L
  Ideal unchanged; // B = IL : L^2, the components where I is already closed
  Ideal defect;    // C = √I : B
  Ideal grown;     // H = I : C
  bool certified;  // H^2 == I H
};

namespace detail {

inline IntegralGrowth grow_step(const Ideal& I, const Ideal& radI) {
  auto f = radical_formula_test(I, radI);
  Ideal C = colon(radI, f.quotient);
  Ideal H = colon(I, C);
  if (!is_subset(I, H)) throw Error("grow_integral_elements: I is not contained in H");
  bool certified = equal(power(H, 2), product(I, H));
  return {f.socle, f.quotient, C, H, certified};
}

inline CheckStatus run_check(const char* name, std::vector<std::string>& notes, auto&& check) {
  try {
    return check() ? CheckStatus::pass : CheckStatus::fail;
  } catch (const ResourceLimitError&) {
    throw;
  } catch (const Error& e) {
    notes.push_back(std::string(name) + " not decided: " + e.what());
    return CheckStatus::skipped;
  }
}

}  // namespace detail

/// H = I : (√I : (IL : L^2)), which contains I, with H^2 = IH certifying that
/// H is integral over I. Requires I unmixed and generically a complete
/// intersection.
inline IntegralGrowth grow_integral_elements(const Ideal& I, const Ideal& radI, std::uint64_t seed = kDefaultSeed) {
  if (!is_unmixed(I, seed)) throw PreconditionError("grow_integral_elements: ideal is not unmixed");
  if (!is_generically_ci(I))
    throw PreconditionError("grow_integral_elements: ideal is not generically a complete intersection");
  return detail::grow_step(I, radI);
}

enum class AscentStop { fixed_point, round_limit, mixed, uncertified };

inline const char* to_string(AscentStop s) {
  switch (s) {
    case AscentStop::fixed_point: return "fixed-point";
    case AscentStop::round_limit: return "round-limit";
    case AscentStop::mixed: return "partial-mixed";
    case AscentStop::uncertified: return "partial-uncertified";
  }
  return "?";
}

struct Ascent {
  std::vector<Ideal> chain;  // strictly ascending, chain[0] = I
  AscentStop stop;
};

/// Repeats grow_integral_elements while it enlarges the ideal. The first round
/// needs the full hypotheses; later rounds only require the new ideal to be
/// unmixed, and the chain stops (partial) at the first mixed one.
inline Ascent closure_ascent(const Ideal& I, const Ideal& radI, int max_rounds, std::uint64_t seed = kDefaultSeed) {
  Ascent out{{I}, AscentStop::round_limit};
  if (max_rounds <= 0) return out;
  if (!is_unmixed(I, seed)) throw PreconditionError("closure_ascent: ideal is not unmixed");
  if (!is_generically_ci(I))
    throw PreconditionError("closure_ascent: ideal is not generically a complete intersection");
  for (int round = 0; round < max_rounds; ++round) {
    const Ideal& cur = out.chain.back();
    auto step = detail::grow_step(cur, radI);
    if (equal(step.grown, cur)) {
      out.stop = AscentStop::fixed_point;
      return out;
    }
    if (!step.certified) {
      out.stop = AscentStop::uncertified;
      return out;
    }
    out.chain.push_back(step.grown);
    if (!is_unmixed(step.grown, seed)) {
      out.stop = AscentStop::mixed;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jacobian and Gorenstein tests

/// c x c minors of the Jacobian matrix, c = height(I); with the ideal's own
/// generators added for the ideal-plus-minors variant.
inline Ideal jacobian_ideal(const Ideal& I, JacobianVariant variant) {
  I.base()->require_char0("jacobian_ideal");
  if (I.gens().empty()) throw PreconditionError("jacobian_ideal: zero ideal");
  const int c = height(I);
  auto jac = jacobian_matrix(I.base(), I.gens());
  std::vector<Polynomial> gens;
  if (c >= 1 && static_cast<std::size_t>(c) <= std::min(jac.rows(), jac.cols())) gens = minors(jac, c);
  if (variant == JacobianVariant::ideal_plus_minors)
    gens.insert(gens.end(), I.gens().begin(), I.gens().end());
  Ideal J(I.ring(), std::move(gens));
  if (J.is_zero()) throw PreconditionError("jacobian_ideal: Jacobian ideal is zero");
  return J;
}

/// IJ : J == I for the Jacobian ideal J. Necessary for closedness of an
/// unmixed ideal; sufficient only when it is also generically a complete
/// intersection.
inline bool jacobian_test(const Ideal& I, JacobianVariant variant = JacobianVariant::ideal_plus_minors,
                          std::uint64_t seed = kDefaultSeed) {
  I.base()->require_char0("jacobian_test");
  if (!is_unmixed(I, seed)) throw PreconditionError("jacobian_test: ideal is not unmixed");
  Ideal J = jacobian_ideal(I, variant);
  return equal(colon(product(I, J), J), I);
}

/// I^2 : I == I. The caller vouches for the codimension-three perfect
/// Gorenstein setting; nothing here checks it.
inline bool gorenstein_gci_test(const Ideal& I) { return equal(colon(power(I, 2), I), I); }

// ---------------------------------------------------------------------------
// Verdicts

struct ClosednessOptions {
  ClosureMethod method = ClosureMethod::automatic;
  bool assert_gen_gorenstein = false;
  JacobianVariant jacobian_variant = JacobianVariant::ideal_plus_minors;
  std::uint64_t seed = kDefaultSeed;
};

inline ClosednessReport is_integrally_closed(const Ideal& I, const std::optional<Ideal>& radI,
                                             const ClosednessOptions& opt = {}) {
  ClosednessReport rep;
  rep.method = opt.method;
  auto& hyp = rep.hypotheses;
  auto& notes = rep.notes;
  const bool char0 = I.base()->characteristic() == 0;
  hyp["char-0"] = char0 ? CheckStatus::pass : CheckStatus::fail;
  hyp["gen-gorenstein-asserted"] = opt.assert_gen_gorenstein ? CheckStatus::pass : CheckStatus::skipped;
  if (opt.assert_gen_gorenstein) notes.push_back("generic Gorenstein property asserted by caller");

  std::optional<Ideal> rad = radI;
  if (rad) {
    auto v = verify_radical_candidate(I, *rad);
    if (v.status == RadicalCheck::refuted) throw PreconditionError("radical candidate refuted: " + v.reason);
    notes.push_back("radical candidate verified (I inside it, generators inside the radical)");
  } else if (char0 && !I.ring().is_quotient() && dimension(I) == 0) {
    rad = radical_zero_dim(I);
    notes.push_back("radical computed for a zero-dimensional ideal");
  }

  ClosureMethod method = opt.method;
  if (method == ClosureMethod::automatic) {
    method = rad ? ClosureMethod::radical_formula : ClosureMethod::jacobian;
    notes.push_back(std::string("auto selected ") + to_string(method));
  }
  if (method != ClosureMethod::jacobian && !rad)
    throw PreconditionError(std::string(to_string(method)) + " needs a radical candidate");

  auto unmixed = [&] {
    return hyp["unmixed"] = detail::run_check("unmixed", notes, [&] { return is_unmixed(I, opt.seed); });
  };
  auto gci = [&] {
    return hyp["generically-ci"] = detail::run_check("generically-ci", notes, [&] { return is_generically_ci(I); });
  };

  switch (method) {
    case ClosureMethod::radical_formula:
    case ClosureMethod::automatic: {
      bool u = unmixed() == CheckStatus::pass;
      bool g = gci() == CheckStatus::pass;
      auto f = radical_formula_test(I, *rad);
      rep.raw_result = f.holds;
      rep.witnesses.push_back({"L", f.socle});
      rep.witnesses.push_back({"IL:L^2", f.quotient});
      if (u && (g || opt.assert_gen_gorenstein)) {
        rep.verdict = f.holds ? Verdict::closed : Verdict::not_closed;
        if (!f.holds && g) {
          auto grow = detail::grow_step(I, *rad);
          rep.witnesses.push_back({"B", grow.unchanged});
          rep.witnesses.push_back({"C", grow.defect});
          rep.witnesses.push_back({"H", grow.grown});
          notes.push_back(grow.certified ? "H^2 = IH certified" : "H^2 = IH not certified");
        }
      } else {
        notes.push_back("hypotheses not met; formula result is not a verdict");
      }
      break;
    }
    case ClosureMethod::jacobian: {
      if (!char0) throw CharacteristicError("jacobian method");
      bool u = unmixed() == CheckStatus::pass;
      if (!u) {
        notes.push_back("Jacobian test needs an unmixed ideal");
        break;
      }
      bool g = gci() == CheckStatus::pass;
      Ideal J = jacobian_ideal(I, opt.jacobian_variant);
      rep.witnesses.push_back({"J", J});
      rep.raw_result = equal(colon(product(I, J), J), I);
      notes.push_back(std::string("Jacobian variant ") + to_string(opt.jacobian_variant));
      if (!rep.raw_result)
        rep.verdict = Verdict::not_closed;
      else if (g)
        rep.verdict = Verdict::closed;
      else
        notes.push_back("IJ:J = I without generic complete intersection is not a verdict");
      break;
    }
    case ClosureMethod::gorenstein: {
      bool sq = gorenstein_gci_test(I);
      auto f = radical_formula_test(I, *rad);
      hyp["generically-ci"] = sq ? CheckStatus::pass : CheckStatus::fail;
      rep.raw_result = sq && f.holds;
      rep.witnesses.push_back({"L", f.socle});
      rep.witnesses.push_back({"IL:L^2", f.quotient});
      notes.push_back(std::string("I^2:I = I ") + (sq ? "holds" : "fails"));
      if (opt.assert_gen_gorenstein)
        rep.verdict = rep.raw_result ? Verdict::closed : Verdict::not_closed;
      else
        notes.push_back("Gorenstein route needs the caller's codimension-three perfect Gorenstein assertion");
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Reductions and integral elements

/// Smallest r in [0, rmax] with (I + (f))^(r+1) == I (I + (f))^r. Such an r
/// certifies that f is integral over I; absence proves nothing.
inline std::optional<int> integrality_witness(const Polynomial& f, const Ideal& I, int rmax = kDefaultWitnessRmax) {
  if (rmax < 1) throw PreconditionError("integrality_witness: rmax must be at least 1");
  require_same_ring(f.ring(), I.base());
  Ideal Jp = sum(I, principal(I.ring(), f));
  Ideal Jr = Ideal::unit(I.ring());
  for (int r = 0; r <= rmax; ++r) {
    Ideal next = product(Jr, Jp);
    if (equal(next, product(I, Jr))) return r;
    Jr = next;
  }
  return std::nullopt;
}

inline bool integrality_witness_check(const Polynomial& f, const Ideal& I, int rmax = kDefaultWitnessRmax) {
  return integrality_witness(f, I, rmax).has_value();
}

struct GotoCheck {
  bool reduction_number_one;  // L^2 == IL
  bool socle_products_agree;  // I√I == L√I
  bool out_of_hypothesis;     // L is the unit ideal
  bool holds() const { return !out_of_hypothesis && reduction_number_one && socle_products_agree; }
};

/// Both identities hold for an m-primary Gorenstein I inside m^2.
inline GotoCheck goto_reduction_check(const Ideal& I, const Ideal& radI) {
  Ideal L = generic_socle(I, radI);
  GotoCheck out{};
  out.out_of_hypothesis = L.is_unit();
  out.reduction_number_one = equal(power(L, 2), product(I, L));
  out.socle_products_agree = equal(product(I, radI), product(L, radI));
  return out;
}

}  // namespace intcl

#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "intcl/intcl.hpp"

namespace intcl::cli {

using nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kParseError = 2, kInconclusive = 3, kResourceLimit = 4 };

/// Bad command line: unknown command, missing flag, unknown name.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

struct Options {
  std::string ideal, other, num, den, radical, matrix, element;
  std::string method = "auto";
  std::string jacobian_variant = "ideal-plus-minors";
  bool assert_gen_gorenstein = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_pairs;
  int rmax = kDefaultWitnessRmax;
  int kmax = 2;
  int nmax = kDefaultPowerNmax;
  int oracle_k = 12;
  std::optional<std::size_t> size;
};

struct Outcome {
  ordered_json json;
  int exit_code = kOk;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> all{
      "gb",         "colon",         "intersect",       "saturate",     "dim",          "height",
      "unmixed",    "gci",           "radical0",        "closed",       "grow",         "ascend",
      "jacobian-test", "gorenstein-test", "mono-closure", "rees-present", "rees-ascend", "reduction",
      "power-check", "pfaffians",    "kernel",          "hyp-normal",   "witness"};
  return all;
}

/// Reduced Gröbner basis in canonical form, leaving out the ring relations.
inline ordered_json render(const Ideal& I) {
  ordered_json out = ordered_json::array();
  std::optional<GroebnerBasis> rel;
  if (I.ring().is_quotient()) rel = groebner_basis(I.base(), I.ring().relations());
  for (const auto& p : I.canonical_gens())
    if (!rel || !rel->contains(p)) out.push_back(p.to_string());
  return out;
}

inline ordered_json render(const std::vector<Polynomial>& ps) {
  ordered_json out = ordered_json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline ordered_json render(const ClosednessReport& rep) {
  ordered_json h = ordered_json::object();
  for (const auto& [name, status] : rep.hypotheses) h[name] = to_string(status);
  ordered_json w = ordered_json::object();
  for (const auto& ni : rep.witnesses) w[ni.name] = render(ni.ideal);
  return {{"method", to_string(rep.method)},
          {"hypotheses", h},
          {"raw_result", rep.raw_result},
          {"verdict", to_string(rep.verdict)},
          {"witnesses", w},
          {"notes", rep.notes}};
}

namespace detail {

inline const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
  return value;
}

inline const Ideal& named_ideal(const ProblemFile& pf, const std::string& name, const char* flag) {
  need(name, flag);
  auto it = pf.ideals.find(name);
  if (it == pf.ideals.end()) throw UsageError("no ideal named '" + name + "'");
  return it->second;
}

inline ClosureMethod parse_method(const std::string& s) {
  if (s == "auto") return ClosureMethod::automatic;
  if (s == "radical-formula") return ClosureMethod::radical_formula;
  if (s == "jacobian") return ClosureMethod::jacobian;
  if (s == "gorenstein") return ClosureMethod::gorenstein;
  throw UsageError("unknown method '" + s + "'");
}

inline JacobianVariant parse_variant(const std::string& s) {
  if (s == "minors-only") return JacobianVariant::minors_only;
  if (s == "ideal-plus-minors") return JacobianVariant::ideal_plus_minors;
  throw UsageError("unknown Jacobian variant '" + s + "'");
}

inline ordered_json optional_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

}  // namespace detail

/// Runs one command. Errors other than usage errors become {ok: false, error}.
inline Outcome run(const std::string& command, const Options& opt, const ProblemFile& pf) {
  using detail::named_ideal;
  Outcome out;
  out.json = {{"ok", true}, {"command", command}, {"result", nullptr}, {"report", ordered_json::object()}};
  auto& result = out.json["result"];
  auto& report = out.json["report"];
  auto seed = opt.seed.value_or(kDefaultSeed);

  std::optional<ScopedGroebnerLimits> limits;
  if (opt.max_pairs) {
    GroebnerLimits l = current_groebner_limits();
    l.max_pairs = *opt.max_pairs;
    limits.emplace(l);
  }
  auto ideal = [&] { return named_ideal(pf, opt.ideal, "--ideal"); };
  auto radical = [&]() -> std::optional<Ideal> {
    if (opt.radical.empty()) return std::nullopt;
    return named_ideal(pf, opt.radical, "--radical");
  };

  try {
    if (command == "gb") {
      result = render(ideal());
      report["order"] = pf.ring.base()->order().name();
    } else if (command == "colon" || command == "saturate") {
      const Ideal& I = named_ideal(pf, opt.num, "--num");
      const Ideal& J = named_ideal(pf, opt.den, "--den");
      result = render(command == "colon" ? colon(I, J) : saturate(I, J));
    } else if (command == "intersect") {
      result = render(intersect(ideal(), named_ideal(pf, opt.other, "--other")));
    } else if (command == "dim") {
      result = dimension(ideal());
    } else if (command == "height") {
      result = height(ideal());
    } else if (command == "unmixed") {
      if (!opt.seed) throw UsageError("unmixed requires --seed");
      result = is_unmixed(ideal(), *opt.seed);
      report["seed"] = *opt.seed;
    } else if (command == "gci") {
      result = is_generically_ci(ideal());
    } else if (command == "radical0") {
      result = render(radical_zero_dim(ideal()));
    } else if (command == "closed") {
      ClosednessOptions co;
      co.method = detail::parse_method(opt.method);
      co.assert_gen_gorenstein = opt.assert_gen_gorenstein;
      co.jacobian_variant = detail::parse_variant(opt.jacobian_variant);
      co.seed = seed;
      auto rep = is_integrally_closed(ideal(), radical(), co);
      result = to_string(rep.verdict);
      report = render(rep);
      if (rep.verdict == Verdict::inconclusive) out.exit_code = kInconclusive;
    } else if (command == "grow") {
      auto rad = radical();
      if (!rad) throw UsageError("grow requires --radical");
      auto g = grow_integral_elements(ideal(), *rad, seed);
      result = render(g.grown);
      report = {{"socle", render(g.socle)},
                {"unchanged", render(g.unchanged)},
                {"defect", render(g.defect)},
                {"certified", g.certified}};
      if (!g.certified) out.exit_code = kInconclusive;
    } else if (command == "ascend") {
      auto rad = radical();
      if (!rad) throw UsageError("ascend requires --radical");
      auto a = closure_ascent(ideal(), *rad, opt.kmax, seed);
      result = ordered_json::array();
      for (const auto& I : a.chain) result.push_back(render(I));
      report["stop"] = to_string(a.stop);
      report["rounds"] = opt.kmax;
      if (a.stop != AscentStop::fixed_point) out.exit_code = kInconclusive;
    } else if (command == "jacobian-test") {
      auto v = detail::parse_variant(opt.jacobian_variant);
      result = jacobian_test(ideal(), v, seed);
      report["variant"] = to_string(v);
      report["jacobian_ideal"] = render(jacobian_ideal(ideal(), v));
    } else if (command == "gorenstein-test") {
      result = gorenstein_gci_test(ideal());
    } else if (command == "mono-closure") {
      const Ideal& I = ideal();
      Ideal C = monomial_integral_closure(I);
      result = render(C);
      // each minimal generator re-derived by the k-fold-sum search
      auto ex = monomial_exponents(I);
      bool all = true;
      for (const auto& g : C.gens())
        all = all && ex && !ex->empty() && brute_force_oracle(exponents_of(g.leading_monomial()), *ex, opt.oracle_k);
      report["oracle_K"] = opt.oracle_k;
      report["oracle_certified"] = all;
    } else if (command == "rees-present") {
      auto rp = rees_presentation(ideal());
      result = render(rp.presentation);
      report["variables"] = rp.ring->variables();
      report["generators"] = render(rp.generators);
      report["trace"] = rp.trace;
    } else if (command == "rees-ascend") {
      auto rad = radical();
      if (!rad) throw UsageError("rees-ascend requires --radical");
      auto chain = colon_ascent_chain(ideal(), *rad, opt.kmax);
      result = ordered_json::array();
      for (std::size_t k = 0; k < chain.size(); ++k)
        result.push_back({{"k", k + 1}, {"ideal", render(chain[k].ideal)}, {"reduction_ok", chain[k].reduction_ok}});
    } else if (command == "reduction") {
      auto r = is_reduction(ideal(), named_ideal(pf, opt.other, "--other"), opt.rmax);
      result = detail::optional_int(r);
      report["rmax"] = opt.rmax;
      if (!r) out.exit_code = kInconclusive;
    } else if (command == "power-check") {
      const Ideal& ab = ideal();
      if (ab.gens().size() != 2) throw UsageError("power-check needs an ideal with exactly two generators");
      result = power_closure_check(ab.gens()[0], ab.gens()[1], named_ideal(pf, opt.other, "--other"), opt.nmax);
      report["nmax"] = opt.nmax;
    } else if (command == "pfaffians") {
      auto it = pf.matrices.find(detail::need(opt.matrix, "--matrix"));
      if (it == pf.matrices.end()) throw UsageError("no matrix named '" + opt.matrix + "'");
      const auto& m = it->second;
      std::size_t size = opt.size.value_or(m.rows() % 2 ? m.rows() - 1 : m.rows());
      result = render(pfaffians(m, size));
      report["size"] = size;
      report["ideal"] = render(Ideal(pf.ring, pfaffians(m, size)));
    } else if (command == "kernel") {
      const Ideal& I = ideal();
      if (I.ring().is_quotient()) throw UsageError("kernel needs a polynomial ring");
      Ideal k = kernel_of_ring_map(I.base(), I.gens());
      result = render(k);
      report["variables"] = k.base()->variables();
    } else if (command == "hyp-normal") {
      const Ideal& I = ideal();
      if (I.gens().size() != 1) throw UsageError("hyp-normal needs a principal ideal");
      auto h = hypersurface_normality_report(I.gens()[0]);
      result = h.normal();
      report = {{"dim_hypersurface", h.dim_hypersurface},
                {"dim_singular_locus", h.dim_singular},
                {"note", "irreducibility of the generator is assumed, not checked"}};
    } else if (command == "witness") {
      Polynomial f = parse_polynomial(detail::need(opt.element, "--element"), pf.ring.base());
      auto r = integrality_witness(f, ideal(), opt.rmax);
      result = detail::optional_int(r);
      report["rmax"] = opt.rmax;
      if (!r) out.exit_code = kInconclusive;
    } else {
      throw UsageError("unknown command '" + command + "'");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const ResourceLimitError& e) {
    out.json["ok"] = false;
    out.json["error"] = e.what();
    out.exit_code = kResourceLimit;
  } catch (const Error& e) {
    out.json["ok"] = false;
    out.json["error"] = e.what();
    out.exit_code = kInconclusive;
  }
  return out;
}

}  // namespace intcl::cli

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "intcl/cli.hpp"

using namespace intcl;

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw cli::UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int fail(const std::string& command, const std::string& what, int code) {
  cli::ordered_json j{{"ok", false}, {"command", command}, {"error", what}};
  std::cout << j.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral closure tests for polynomial ideals"};
  std::string command, problem;
  cli::Options opt;
  std::uint64_t seed = 0;
  std::size_t max_pairs = 0, size = 0;

  app.add_option("command", command, "operation to run")->required()->check(CLI::IsMember(cli::commands()));
  app.add_option("problem", problem, "problem file ('-' for stdin)")->required();
  app.add_option("--ideal", opt.ideal, "main ideal");
  app.add_option("--other", opt.other, "second ideal (intersect, reduction, power-check)");
  app.add_option("--num", opt.num, "numerator ideal (colon, saturate)");
  app.add_option("--den", opt.den, "denominator ideal (colon, saturate)");
  app.add_option("--radical", opt.radical, "radical candidate");
  app.add_option("--matrix", opt.matrix, "matrix name (pfaffians)");
  app.add_option("--element", opt.element, "polynomial (witness)");
  app.add_option("--method", opt.method, "auto, radical-formula, jacobian or gorenstein")->capture_default_str();
  app.add_option("--jacobian-variant", opt.jacobian_variant, "minors-only or ideal-plus-minors")
      ->capture_default_str();
  app.add_flag("--assert-gen-gorenstein", opt.assert_gen_gorenstein, "caller asserts generic Gorensteinness");
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized checks");
  auto* pairs_opt = app.add_option("--max-pairs", max_pairs, "cap on critical pairs per Groebner basis");
  app.add_option("--rmax", opt.rmax, "largest reduction number tried")->capture_default_str();
  app.add_option("--kmax", opt.kmax, "rounds for ascend / length of rees-ascend")->capture_default_str();
  app.add_option("--nmax", opt.nmax, "largest power in power-check")->capture_default_str();
  app.add_option("--oracle-K", opt.oracle_k, "search bound for the monomial oracle")->capture_default_str();
  auto* size_opt = app.add_option("--size", size, "Pfaffian size (default: largest even principal block)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kParseError;
  }
  if (*seed_opt) opt.seed = seed;
  if (*pairs_opt) opt.max_pairs = max_pairs;
  if (*size_opt) opt.size = size;

  try {
    ProblemFile pf = parse_problem(read_all(problem));
    auto out = cli::run(command, opt, pf);
    std::cout << out.json.dump(2) << "\n";
    return out.exit_code;
  } catch (const ParseError& e) {
    return fail(command, std::string("parse error: ") + e.what(), cli::kParseError);
  } catch (const cli::UsageError& e) {
    return fail(command, e.what(), cli::kParseError);
  } catch (const ResourceLimitError& e) {
    return fail(command, e.what(), cli::kResourceLimit);
  } catch (const Error& e) {
    return fail(command, e.what(), cli::kInconclusive);
  }
}

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "soergel/bimodule.hpp"
#include "soergel/errors.hpp"
#include "soergel/lightleaves.hpp"
#include "soergel/measures.hpp"
#include "soergel/registry.hpp"
#include "soergel/rewrite.hpp"

namespace soergel::cli {

CoxeterGraph resolve_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_graph(arg);
  if (arg == "a1") return graph_a1();
  if (arg == "a1xa1") return graph_a1xa1();
  if (arg == "inf") return graph_inf_dihedral();
  if (arg == "mixed") return graph_mixed();
  throw InputError("no graph file or built-in graph named '" + arg + "'");
}

namespace {

std::string slurp_or_literal(const std::string& arg) {
  if (!std::filesystem::exists(arg)) return arg;
  std::ifstream in(arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Expression read_expr(const std::string& arg, const CoxeterGraph& g) {
  Expression e = parse_expr(slurp_or_literal(arg), g);
  typecheck(e, g);
  return e;
}

}  // namespace

Expression fuzz_case(const CoxeterGraph& g, std::uint64_t seed, std::size_t index,
                     const FuzzShape& shape) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  Word w(rng() % (std::min(shape.max_word, shape.max_chain) + 1));
  for (auto& s : w) s = static_cast<Gen>(rng() % g.size());
  RandomOptions opt;
  opt.allow_x = shape.allow_x;
  opt.allow_alpha = shape.allow_alpha;
  opt.max_word = shape.max_word;
  return random_expression(g, w, shape.max_chain, rng(), opt);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Soergel calculus: relation checks, normal forms, light leaves"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::size_t fuel = 1;
  std::string graph_arg, expr_arg, corrupt;
  std::vector<std::string> word_args;
  bool trace = false, verify = false;
  std::size_t count = 100;

  app.add_option("--seed", seed, "seed for every random choice")->capture_default_str();
  app.add_option("--fuel", fuel, "fuel multiplier")->capture_default_str();

  auto* check = app.add_subcommand("check", "verify every relation instance with the oracle");
  check->add_option("graph", graph_arg)->required();
  check->add_option("--corrupt", corrupt)->group("");  // test hook

  auto* normalize = app.add_subcommand("normalize", "rewrite an R-expression to light leaves");
  normalize->add_option("graph", graph_arg)->required();
  normalize->add_option("expr", expr_arg, "file or literal")->required();
  normalize->add_flag("--trace", trace);

  auto* basis = app.add_subcommand("basis", "list the light leaves of a word");
  basis->add_option("graph", graph_arg)->required();
  basis->add_option("word", word_args)->expected(0, -1);
  basis->add_flag("--verify-independence", verify);

  auto* eval = app.add_subcommand("eval", "print the matrix of an expression");
  eval->add_option("graph", graph_arg)->required();
  eval->add_option("expr", expr_arg)->required();

  auto* stat = app.add_subcommand("stats", "print the badness measures of an expression");
  stat->add_option("graph", graph_arg)->required();
  stat->add_option("expr", expr_arg)->required();

  auto* fuzz = app.add_subcommand("fuzz", "normalize random expressions and check them");
  fuzz->add_option("graph", graph_arg)->required();
  fuzz->add_option("--count", count)->capture_default_str();
  // --seed is accepted after the subcommand as well
  fuzz->add_option("--seed", seed);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const CoxeterGraph g = resolve_graph(graph_arg);
    NormalizeOptions nopt;
    nopt.fuel_multiplier = fuel;

    if (*check) {
      Registry reg(g);
      if (!corrupt.empty()) reg.corrupt(corrupt);
      Oracle oracle(g);
      int failures = 0;
      for (const auto& line : reg.check(oracle)) {
        out << line.inst->rule << " " << line.inst->label << ": ";
        if (line.failure) {
          ++failures;
          out << "FAIL " << mask_name(*line.failure, line.inst->lhs.domain.size()) << "  "
              << print_expr(line.inst->lhs, g) << "\n";
        } else {
          out << "OK\n";
        }
      }
      out << "instances: " << reg.instances().size() << "\nfailures: " << failures << "\n";
      return failures ? kFailure : kOk;
    }

    if (*normalize) {
      Expression e = read_expr(expr_arg, g);
      if (!typecheck(e, g).empty()) throw InputError("expression does not end in R");
      Registry reg(g);
      Normalizer nz(reg, nopt);
      Trace tr;
      LinComb lc = nz.normalize(e, &tr);
      out << lc.to_string(g);
      if (trace) out << "trace:\n" << tr.to_string();
      return kOk;
    }

    if (*basis) {
      std::string joined;
      for (const auto& a : word_args) joined += a + " ";
      Word w = parse_word(joined, g);
      auto leaves = enumerate_FL(w, g);
      for (const auto& leaf : leaves) out << print_expr(leaf.expression(g), g) << "\n";
      out << "count: " << leaves.size() << "\n";
      if (verify) {
        Oracle oracle(g);
        std::vector<BimoduleMap> maps;
        for (const auto& leaf : leaves) maps.push_back(oracle.eval(leaf.expression(g)));
        auto res = independent(maps, g.size(), seed);
        for (const auto& pt : res.points) {
          out << "point:";
          for (std::size_t i = 0; i < pt.size(); ++i)
            out << " y_" << g.name(static_cast<Gen>(i)) << "=" << rat_to_string(pt[i]);
          out << "\n";
        }
        out << "independent: " << (res.independent ? "yes" : "no") << " (rank " << res.rank
            << " of " << maps.size() << ")\n";
        if (!res.independent) return kFailure;
      }
      return kOk;
    }

    if (*eval) {
      Expression e = read_expr(expr_arg, g);
      Oracle oracle(g);
      out << oracle.eval(e).to_string(g);
      return kOk;
    }

    if (*stat) {
      Expression e = read_expr(expr_arg, g);
      out << stats(e, g).to_string();
      return kOk;
    }

    if (*fuzz) {
      Registry reg(g);
      Normalizer nz(reg, nopt);
      Oracle oracle(g);
      std::size_t failures = 0;
      int code = kOk;
      for (std::size_t i = 0; i < count; ++i) {
        Expression e = fuzz_case(g, seed, i);
        std::string problem;
        try {
          Trace tr;
          LinComb lc = nz.normalize(e, &tr);
          if (first_difference(oracle.eval(e), oracle.eval(lc, e.domain, {})))
            problem = "normal form differs from input";
          else if (!tr.violations.empty())
            problem = tr.violations.front();
        } catch (const FuelExhausted& ex) {
          problem = ex.what();
          code = kFuel;
        } catch (const std::exception& ex) {
          problem = ex.what();
        }
        if (!problem.empty()) {
          ++failures;
          if (code == kOk) code = kFailure;
          out << "case " << i << " seed " << seed << ": " << problem << "\n  " << print_expr(e, g)
              << "\n";
        }
      }
      out << "cases: " << count << "\nfailures: " << failures << "\n";
      return code;
    }
  } catch (const FuelExhausted& e) {
    err << e.what() << "\n" << e.dump() << "\n";
    return kFuel;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace soergel::cli

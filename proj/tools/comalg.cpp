// Command-line entry point. Exit status: 0 when every verdict holds, 1 when
// some verdict is false (a counterexample file is written), 2 on errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "comalg/algebra.hpp"
#include "comalg/commutant.hpp"
#include "comalg/errors.hpp"
#include "comalg/families.hpp"
#include "comalg/io.hpp"
#include "comalg/reports.hpp"
#include "comalg/spectral.hpp"

namespace {

using namespace comalg;

struct Options {
  std::string output = "-";
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t size_cap = kDefaultSizeCap;
  std::string counterexample_dir = ".";

  std::string input;
  bool random = false;
  std::string n = "1..8";
  std::string l = "1..4";
  std::size_t trials = 1000;
  std::size_t n_max = 6;
  std::string index = "2,10,100";
  std::size_t budget = 100;
};

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
}

void write_object(const Options& opt, const Json& j) { write_text(opt.output, j.dump() + "\n"); }

int finish(const Options& opt, const Report& report) {
  emit_report(report, opt.format == "csv" ? ReportFormat::csv : ReportFormat::json, opt.output);
  for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
    const auto path = std::filesystem::path(opt.counterexample_dir) /
                      ("counterexample-" + report.command + "-" + std::to_string(i) + ".json");
    write_text(path.string(), report.counterexamples[i].dump(2) + "\n");
    std::cerr << "bound violated; counterexample written to " << path.string() << '\n';
  }
  return report.all_hold ? 0 : 1;
}

std::uint64_t single_value(const std::string& text, const char* flag) {
  const auto values = parse_int_list(text);
  if (values.size() != 1) throw ParseError(flag, "expected a single integer");
  return values.front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commuting-matrix algebra toolkit: commutants, Jordan types, algebra dimensions and bound checks"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("-o,--output", opt.output, "Output path, '-' for stdout");
    cmd->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--size-cap", opt.size_cap, "Largest n for operations building n^2 x n^2 matrices");
    cmd->add_option("--counterexample-dir", opt.counterexample_dir, "Where counterexample files are written");
  };

  auto* jordan = app.add_subcommand("jordan-type", "Jordan type of a nilpotent matrix");
  jordan->add_option("matrix", opt.input, "Matrix JSON file")->required();
  add_common(jordan);

  auto* commutant = app.add_subcommand("commutant", "Basis of the commutant {B : AB = BA}");
  commutant->add_option("matrix", opt.input, "Matrix JSON file")->required();
  add_common(commutant);

  auto* algebra = app.add_subcommand("algebra-dim", "Dimension of the unital algebra generated by a family");
  algebra->add_option("family", opt.input, "Family JSON file")->required();
  add_common(algebra);

  auto* commuting_cmd = app.add_subcommand("verify-lemma2", "Commuting-family dimension bound");
  commuting_cmd->add_option("family", opt.input, "Family JSON file");
  commuting_cmd->add_flag("--random", opt.random, "Check seeded random families instead of a file");
  commuting_cmd->add_option("--n", opt.n, "n values: 8, 1..8 or 2,4,8");
  commuting_cmd->add_option("--l", opt.l, "l values");
  commuting_cmd->add_option("--trials", opt.trials, "Number of random families");
  commuting_cmd->add_option("--seed", opt.seed, "Master seed");
  add_common(commuting_cmd);

  auto* jordan_cmd = app.add_subcommand("verify-lemma4", "Shifted commutant bound over all partitions of n <= n-max");
  jordan_cmd->add_option("--n-max", opt.n_max, "Largest n")->required();
  add_common(jordan_cmd);

  auto* bounds = app.add_subcommand("bounds", "New versus Bernstein Hecke-algebra bounds");
  bounds->add_option("--n", opt.n, "n values")->required();
  bounds->add_option("--index", opt.index, "Index values [K0:K]");
  add_common(bounds);

  auto* split = app.add_subcommand("split", "Integer minimizer of l n^2/x + x^l");
  split->add_option("--n", opt.n, "n values")->required();
  split->add_option("--l", opt.l, "l values")->required();
  add_common(split);

  auto* gen = app.add_subcommand("gen", "Build the family described by a spec file");
  gen->add_option("spec", opt.input, "FamilySpec JSON file")->required();
  add_common(gen);

  auto* search = app.add_subcommand("search", "Hill-climbing search for families with large algebra dimension");
  search->add_option("--n", opt.n, "n")->required();
  search->add_option("--l", opt.l, "l")->required();
  search->add_option("--budget", opt.budget, "Number of family evaluations");
  search->add_option("--seed", opt.seed, "Master seed");
  add_common(search);

  CLI11_PARSE(app, argc, argv);

  try {
    if (jordan->parsed()) {
      const Matrix a = matrix_from_json(read_json_file(opt.input));
      Json out;
      out["partition"] = to_json(jordan_type(a));
      write_object(opt, out);
      return 0;
    }
    if (commutant->parsed()) {
      const Matrix a = matrix_from_json(read_json_file(opt.input));
      const CommutantBasis c = commutant_basis(a, opt.size_cap);
      Json out;
      out["n"] = a.n();
      out["dim"] = c.dim();
      if (is_nilpotent(a)) {
        out["jordan_type"] = to_json(jordan_type(a));
        out["formula_dim"] = commutant_dimension_formula(jordan_type(a));
      }
      Json basis = Json::array();
      for (const auto& b : c.basis) basis.push_back(to_json(b));
      out["basis"] = std::move(basis);
      write_object(opt, out);
      return 0;
    }
    if (algebra->parsed()) {
      const CommutingFamily family = family_from_json(read_json_file(opt.input));
      Json out;
      out["dim"] = generated_algebra_basis(family).dim();
      out["n"] = family.n();
      out["l"] = family.l();
      write_object(opt, out);
      return 0;
    }
    if (commuting_cmd->parsed()) {
      if (opt.random) {
        return finish(opt, random_bound_report(parse_int_list(opt.n), parse_int_list(opt.l), opt.trials, opt.seed));
      }
      if (opt.input.empty()) throw ParseError("family", "a family file or --random is required");
      const CommutingFamily parsed = family_from_json(read_json_file(opt.input));
      const CommutingFamily family = CommutingFamily::verify(parsed.n(), parsed.generators());
      return finish(opt, family_bound_report(family));
    }
    if (jordan_cmd->parsed()) return finish(opt, jordan_sweep_report(opt.n_max, opt.size_cap));
    if (bounds->parsed()) return finish(opt, hecke_table_report(parse_int_list(opt.n), parse_int_list(opt.index)));
    if (split->parsed()) return finish(opt, split_table_report(parse_int_list(opt.n), parse_int_list(opt.l)));
    if (gen->parsed()) {
      const FamilySpec spec = spec_from_json(read_json_file(opt.input));
      // Families are cheap to build, so gen has its own larger default cap.
      const std::size_t cap = gen->get_option("--size-cap")->count() > 0 ? opt.size_cap : kDefaultFamilyCap;
      write_object(opt, to_json(build_family(spec, cap)));
      return 0;
    }
    if (search->parsed()) {
      return finish(opt, search_report(single_value(opt.n, "--n"), single_value(opt.l, "--l"), opt.budget, opt.seed));
    }
  } catch (const NotNilpotent& e) {
    std::cerr << "not nilpotent: " << e.what() << '\n';
  } catch (const NotCommuting& e) {
    std::cerr << "not commuting: " << e.what() << '\n';
  } catch (const NotSplitOverRationals& e) {
    std::cerr << "not split over Q: " << e.what() << '\n';
  } catch (const SizeCapExceeded& e) {
    std::cerr << "size cap exceeded: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}

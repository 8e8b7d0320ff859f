#include "comalg/reports.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "comalg/algebra.hpp"
#include "comalg/bounds.hpp"
#include "comalg/commutant.hpp"
#include "comalg/errors.hpp"
#include "comalg/families.hpp"
#include "comalg/rng.hpp"
#include "comalg/search.hpp"
#include "comalg/spectral.hpp"

namespace comalg {

namespace {

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "+" : "") + csv_cell(v[i]);
    return s;
  }
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

Json report_to_json(const Report& report) {
  Json out;
  out["command"] = report.command;
  out["seed"] = str(report.seed);
  out["parameters"] = report.parameters;
  out["all_hold"] = report.all_hold;
  out["summary"] = report.summary;
  Json rows = Json::array();
  for (const auto& r : report.rows) rows.push_back(r);
  out["results"] = std::move(rows);
  return out;
}

std::string report_to_csv(const Report& report) {
  std::ostringstream os;
  os << "# command=" << report.command << " seed=" << report.seed << '\n';
  for (std::size_t c = 0; c < report.columns.size(); ++c) os << (c ? "," : "") << report.columns[c].first;
  os << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      const auto it = row.find(report.columns[c].second);
      os << (c ? "," : "") << (it == row.end() ? std::string() : csv_cell(*it));
    }
    os << '\n';
  }
  return os.str();
}

void emit_report(const Report& report, ReportFormat format, const std::filesystem::path& path) {
  if (report.rows.empty()) throw Error("refusing to emit an empty report");
  const std::string text = format == ReportFormat::json ? report_to_json(report).dump(2) + "\n" : report_to_csv(report);
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("write to " + path.string() + " failed");
}

std::vector<std::uint64_t> parse_int_list(const std::string& text) {
  auto to_u64 = [&text](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("", "malformed integer list '" + text + "'");
    }
    return std::stoull(s);
  };
  std::vector<std::uint64_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::uint64_t lo = to_u64(text.substr(0, dots));
    const std::uint64_t hi = to_u64(text.substr(dots + 2));
    if (lo > hi) throw ParseError("", "empty range '" + text + "'");
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_u64(item));
  }
  if (out.empty()) throw ParseError("", "empty integer list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Report jordan_sweep_report(std::size_t n_max, std::size_t size_cap) {
  Report report;
  report.command = "verify-lemma4";
  report.parameters["n_max"] = n_max;
  report.columns = {{"n", "n"},           {"partition", "partition"},       {"m", "m"},
                    {"dim", "dim"},       {"bound_num", "bound_numerator"}, {"bound_den", "bound_denominator"},
                    {"holds", "holds"}};
  std::size_t violations = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (const auto& r : verify_jordan_lemma_all_m(p, size_cap)) {
        Json row;
        row["n"] = n;
        row["partition"] = to_json(r.partition);
        row["m"] = r.m;
        row["dim"] = r.dim;
        row["bound_numerator"] = r.bound_numerator.get_str();
        row["bound_denominator"] = r.bound_denominator.get_str();
        row["holds"] = r.holds;
        row["certificate"] = r.certificate;
        if (!r.holds) {
          ++violations;
          report.all_hold = false;
          Json ce;
          ce["kind"] = "shifted_commutant";
          ce["m"] = r.m;
          ce["family"] = to_json(CommutingFamily::unchecked(n, {jordan_matrix(p)}));
          report.counterexamples.push_back(std::move(ce));
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  report.summary["rows"] = report.rows.size();
  report.summary["violations"] = violations;
  return report;
}

Report family_bound_report(const CommutingFamily& family) {
  Report report;
  report.command = "verify-lemma2";
  report.parameters["n"] = family.n();
  report.parameters["l"] = family.l();
  report.columns = {{"quantity", "quantity"}, {"lhs", "lhs"}, {"rhs", "rhs"}, {"holds", "holds"}};
  const BoundReport r = verify_commuting_bound(family);
  report.rows.push_back(to_json(r));
  report.all_hold = r.holds;
  if (!r.holds) {
    Json ce;
    ce["kind"] = "commuting_family";
    ce["family"] = to_json(family);
    report.counterexamples.push_back(std::move(ce));
  }
  report.summary["violations"] = r.holds ? 0 : 1;
  return report;
}

Report random_bound_report(const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& ls,
                           std::size_t trials, std::uint64_t seed) {
  if (ns.empty() || ls.empty() || trials == 0) throw std::invalid_argument("random sweep needs n, l and trials");
  if (ns.front() == 0 || ls.front() == 0) throw std::invalid_argument("random sweep needs n, l >= 1");
  Report report;
  report.command = "verify-lemma2";
  report.seed = seed;
  report.parameters["n"] = ns;
  report.parameters["l"] = ls;
  report.parameters["trials"] = trials;
  report.columns = {{"trial", "trial"}, {"n", "n"},     {"l", "l"},         {"dim", "dim"},
                    {"lhs", "lhs"},     {"rhs", "rhs"}, {"holds", "holds"}, {"ratio", "ratio"}};
  std::size_t violations = 0;
  std::size_t max_dim = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    Rng rng(trial_seed);
    const std::size_t n = ns[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ns.size()) - 1))];
    const std::size_t l = ls[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ls.size()) - 1))];
    const auto [family, spec] = random_commuting_family(n, l, rng.next());
    const BoundReport r = verify_commuting_bound(family);
    Json row;
    row["trial"] = t;
    row["n"] = n;
    row["l"] = l;
    row["dim"] = r.quantity.get_str();
    row["lhs"] = r.lhs.get_str();
    row["rhs"] = r.rhs.get_str();
    row["holds"] = r.holds;
    row["ratio"] = r.approx.back().second;
    row["construction"] = to_string(spec.construction());
    report.rows.push_back(std::move(row));
    max_dim = std::max<std::size_t>(max_dim, r.quantity.get_ui());
    if (!r.holds) {
      ++violations;
      report.all_hold = false;
      Json ce;
      ce["kind"] = "commuting_family";
      ce["trial"] = t;
      ce["spec"] = to_json(spec);
      ce["family"] = to_json(family);
      report.counterexamples.push_back(std::move(ce));
    }
  }
  report.summary["trials"] = trials;
  report.summary["violations"] = violations;
  report.summary["max_dim"] = max_dim;
  return report;
}

Report hecke_table_report(const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& indices) {
  Report report;
  report.command = "bounds";
  report.parameters["n"] = ns;
  report.parameters["index"] = indices;
  report.columns = {{"n", "n"},
                    {"index", "index"},
                    {"new_squared", "new_squared"},
                    {"new_approx", "new_approx"},
                    {"bernstein", "bernstein"},
                    {"new_smaller", "new_smaller"},
                    {"crossover_index", "crossover_index"}};
  Json crossovers = Json::object();
  for (auto n : ns) {
    for (auto index : indices) {
      const HeckeBound fresh = hecke_bound_new(n, index);
      const HeckeComparison cmp = compare_hecke_bounds(n, index);
      Json row;
      row["n"] = n;
      row["index"] = index;
      row["new_squared"] = fresh.squared.get_str();
      row["new_exact"] = fresh.exact ? Json(fresh.exact->get_str()) : Json();
      row["new_approx"] = fresh.display;
      row["bernstein"] = hecke_bound_bernstein(n, index).get_str();
      row["new_smaller"] = cmp.new_smaller;
      row["crossover_index"] = cmp.crossover_index ? Json(cmp.crossover_index->get_str()) : Json();
      report.rows.push_back(std::move(row));
    }
    const auto cross = hecke_crossover_index(n);
    crossovers[std::to_string(n)] = cross ? Json(cross->get_str()) : Json();
  }
  report.summary["crossover_index"] = std::move(crossovers);
  return report;
}

Report split_table_report(const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& ls) {
  Report report;
  report.command = "split";
  report.parameters["n"] = ns;
  report.parameters["l"] = ls;
  report.columns = {{"n", "n"},
                    {"l", "l"},
                    {"x_star", "x_star"},
                    {"f_min", "f_min"},
                    {"f_min_approx", "f_min_approx"},
                    {"x0_approx", "x0_approx"},
                    {"continuous_bound_approx", "continuous_bound_approx"},
                    {"integer_min_exceeds_continuous", "integer_min_exceeds_continuous"}};
  std::size_t exceeded = 0;
  for (auto n : ns) {
    for (auto l : ls) {
      const OptimalSplit s = optimal_split(n, l);
      Json row;
      row["n"] = n;
      row["l"] = l;
      row["x_star"] = s.x_star;
      row["f_min"] = s.f_min.to_string();
      row["f_min_approx"] = s.f_min_display;
      row["x0_approx"] = s.x0_display;
      row["continuous_bound_approx"] = s.continuous_display;
      row["integer_min_exceeds_continuous"] = s.integer_min_exceeds_continuous;
      if (s.integer_min_exceeds_continuous) ++exceeded;
      report.rows.push_back(std::move(row));
    }
  }
  report.summary["cells"] = report.rows.size();
  report.summary["integer_min_exceeds_continuous"] = exceeded;
  return report;
}

Report search_report(std::size_t n, std::size_t l, std::size_t budget, std::uint64_t seed) {
  Report report;
  report.command = "search";
  report.seed = seed;
  report.parameters["n"] = n;
  report.parameters["l"] = l;
  report.parameters["budget"] = budget;
  report.columns = {{"n", "n"},
                    {"l", "l"},
                    {"dim", "dim"},
                    {"ratio", "ratio_display"},
                    {"bound_holds", "bound_holds"},
                    {"falsified", "falsified"},
                    {"evaluations", "evaluations"}};
  const TightnessRecord r = tightness_search(n, l, budget, seed);
  Json row;
  row["n"] = r.n;
  row["l"] = r.l;
  row["dim"] = r.dim;
  row["ratio_display"] = r.ratio_display;
  row["bound_holds"] = r.bound_holds;
  row["falsified"] = r.falsified;
  row["evaluations"] = r.evaluations;
  row["spec"] = to_json(r.spec);
  report.rows.push_back(std::move(row));
  report.all_hold = !r.falsified;
  if (r.falsified) {
    Json ce;
    ce["kind"] = "commuting_family";
    ce["spec"] = to_json(r.spec);
    ce["family"] = to_json(build_family(r.spec));
    report.counterexamples.push_back(std::move(ce));
  }
  return report;
}

}  // namespace comalg

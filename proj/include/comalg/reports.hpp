#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "comalg/io.hpp"

namespace comalg {

enum class ReportFormat { json, csv };

/// Result table of one verification run. Rows are emitted in the order
/// stored, which every builder sorts by its sweep key.
struct Report {
  std::string command;
  std::uint64_t seed = 0;
  Json parameters = Json::object();
  /// (CSV header name, JSON row key) in output order.
  std::vector<std::pair<std::string, std::string>> columns;
  std::vector<Json> rows;
  Json summary = Json::object();
  bool all_hold = true;
  /// Families serialized for offline inspection when a verdict fails.
  std::vector<Json> counterexamples;
};

/// {"command", "seed", "parameters", "all_hold", "summary", "results"}
Json report_to_json(const Report& report);

/// "# command=<c> seed=<s>" line, the fixed header row, then one line per
/// row. Array cells are joined with '+', booleans are true/false.
std::string report_to_csv(const Report& report);

/// Writes the report to `path` ("-" for stdout). An empty report is an
/// error and nothing is written.
void emit_report(const Report& report, ReportFormat format, const std::filesystem::path& path);

/// Parses "7", "2..6" (inclusive) or "2,10,100" into a sorted, duplicate-free list.
std::vector<std::uint64_t> parse_int_list(const std::string& text);

/// Shifted commutant bound over every partition of every n <= n_max and
/// every 1 <= m <= n. Rows sorted by (n, partition, m).
Report jordan_sweep_report(std::size_t n_max, std::size_t size_cap);

/// Commuting-family dimension bound on one family.
Report family_bound_report(const CommutingFamily& family);

/// Dimension bound on `trials` random families. Trial t draws n and l from
/// the given lists and its family from derive_seed(seed, t).
Report random_bound_report(const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& ls,
                           std::size_t trials, std::uint64_t seed);

/// New versus Bernstein Hecke-algebra bounds, with the exact crossover
/// index per n.
Report hecke_table_report(const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& indices);

/// Integer minimizer of l n^2/x + x^l against the continuous minimum.
Report split_table_report(const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& ls);

/// Best family found by tightness_search.
Report search_report(std::size_t n, std::size_t l, std::size_t budget, std::uint64_t seed);

}  // namespace comalg

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "comalg/algebra.hpp"
#include "comalg/bounds.hpp"
#include "comalg/commutant.hpp"
#include "comalg/families.hpp"
#include "comalg/linalg.hpp"
#include "comalg/reports.hpp"
#include "comalg/spectral.hpp"
#include "oracles.hpp"

using namespace comalg;

namespace {

constexpr std::uint64_t kMasterSeed = 20240611;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome ac1_shifted_commutant_sweep() {
  const Report r = jordan_sweep_report(10, kDefaultSizeCap);
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 10; ++n) expected += partition_count(n) * n;
  std::size_t violations = 0;
  for (const auto& row : r.rows) {
    const auto n = row["n"].get<std::size_t>();
    const auto m = row["m"].get<std::size_t>();
    const auto d = row["dim"].get<std::size_t>();
    if (m * d > n * n) ++violations;
  }
  return {r.all_hold && violations == 0 && r.rows.size() == expected,
          fmt("%zu (partition, m) cells for n <= 10, %zu violations of m*dim <= n^2", r.rows.size(), violations)};
}

Outcome ac2_commutant_formula() {
  std::size_t cells = 0;
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      ++cells;
      const std::size_t kernel = commutant_basis(jordan_matrix(p)).dim();
      if (kernel != commutant_dimension_formula(p) || kernel != oracle::min_sum(p.parts())) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%zu partitions of n <= 10, %zu kernel/formula mismatches", cells, mismatches)};
}

const std::vector<std::uint64_t> kSuiteN{1, 2, 3, 4, 5, 6, 7, 8};
const std::vector<std::uint64_t> kSuiteL{1, 2, 3, 4};
constexpr std::size_t kSuiteTrials = 1000;

Outcome ac3_random_commuting_bound() {
  const Report r = random_bound_report(kSuiteN, kSuiteL, kSuiteTrials, kMasterSeed);
  std::size_t violations = 0;
  for (const auto& row : r.rows) {
    const mpz_class lhs(row["lhs"].get<std::string>());
    const mpz_class rhs(row["rhs"].get<std::string>());
    const mpz_class dim(row["dim"].get<std::string>());
    const auto n = row["n"].get<std::uint64_t>();
    const auto l = row["l"].get<std::uint64_t>();
    // Recompute both sides independently of the report.
    if (lhs != oracle::pow(dim.get_ui(), l + 1) || rhs != oracle::pow(l + 1, l + 1) * oracle::pow(n, 2 * l) ||
        lhs > rhs)
      ++violations;
  }
  return {r.all_hold && violations == 0 && r.rows.size() >= 1000,
          fmt("%zu seeded families, n <= 8, l <= 4, %zu violations, max dim %s", r.rows.size(), violations,
              r.summary["max_dim"].dump().c_str())};
}

Outcome ac4_oracle_equivalence() {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  auto check = [&](const CommutingFamily& f) {
    for (const auto& g : f.generators())
      if (!is_nilpotent(g)) return;
    ++checked;
    if (generated_algebra_basis(f).dim() != monomial_span_dimension(f, f.n())) ++disagreements;
  };
  // The same families as the randomized suite, restricted to n <= 6.
  for (std::size_t t = 0; t < kSuiteTrials; ++t) {
    Rng rng(derive_seed(kMasterSeed, t));
    const auto n = kSuiteN[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(kSuiteN.size()) - 1))];
    const auto l = kSuiteL[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(kSuiteL.size()) - 1))];
    const std::uint64_t family_seed = rng.next();
    if (n > 6) continue;
    check(random_commuting_family(n, l, family_seed).first);
  }
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t l = 1; oracle::pow(m, l) <= 6; ++l) check(kronecker_shift_family(m, l));
  for (std::size_t k = 1; 2 * k <= 6; ++k) check(schur_family(k));
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) check(CommutingFamily::verify(n, {jordan_matrix(p)}));
  return {disagreements == 0 && checked > 0,
          fmt("%zu nilpotent families with n <= 6, %zu saturation/monomial disagreements", checked, disagreements)};
}

Outcome ac5_structured_dimensions() {
  std::size_t checked = 0;
  std::size_t wrong = 0;
  for (std::size_t m = 2; m <= 64; ++m) {
    std::size_t n = m;
    for (std::size_t l = 1; n <= 64; ++l, n *= m) {
      ++checked;
      if (generated_algebra_basis(kronecker_shift_family(m, l)).dim() != n) ++wrong;
    }
  }
  for (std::size_t k = 1; 2 * k <= 12; ++k) {
    ++checked;
    if (generated_algebra_basis(schur_family(k)).dim() != k * k + 1) ++wrong;
  }
  for (std::size_t n = 1; n <= 12; ++n) {
    ++checked;
    if (generated_algebra_basis(n, std::vector<Matrix>{jordan_matrix(Partition({n}))}).dim() != n) ++wrong;
  }
  return {wrong == 0, fmt("%zu Kronecker/Schur/Jordan families, %zu wrong dimensions", checked, wrong)};
}

Outcome ac6_arithmetic_chain() {
  std::size_t wrong = 0;
  for (std::uint64_t p = 1; p <= 6; ++p) {
    for (std::uint64_t q = 1; q <= 6; ++q) {
      for (std::uint64_t l = 1; l <= 6; ++l) {
        const mpz_class m = max_irrep_dimension(p, q, l);
        const mpz_class target = oracle::pow(p * q * (l + 1), l + 1);
        const bool boundary = m * m <= target && (m + 1) * (m + 1) > target;
        if (!boundary || !rep_dim_bound_check(m, p, q, l).holds || rep_dim_bound_check(m + 1, p, q, l).holds) ++wrong;
      }
    }
  }
  const bool spot = max_irrep_dimension(1, 1, 1) == 2;
  return {wrong == 0 && spot, fmt("216 (p, q, l) triples, %zu off the boundary; max_irrep_dimension(1,1,1) = %s", wrong,
                                  max_irrep_dimension(1, 1, 1).get_str().c_str())};
}

Outcome ac7_hecke_crossover() {
  bool ok = true;
  for (std::uint64_t k = 1; k <= 1000; ++k) {
    // new^2 = k^6 27 < k^8 exactly when k^2 > 27.
    ok = ok && compare_hecke_bounds(3, k).new_smaller == (k * k > 27);
    ok = ok && !compare_hecke_bounds(2, k).new_smaller;
  }
  ok = ok && hecke_crossover_index(3) == mpz_class(6) && !hecke_crossover_index(2).has_value();
  const Report table = hecke_table_report({2, 3, 4, 5, 6}, {2, 10, 100});
  ok = ok && table.rows.size() == 15;
  for (const auto& row : table.rows) {
    const auto n = row["n"].get<std::uint64_t>();
    const auto k = row["index"].get<std::uint64_t>();
    const bool expected = oracle::pow(k, 2 * n) * oracle::pow(n, n) < oracle::pow(k, std::uint64_t{1} << n);
    ok = ok && row["new_smaller"].get<bool>() == expected;
  }
  std::string crossovers;
  for (std::uint64_t n = 2; n <= 6; ++n) {
    const auto c = hecke_crossover_index(n);
    crossovers += fmt("%s n=%llu:%s", n == 2 ? "" : ",", static_cast<unsigned long long>(n),
                      c ? c->get_str().c_str() : "none");
  }
  return {ok, "n=3 crossover at index 6, n=2 never; table n=2..6 x {2,10,100}; crossovers" + crossovers};
}

Outcome ac8_split_probe() {
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 1; n <= 100; ++n) ns.push_back(n);
  const Report r = split_table_report(ns, {1, 2, 3, 4, 5, 6});
  std::size_t mismatches = 0;
  std::size_t flagged = 0;
  for (const auto& row : r.rows) {
    const auto n = row["n"].get<std::uint64_t>();
    const auto l = row["l"].get<std::uint64_t>();
    if (oracle::optimal_split(n, l).first != row["x_star"].get<std::uint64_t>()) ++mismatches;
    if (row["integer_min_exceeds_continuous"].get<bool>()) ++flagged;
  }
  return {r.rows.size() == 600 && mismatches == 0,
          fmt("600-row report emitted, %zu x_star mismatches vs full scan; %zu (n, l) cells where the integer "
              "minimum exceeds (l+1) n^(2-2/(l+1))",
              mismatches, flagged)};
}

Outcome ac9_joint_decomposition() {
  std::size_t failures = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(derive_seed(kMasterSeed + 9, t));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    const auto l = static_cast<std::size_t>(rng.uniform(1, 3));
    const CommutingFamily family = random_split_family(n, l, rng.next()).first;
    const auto blocks = joint_spectral_decomposition(family);
    bool ok = true;
    std::size_t total = 0;
    std::vector<Vector> all;
    for (const auto& b : blocks) {
      total += b.dim();
      all.insert(all.end(), b.basis.begin(), b.basis.end());
      const Subspace span = Subspace::span_of(b.basis, n);
      for (std::size_t i = 0; i < l; ++i) {
        const Matrix& a = family.generators()[i];
        for (const auto& v : b.basis) ok = ok && span.contains(a * v);
        Matrix shifted = restrict_to(a, b.basis_columns());
        for (std::size_t d = 0; d < shifted.n(); ++d) shifted(d, d) -= b.eigenvalues[i];
        ok = ok && is_nilpotent(shifted);
      }
    }
    ok = ok && total == n && oracle::rank(Matrix::from_vectors(all, n)) == n;
    if (!ok) ++failures;
  }
  return {failures == 0, fmt("100 seeded split families, %zu failed decompositions", failures)};
}

Outcome ac10_determinism() {
  auto render = [] {
    std::string out;
    const std::vector<Report> reports{jordan_sweep_report(6, kDefaultSizeCap),
                                      random_bound_report(kSuiteN, kSuiteL, 200, kMasterSeed),
                                      hecke_table_report({2, 3, 4, 5, 6}, {2, 10, 100}),
                                      split_table_report({1, 10, 50, 100}, {1, 2, 3, 4, 5, 6}),
                                      search_report(4, 4, 50, kMasterSeed)};
    for (const auto& r : reports) out += report_to_json(r).dump(2) + "\n" + report_to_csv(r);
    return out;
  };
  const std::string first = render();
  const std::string second = render();
  return {first == second, fmt("5 sweeps rendered twice as JSON and CSV, %zu bytes, identical=%s", first.size(),
                               first == second ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 shifted commutant bound, all partitions n <= 10", ac1_shifted_commutant_sweep},
      {"AC2 commutant formula equals kernel dimension", ac2_commutant_formula},
      {"AC3 commuting-family bound on >= 1000 random families", ac3_random_commuting_bound},
      {"AC4 saturation equals monomial span", ac4_oracle_equivalence},
      {"AC5 structured family dimensions", ac5_structured_dimensions},
      {"AC6 representation dimension chain", ac6_arithmetic_chain},
      {"AC7 Hecke bound crossover", ac7_hecke_crossover},
      {"AC8 optimal split integrality report", ac8_split_probe},
      {"AC9 joint spectral decomposition", ac9_joint_decomposition},
      {"AC10 byte-identical reports", ac10_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

// JSON-in, JSON-out bindings; comalg/__init__.py turns them into Python values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "comalg/algebra.hpp"
#include "comalg/bounds.hpp"
#include "comalg/commutant.hpp"
#include "comalg/errors.hpp"
#include "comalg/families.hpp"
#include "comalg/io.hpp"
#include "comalg/reports.hpp"
#include "comalg/search.hpp"
#include "comalg/spectral.hpp"

namespace py = pybind11;
using namespace comalg;

namespace {

Json parse(const std::string& text) { return parse_json(text, "argument"); }

Matrix matrix_arg(const std::string& text) { return matrix_from_json(parse(text)); }

CommutingFamily family_arg(const std::string& text) { return family_from_json(parse(text)); }

std::string report_json(const Report& r) { return report_to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact commuting-matrix algebra: commutants, Jordan types, algebra dimensions, bound checks";

  // Translators run newest first, so the base class is registered first.
  const auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<NotNilpotent>(m, "NotNilpotent", error.ptr());
  py::register_exception<NotCommuting>(m, "NotCommuting", error.ptr());
  py::register_exception<NotSplitOverRationals>(m, "NotSplitOverRationals", error.ptr());
  py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", error.ptr());

  m.attr("DEFAULT_SIZE_CAP") = kDefaultSizeCap;

  m.def("jordan_type", [](const std::string& a) { return jordan_type(matrix_arg(a)).parts(); });
  m.def("is_nilpotent", [](const std::string& a) { return is_nilpotent(matrix_arg(a)); });
  m.def("jordan_matrix", [](const std::vector<std::size_t>& p) {
    return to_json(jordan_matrix(Partition(p))).dump();
  });

  m.def(
      "commutant_basis",
      [](const std::string& a, std::size_t cap) {
        Json out = Json::array();
        for (const auto& b : commutant_basis(matrix_arg(a), cap).basis) out.push_back(to_json(b));
        return out.dump();
      },
      py::arg("matrix"), py::arg("size_cap") = kDefaultSizeCap);
  m.def("commutant_dimension_formula",
        [](const std::vector<std::size_t>& p) { return commutant_dimension_formula(Partition(p)); });
  m.def(
      "shifted_commutant_dimension",
      [](const std::string& a, std::size_t shift, std::size_t cap) {
        return shifted_commutant_dimension(matrix_arg(a), shift, cap);
      },
      py::arg("matrix"), py::arg("m"), py::arg("size_cap") = kDefaultSizeCap);
  m.def("verify_jordan_lemma", [](const std::vector<std::size_t>& p, std::size_t shift) {
    const JordanLemmaReport r = verify_jordan_lemma(Partition(p), shift);
    Json out;
    out["partition"] = to_json(r.partition);
    out["m"] = r.m;
    out["dim"] = r.dim;
    out["bound_numerator"] = r.bound_numerator.get_str();
    out["bound_denominator"] = r.bound_denominator.get_str();
    out["holds"] = r.holds;
    out["certificate"] = r.certificate;
    return out.dump();
  });

  m.def("algebra_dim", [](const std::string& family) {
    const CommutingFamily f = family_arg(family);
    return generated_algebra_basis(f.n(), f.generators()).dim();
  });
  m.def("monomial_span_dimension", [](const std::string& family, std::size_t cap) {
    const CommutingFamily f = family_arg(family);
    return monomial_span_dimension(CommutingFamily::verify(f.n(), f.generators()), cap);
  });
  m.def("verify_commuting_bound", [](const std::string& family) {
    const CommutingFamily f = family_arg(family);
    return to_json(verify_commuting_bound(CommutingFamily::verify(f.n(), f.generators()))).dump();
  });
  m.def("joint_spectral_decomposition", [](const std::string& family) {
    const CommutingFamily f = family_arg(family);
    Json out = Json::array();
    for (const auto& b : joint_spectral_decomposition(CommutingFamily::verify(f.n(), f.generators()))) {
      Json block;
      Json eig = Json::array();
      for (const auto& x : b.eigenvalues) eig.push_back(to_json(x));
      Json basis = Json::array();
      for (const auto& v : b.basis) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        basis.push_back(std::move(row));
      }
      block["eigenvalues"] = std::move(eig);
      block["basis"] = std::move(basis);
      out.push_back(std::move(block));
    }
    return out.dump();
  });

  m.def("commuting_algebra_bound_check", [](const std::string& dim, std::uint64_t n, std::uint64_t l) {
    return to_json(commuting_algebra_bound_check(mpz_class(dim), n, l)).dump();
  });
  m.def("rep_dim_bound_check", [](const std::string& n, std::uint64_t p, std::uint64_t q, std::uint64_t l) {
    return to_json(rep_dim_bound_check(mpz_class(n), p, q, l)).dump();
  });
  m.def("max_irrep_dimension",
        [](std::uint64_t p, std::uint64_t q, std::uint64_t l) { return max_irrep_dimension(p, q, l).get_str(); });
  m.def("hecke_crossover_index", [](std::uint64_t n) -> std::optional<std::string> {
    const auto c = hecke_crossover_index(n);
    if (!c) return std::nullopt;
    return c->get_str();
  });
  m.def("compare_hecke_bounds",
        [](std::uint64_t n, std::uint64_t index) { return compare_hecke_bounds(n, index).new_smaller; });
  m.def("optimal_split", [](std::uint64_t n, std::uint64_t l) {
    const OptimalSplit s = optimal_split(n, l);
    Json out;
    out["x_star"] = s.x_star;
    out["f_min"] = to_json(s.f_min);
    out["x0_approx"] = s.x0_display;
    out["continuous_bound_approx"] = s.continuous_display;
    out["integer_min_exceeds_continuous"] = s.integer_min_exceeds_continuous;
    return out.dump();
  });

  m.def("build_family", [](const std::string& spec) { return to_json(build_family(spec_from_json(parse(spec)))).dump(); });
  m.def("random_commuting_family", [](std::size_t n, std::size_t l, std::uint64_t seed) {
    const auto [family, spec] = random_commuting_family(n, l, seed);
    return std::make_pair(to_json(family).dump(), to_json(spec).dump());
  });
  m.def("tightness_search", [](std::size_t n, std::size_t l, std::size_t budget, std::uint64_t seed) {
    return report_to_json(search_report(n, l, budget, seed))["results"][0].dump();
  });

  m.def("jordan_sweep_report", [](std::size_t n_max) { return report_json(jordan_sweep_report(n_max, kDefaultSizeCap)); });
  m.def("random_bound_report", [](const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& ls,
                                  std::size_t trials, std::uint64_t seed) {
    return report_json(random_bound_report(ns, ls, trials, seed));
  });
}

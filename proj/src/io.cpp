#include "comalg/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "comalg/errors.hpp"

namespace comalg {

namespace {

std::string child(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

std::string indexed(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(child(where, key), "missing field");
  return *it;
}

std::uint64_t uint_field(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw ParseError(child(where, key), "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::size_t positive_field(const Json& j, const std::string& key, const std::string& where) {
  const auto v = uint_field(j, key, where);
  if (v == 0) throw ParseError(child(where, key), "expected a positive integer");
  return static_cast<std::size_t>(v);
}

const Json& array_field(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) throw ParseError(child(where, key), "expected an array");
  return v;
}

}  // namespace

Json to_json(const Rational& x) {
  if (x.is_integer()) {
    const mpz_class num = x.numerator();
    if (num.fits_slong_p()) return Json(static_cast<std::int64_t>(num.get_si()));
  }
  return Json(x.to_string());
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where, e.what());
    }
  }
  throw ParseError(where, "expected an integer or a \"p/q\" string");
}

Json to_json(const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = a.rows();
  out["entries"] = std::move(rows);
  return out;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  const std::size_t n = positive_field(j, "n", where);
  const Json& entries = array_field(j, "entries", where);
  const std::string ewhere = child(where, "entries");
  if (entries.size() != n) throw ParseError(ewhere, "expected " + std::to_string(n) + " rows");
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = entries[r];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(indexed(ewhere, r), "expected a row of " + std::to_string(n) + " entries (matrix must be square)");
    }
    for (std::size_t c = 0; c < n; ++c) a(r, c) = rational_from_json(row[c], indexed(indexed(ewhere, r), c));
  }
  return a;
}

Json to_json(const CommutingFamily& family) {
  Json mats = Json::array();
  for (const auto& g : family.generators()) mats.push_back(to_json(g));
  Json out;
  out["n"] = family.n();
  out["matrices"] = std::move(mats);
  return out;
}

CommutingFamily family_from_json(const Json& j, const std::string& where) {
  const std::size_t n = positive_field(j, "n", where);
  const Json& mats = array_field(j, "matrices", where);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const std::string w = indexed(child(where, "matrices"), i);
    Matrix a = matrix_from_json(mats[i], w);
    if (a.n() != n) throw ParseError(w, "matrix size " + std::to_string(a.n()) + " differs from family n = " + std::to_string(n));
    gens.push_back(std::move(a));
  }
  return CommutingFamily::unchecked(n, std::move(gens));
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (auto part : p.parts()) out.push_back(part);
  return out;
}

Partition partition_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an integer array");
  std::vector<std::size_t> parts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned() || j[i].get<std::uint64_t>() == 0) {
      throw ParseError(indexed(where, i), "expected a positive integer");
    }
    parts.push_back(j[i].get<std::size_t>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

Json to_json(const FamilySpec& spec) {
  Json out;
  out["construction"] = to_string(spec.construction());
  std::visit(
      [&out](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PolynomialParams>) {
          out["seed"] = p.seed;
          out["l"] = p.l;
          out["coeff_bound"] = p.coeff_bound;
          out["coefficients"] = p.coefficients;
        } else if constexpr (std::is_same_v<T, KroneckerParams>) {
          out["m"] = p.m;
          out["factors"] = p.factors;
          out["l"] = p.l;
        } else if constexpr (std::is_same_v<T, SchurParams>) {
          out["n"] = p.n;
          out["rows"] = p.rows;
          out["cols"] = p.cols;
          out["l"] = p.l;
        } else if constexpr (std::is_same_v<T, BlockDiagonalParams>) {
          Json blocks = Json::array();
          for (const auto& b : p.blocks) blocks.push_back(to_json(b));
          out["blocks"] = std::move(blocks);
          Json shifts = Json::array();
          for (const auto& row : p.shifts) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(to_json(x));
            shifts.push_back(std::move(r));
          }
          out["shifts"] = std::move(shifts);
        } else {
          out["inner"] = p.inner ? to_json(*p.inner) : Json();
        }
      },
      spec.params);
  out["rng_seed"] = spec.rng_seed;
  return out;
}

FamilySpec spec_from_json(const Json& j, const std::string& where) {
  const Json& kind = field(j, "construction", where);
  if (!kind.is_string()) throw ParseError(child(where, "construction"), "expected a string");
  Construction c;
  try {
    c = construction_from_string(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(child(where, "construction"), e.what());
  }
  FamilySpec spec;
  spec.rng_seed = j.contains("rng_seed") ? uint_field(j, "rng_seed", where) : 0;
  switch (c) {
    case Construction::polynomial: {
      PolynomialParams p;
      p.seed = partition_from_json(field(j, "seed", where), child(where, "seed")).parts();
      p.l = positive_field(j, "l", where);
      p.coeff_bound = j.contains("coeff_bound") ? static_cast<long>(positive_field(j, "coeff_bound", where)) : 1;
      if (j.contains("coefficients")) {
        const Json& coeffs = array_field(j, "coefficients", where);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          const std::string w = indexed(child(where, "coefficients"), i);
          if (!coeffs[i].is_array()) throw ParseError(w, "expected an integer array");
          std::vector<long> row;
          for (std::size_t d = 0; d < coeffs[i].size(); ++d) {
            if (!coeffs[i][d].is_number_integer()) throw ParseError(indexed(w, d), "expected an integer");
            row.push_back(coeffs[i][d].get<long>());
          }
          p.coefficients.push_back(std::move(row));
        }
        if (!p.coefficients.empty() && p.coefficients.size() != p.l) {
          throw ParseError(child(where, "coefficients"), "expected one list per generator");
        }
      }
      spec.params = std::move(p);
      break;
    }
    case Construction::kronecker_shift: {
      KroneckerParams p;
      p.m = positive_field(j, "m", where);
      p.factors = j.contains("factors") ? positive_field(j, "factors", where) : positive_field(j, "l", where);
      p.l = j.contains("l") ? positive_field(j, "l", where) : p.factors;
      spec.params = p;
      break;
    }
    case Construction::schur: {
      SchurParams p;
      if (j.contains("k")) {
        const std::size_t k = positive_field(j, "k", where);
        p = SchurParams{2 * k, k, k, k * k};
      } else {
        p.n = positive_field(j, "n", where);
        p.rows = positive_field(j, "rows", where);
        p.cols = positive_field(j, "cols", where);
        p.l = positive_field(j, "l", where);
      }
      if (p.rows + p.cols > p.n) throw ParseError(where, "schur: rows + cols must not exceed n");
      spec.params = p;
      break;
    }
    case Construction::block_diagonal: {
      BlockDiagonalParams p;
      const Json& blocks = array_field(j, "blocks", where);
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        p.blocks.push_back(spec_from_json(blocks[i], indexed(child(where, "blocks"), i)));
      }
      if (p.blocks.empty()) throw ParseError(child(where, "blocks"), "need at least one block");
      if (j.contains("shifts")) {
        const Json& shifts = array_field(j, "shifts", where);
        for (std::size_t b = 0; b < shifts.size(); ++b) {
          const std::string w = indexed(child(where, "shifts"), b);
          if (!shifts[b].is_array()) throw ParseError(w, "expected an array");
          std::vector<Rational> row;
          for (std::size_t i = 0; i < shifts[b].size(); ++i) row.push_back(rational_from_json(shifts[b][i], indexed(w, i)));
          p.shifts.push_back(std::move(row));
        }
      }
      spec.params = std::move(p);
      break;
    }
    case Construction::conjugated: {
      spec.params = ConjugatedParams{std::make_shared<const FamilySpec>(spec_from_json(field(j, "inner", where), child(where, "inner")))};
      break;
    }
  }
  return spec;
}

Json to_json(const BoundReport& r) {
  Json out;
  out["quantity"] = r.quantity.get_str();
  out["inequality"] = r.inequality;
  out["lhs"] = r.lhs.get_str();
  out["rhs"] = r.rhs.get_str();
  out["holds"] = r.holds;
  Json approx = Json::object();
  for (const auto& [k, v] : r.approx) approx[k] = v;
  out["approx"] = std::move(approx);
  return out;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    throw ParseError(source + ":" + std::to_string(line), e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

}  // namespace comalg

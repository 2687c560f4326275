#include "symlat/io.hpp"

#include <fstream>
#include <stdexcept>

namespace symlat {

namespace {

Scalar scalar_from_json(const Json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(Integer(std::to_string(v.get<std::int64_t>())));
  throw std::invalid_argument("expected a rational as \"p/q\" string or an integer, got " + v.dump());
}

Integer integer_from_json(const Json& v) { return to_integer(scalar_from_json(v)); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json matrix_to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix rows must be a JSON array");
  const std::size_t n = j.size();
  const std::size_t cols = n ? j[0].size() : 0;
  ExactMatrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(j[i][c]);
  }
  return m;
}

Json gram_to_json(const GramMatrix& g) {
  Json j;
  j["size"] = g.size();
  j["rows"] = matrix_to_json(g.matrix());
  return j;
}

GramMatrix gram_from_json(const Json& j) {
  ExactMatrix m = matrix_from_json(field(j, "rows"));
  if (j.contains("size") && j["size"].get<std::size_t>() != m.rows()) {
    throw std::invalid_argument("\"size\" does not match the number of rows");
  }
  if (!m.is_square()) throw std::invalid_argument("Gram matrix must be square");
  return GramMatrix(std::move(m));
}

Json embedding_to_json(const Embedding& e) {
  Json j;
  j["target_gram"] = gram_to_json(GramMatrix(to_exact(e.target().gram())));
  Json rows = Json::array();
  for (std::size_t i = 0; i < e.basis().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < e.basis().cols(); ++c) {
      const Integer& v = e.basis()(i, c);
      if (v.fits_slong_p()) row.push_back(v.get_si()); else row.push_back(to_string(v));
    }
    rows.push_back(std::move(row));
  }
  j["basis_rows"] = rows;
  return j;
}

Embedding embedding_from_json(const Json& j) {
  GramMatrix target = gram_from_json(field(j, "target_gram"));
  const Json& rows = field(j, "basis_rows");
  if (!rows.is_array()) throw std::invalid_argument("basis_rows must be an array");
  IntMatrix basis(rows.size(), target.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != target.size()) {
      throw std::invalid_argument("each basis row needs one entry per target basis vector");
    }
    for (std::size_t c = 0; c < target.size(); ++c) basis(i, c) = integer_from_json(rows[i][c]);
  }
  return Embedding(Lattice(to_integer_matrix(target.matrix())), std::move(basis));
}

Json multipoly_to_json(const MultiPoly& p) {
  Json j;
  j["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [a, c] : p.terms()) terms.push_back({{"exp", a.exponents()}, {"coef", to_string(c)}});
  j["terms"] = terms;
  return j;
}

MultiPoly multipoly_from_json(const Json& j) {
  const std::size_t vars = field(j, "vars").get<std::size_t>();
  if (vars == 0) throw std::invalid_argument("a polynomial needs at least one variable");
  MultiPoly p(vars);
  for (const auto& t : field(j, "terms")) {
    auto exps = field(t, "exp").get<std::vector<int>>();
    if (exps.size() != vars) throw std::invalid_argument("term exponent length differs from \"vars\"");
    p.add_term(MultiIndex(std::move(exps)), scalar_from_json(field(t, "coef")));
  }
  return p;
}

Json primes_to_json(const std::vector<Integer>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) {
    if (p.fits_slong_p()) out.push_back(p.get_si()); else out.push_back(to_string(p));
  }
  return out;
}

Json hk_report_to_json(const HKReport& r) {
  Json j;
  j["manifold"] = r.manifold;
  j["k"] = r.k;
  j["rank"] = r.rank.fits_slong_p() ? Json(r.rank.get_si()) : Json(to_string(r.rank));
  j["discriminant"] = r.discriminant.to_string();
  j["prime_set"] = primes_to_json(r.prime_set);
  j["square_free_part"] = r.discriminant.square_free_part().to_string();
  if (r.torsion) j["torsion"] = r.torsion->to_string();
  if (r.complement_discriminant) {
    j["complement_discriminant"] = r.complement_discriminant->to_string();
    j["complement_square_free_part"] = r.complement_discriminant->square_free_part().to_string();
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace symlat

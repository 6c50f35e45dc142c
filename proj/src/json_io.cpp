#include "liealg/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "liealg/combinatorics.hpp"

namespace liealg {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar parse_scalar(const json& j) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected a rational string, got " + j.dump());
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

Vec parse_vec(const json& j, size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("expected an array of length " + std::to_string(n));
  Vec v;
  for (const auto& x : j) v.push_back(parse_scalar(x));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json a = json::array();
  for (size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
  return a;
}

Matrix parse_matrix(const json& j, size_t rows, size_t cols) {
  const json& rj = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!rj.is_array() || rj.size() != rows) throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  std::vector<Vec> r;
  for (const auto& row : rj) r.push_back(parse_vec(row, cols));
  return Matrix::from_rows(r, cols);
}

namespace {

size_t get_index(const json& obj, const char* key, size_t n) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) throw ParseError(std::string("missing integer field ") + key);
  long v = obj.at(key).get<long>();
  if (v < 1 || static_cast<size_t>(v) > n) throw ParseError(std::string("index out of range in ") + key);
  return static_cast<size_t>(v - 1);
}

Tuple get_tuple(const json& obj, size_t n) {
  if (!obj.contains("idx") || !obj.at("idx").is_array()) throw ParseError("missing idx array");
  Tuple t;
  for (const auto& x : obj.at("idx")) {
    if (!x.is_number_integer()) throw ParseError("idx entries must be integers");
    long v = x.get<long>();
    if (v < 1 || static_cast<size_t>(v) > n) throw ParseError("idx entry out of range");
    t.push_back(static_cast<size_t>(v - 1));
  }
  return t;
}

json tuple_to_json(const Tuple& t) {
  json a = json::array();
  for (size_t i : t) a.push_back(i + 1);
  return a;
}

}  // namespace

ParsedAlgebra parse_structure(const json& j) {
  if (!j.is_object()) throw ParseError("algebra must be a JSON object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long>() < 0)
    throw ParseError("missing nonnegative integer dim");
  const size_t n = j.at("dim").get<size_t>();
  ParsedAlgebra out;
  if (j.contains("field")) {
    if (!j.at("field").is_string()) throw ParseError("field must be a string");
    try {
      out.field = parse_field(j.at("field").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("name must be a string");
    out.name = j.at("name").get<std::string>();
  }
  out.sc = StructureConstants(n);
  if (j.contains("brackets")) {
    if (!j.at("brackets").is_array()) throw ParseError("brackets must be an array");
    for (const auto& b : j.at("brackets")) {
      if (!b.is_object()) throw ParseError("bracket entries must be objects");
      size_t i = get_index(b, "i", n), k = get_index(b, "j", n);
      if (i >= k) throw ParseError("bracket entries need i < j");
      if (!b.contains("c")) throw ParseError("bracket entry without c");
      Vec c = parse_vec(b.at("c"), n);
      for (size_t t = 0; t < n; ++t) {
        if (out.field == Field::Q && !c[t].is_real()) throw FieldMismatch("Gaussian coefficient in an algebra over Q");
        if (!c[t].is_zero()) out.sc.add(i, k, t, c[t]);
      }
    }
  }
  return out;
}

LieAlgebra parse_algebra(const json& j) {
  ParsedAlgebra p = parse_structure(j);
  return LieAlgebra(p.sc, p.field, p.name);
}

json structure_to_json(const StructureConstants& sc, Field field, const std::string& name) {
  const size_t n = sc.n();
  json j;
  j["dim"] = n;
  j["field"] = field == Field::Q ? "Q" : "Q(i)";
  if (!name.empty()) j["name"] = name;
  json br = json::array();
  for (size_t i = 0; i < n; ++i)
    for (size_t k = i + 1; k < n; ++k) {
      const auto& p = sc.pair(i, k);
      if (p.empty()) continue;
      Vec c(n);
      for (const auto& [t, v] : p) c[t] = v;
      br.push_back({{"i", i + 1}, {"j", k + 1}, {"c", vec_to_json(c)}});
    }
  j["brackets"] = br;
  return j;
}

json algebra_to_json(const LieAlgebra& g) { return structure_to_json(g.sc(), g.field(), g.name()); }

json cochain_to_json(const Cochain& c) {
  json j;
  j["p"] = c.p();
  json e = json::array();
  const auto& tuples = combinations(c.n(), c.p());
  for (size_t r = 0; r < tuples.size(); ++r)
    for (size_t k = 0; k < c.n(); ++k) {
      const Scalar& v = c.at(tuples[r], k);
      if (!v.is_zero()) e.push_back({{"idx", tuple_to_json(tuples[r])}, {"k", k + 1}, {"c", scalar_to_json(v)}});
    }
  j["entries"] = e;
  return j;
}

Cochain parse_cochain(const json& j, size_t n) {
  if (!j.is_object() || !j.contains("p") || !j.at("p").is_number_integer()) throw ParseError("cochain needs integer p");
  long p = j.at("p").get<long>();
  if (p < 0 || static_cast<size_t>(p) > n) throw ParseError("cochain degree out of range");
  Cochain c(n, static_cast<size_t>(p));
  if (j.contains("entries")) {
    if (!j.at("entries").is_array()) throw ParseError("entries must be an array");
    for (const auto& e : j.at("entries")) {
      Tuple t = get_tuple(e, n);
      if (t.size() != static_cast<size_t>(p)) throw ParseError("idx length differs from p");
      Tuple s = t;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError("repeated index in idx");
      size_t k = get_index(e, "k", n);
      if (!e.contains("c")) throw ParseError("cochain entry without c");
      Cochain one(n, static_cast<size_t>(p));
      one.set(t, k, parse_scalar(e.at("c")));
      c += one;
    }
  }
  return c;
}

json form_to_json(const ScalarForm& w) {
  json j;
  j["p"] = w.p();
  json e = json::array();
  for (const auto& t : combinations(w.n(), w.p()).all()) {
    Scalar v = w.value(t);
    if (!v.is_zero()) e.push_back({{"idx", tuple_to_json(t)}, {"c", scalar_to_json(v)}});
  }
  j["entries"] = e;
  return j;
}

ScalarForm parse_form(const json& j, size_t n) {
  if (!j.is_object() || !j.contains("p") || !j.at("p").is_number_integer()) throw ParseError("form needs integer p");
  long p = j.at("p").get<long>();
  if (p < 0 || static_cast<size_t>(p) > n) throw ParseError("form degree out of range");
  ScalarForm w(n, static_cast<size_t>(p));
  if (j.contains("entries")) {
    if (!j.at("entries").is_array()) throw ParseError("entries must be an array");
    for (const auto& e : j.at("entries")) {
      Tuple t = get_tuple(e, n);
      if (t.size() != static_cast<size_t>(p)) throw ParseError("idx length differs from p");
      if (!e.contains("c")) throw ParseError("form entry without c");
      Tuple s = t;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError("repeated index in idx");
      // sign of the sorting permutation
      int sign = 1;
      for (size_t a = 0; a < t.size(); ++a)
        for (size_t b = a + 1; b < t.size(); ++b)
          if (t[a] > t[b]) sign = -sign;
      w += Scalar(sign) * parse_scalar(e.at("c")) * ScalarForm::basis(n, s);
    }
  }
  return w;
}

json series_to_json(const TruncatedSeries& s) {
  json j;
  j["order"] = s.order();
  j["c"] = vec_to_json(s.coeffs());
  return j;
}

TruncatedSeries parse_series(const json& j, size_t order) {
  const json& cj = j.is_object() ? j.at("c") : j;
  if (!cj.is_array() || cj.empty() || cj.size() > order + 1) throw ParseError("series needs 1..order+1 coefficients");
  std::vector<Scalar> c(order + 1);
  for (size_t i = 0; i < cj.size(); ++i) c[i] = parse_scalar(cj[i]);
  return TruncatedSeries(c, order);
}

DeformationJet parse_jet(const json& j) {
  if (!j.is_object() || !j.contains("base")) throw ParseError("jet needs a base algebra");
  DeformationJet jet;
  jet.base = parse_algebra(j.at("base"));
  if (j.contains("order")) {
    if (!j.at("order").is_number_integer() || j.at("order").get<long>() < 1) throw ParseError("order must be a positive integer");
    jet.order = j.at("order").get<size_t>();
  }
  if (j.contains("terms")) {
    if (!j.at("terms").is_array()) throw ParseError("terms must be an array");
    for (const auto& t : j.at("terms")) {
      Cochain c = parse_cochain(t, jet.base.dim());
      if (c.p() != 2) throw ParseError("jet terms must be 2-cochains");
      jet.terms.push_back(c);
    }
  }
  if (jet.terms.size() > jet.order) throw ParseError("more terms than the truncation order");
  return jet;
}

json subspace_to_json(const Subspace& s) {
  json a = json::array();
  for (const auto& v : s.basis()) a.push_back(vec_to_json(v));
  return a;
}

json residuals_to_json(const ValidationReport& r) {
  json a = json::array();
  for (const auto& x : r.residuals)
    a.push_back({{"i", x.i + 1}, {"j", x.j + 1}, {"k", x.k + 1}, {"s", x.s + 1}, {"value", scalar_to_json(x.value)}});
  return a;
}

}  // namespace liealg

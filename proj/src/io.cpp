#include "solvmetry/io.hpp"

#include "solvmetry/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace solvmetry {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxDim = 64;

[[noreturn]] void field_error(const std::string& source, const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, source + ": field '" + field + "': " + what);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError,
                source + ": line " + std::to_string(line) + ", column " + std::to_string(column) + ": invalid JSON");
  }
}

const json& require(const json& obj, const char* key, const std::string& source, const std::string& prefix = "") {
  if (!obj.is_object()) field_error(source, prefix.empty() ? "<root>" : prefix, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(source, prefix + key, "missing");
  return *it;
}

std::size_t read_index(const json& v, const std::string& source, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) field_error(source, field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Rational read_rational(const json& v, const std::string& source, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) field_error(source, field, "expected a rational string such as \"3/7\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    field_error(source, field, e.what());
  }
}

QVec read_vector(const json& v, std::size_t n, const std::string& source, const std::string& field) {
  if (!v.is_array()) field_error(source, field, "expected an array");
  if (v.size() != n)
    field_error(source, field, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  QVec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = read_rational(v[i], source, field + "[" + std::to_string(i) + "]");
  return out;
}

std::vector<QVec> read_basis(const json& v, std::size_t n, const std::string& source, const std::string& field) {
  if (!v.is_array()) field_error(source, field, "expected an array of vectors");
  std::vector<QVec> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_vector(v[i], n, source, field + "[" + std::to_string(i) + "]"));
  if (Subspace::span(n, out).dim() != out.size()) field_error(source, field, "basis vectors are linearly dependent");
  return out;
}

ojson rational_vector(const QVec& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedAlgebra parse_algebra(const std::string& text, const std::string& source, bool check_jacobi) {
  const json doc = parse_json(text, source);
  const json& jdim = require(doc, "dim", source);
  const std::size_t n = read_index(jdim, source, "dim");
  if (n > kMaxDim) field_error(source, "dim", "at most " + std::to_string(kMaxDim) + " supported");
  std::string name = source;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) field_error(source, "name", "expected a string");
    name = doc["name"].get<std::string>();
  }

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> given;
  std::vector<Rational> c(n * n * n);
  const json& brackets = require(doc, "brackets", source);
  if (!brackets.is_array()) field_error(source, "brackets", "expected an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string field = "brackets[" + std::to_string(b) + "]";
    const json& entry = brackets[b];
    const std::size_t i = read_index(require(entry, "i", source, field + "."), source, field + ".i");
    const std::size_t j = read_index(require(entry, "j", source, field + "."), source, field + ".j");
    if (i >= n || j >= n) field_error(source, field, "index out of range for dim " + std::to_string(n));
    const json& coeffs = require(entry, "coeffs", source, field + ".");
    if (!coeffs.is_object()) field_error(source, field + ".coeffs", "expected an object {\"k\": \"rational\"}");
    for (const auto& [key, value] : coeffs.items()) {
      const std::string cf = field + ".coeffs." + key;
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        field_error(source, cf, "key must be a basis index");
      }
      if (k >= n) field_error(source, cf, "index out of range for dim " + std::to_string(n));
      const Rational q = read_rational(value, source, cf);
      if (q == 0) continue;
      if (i == j)
        throw Error(ErrorKind::ValidationFailed, source + ": " + field + ": [e_" + std::to_string(i) + ", e_" +
                                                      std::to_string(i) + "] must vanish (antisymmetry)");
      if (!given.emplace(std::make_tuple(i, j, k), q).second) field_error(source, cf, "duplicate coefficient");
    }
  }
  for (const auto& [key, q] : given) {
    const auto [i, j, k] = key;
    const auto mirror = given.find(std::make_tuple(j, i, k));
    if (mirror != given.end() && mirror->second != -q)
      throw Error(ErrorKind::ValidationFailed,
                  source + ": antisymmetry violated: c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                      std::to_string(k) + "] = " + to_string(q) + " but c[" + std::to_string(j) + "][" +
                      std::to_string(i) + "][" + std::to_string(k) + "] = " + to_string(mirror->second));
    c[(i * n + j) * n + k] = q;
    c[(j * n + i) * n + k] = -q;
  }
  // Pairs given in only one order with some coefficient missing on the other side.
  for (const auto& [key, q] : given) {
    const auto [i, j, k] = key;
    bool other_order = false;
    for (std::size_t kk = 0; kk < n; ++kk) other_order = other_order || given.count(std::make_tuple(j, i, kk));
    if (other_order && !given.count(std::make_tuple(j, i, k)))
      throw Error(ErrorKind::ValidationFailed, source + ": antisymmetry violated: [e_" + std::to_string(j) + ", e_" +
                                                   std::to_string(i) + "] is listed without its e_" +
                                                   std::to_string(k) + " coefficient");
  }

  LieAlgebra L(name, n, std::move(c));
  if (check_jacobi) {
    const auto violations = validate(L);
    if (!violations.empty())
      throw Error(ErrorKind::ValidationFailed, source + ": " + describe(violations.front()) +
                                                   (violations.size() > 1 ? " (and " + std::to_string(violations.size() - 1) + " more)" : ""));
  }

  QMat gram = QMat::identity(n);
  if (doc.contains("metric") && !doc["metric"].is_null()) {
    const json& m = doc["metric"];
    if (!m.is_array() || m.size() != n) field_error(source, "metric", "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      const QVec row = read_vector(m[i], n, source, "metric[" + std::to_string(i) + "]");
      for (std::size_t j = 0; j < n; ++j) gram(i, j) = row[j];
    }
    if (!(gram == gram.transpose())) throw Error(ErrorKind::InvalidInput, source + ": metric is not symmetric");
  }
  ParsedAlgebra out;
  try {
    out.algebra = MetricLieAlgebra(std::move(L), gram);
  } catch (const Error& e) {
    throw Error(e.kind(), source + ": " + e.what());
  }
  if (doc.contains("basis_labels")) {
    const json& labels = doc["basis_labels"];
    if (!labels.is_array() || labels.size() != n) field_error(source, "basis_labels", "expected " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!labels[i].is_string()) field_error(source, "basis_labels[" + std::to_string(i) + "]", "expected a string");
      out.basis_labels.push_back(labels[i].get<std::string>());
    }
  }
  return out;
}

ParsedAlgebra load_algebra(const std::string& path, bool check_jacobi) {
  return parse_algebra(read_file(path), path, check_jacobi);
}

std::string emit_algebra(const MetricLieAlgebra& M, const std::vector<std::string>& basis_labels) {
  const LieAlgebra& L = M.algebra();
  const std::size_t n = L.dim();
  ojson doc;
  doc["name"] = L.name();
  doc["dim"] = n;
  ojson brackets = ojson::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ojson coeffs = ojson::object();
      for (std::size_t k = 0; k < n; ++k)
        if (L.c(i, j, k) != 0) coeffs[std::to_string(k)] = to_string(L.c(i, j, k));
      if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  doc["brackets"] = brackets;
  ojson metric = ojson::array();
  for (std::size_t i = 0; i < n; ++i) metric.push_back(rational_vector(M.gram().row(i)));
  doc["metric"] = metric;
  if (!basis_labels.empty()) doc["basis_labels"] = basis_labels;
  return doc.dump(2) + "\n";
}

Subspace parse_subspace(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const std::size_t n = read_index(require(doc, "ambient_dim", source), source, "ambient_dim");
  return Subspace(n, read_basis(require(doc, "basis", source), n, source, "basis"));
}

Subspace load_subspace(const std::string& path) { return parse_subspace(read_file(path), path); }

std::string emit_subspace(const Subspace& V) {
  ojson doc;
  doc["ambient_dim"] = V.ambient_dim();
  ojson basis = ojson::array();
  for (const auto& v : V.basis()) basis.push_back(rational_vector(v));
  doc["basis"] = basis;
  return doc.dump(2) + "\n";
}

std::pair<Subspace, Subspace> parse_lr(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const std::size_t n = read_index(require(doc, "ambient_dim", source), source, "ambient_dim");
  return {Subspace(n, read_basis(require(doc, "s1", source), n, source, "s1")),
          Subspace(n, read_basis(require(doc, "s2", source), n, source, "s2"))};
}

std::pair<Subspace, Subspace> load_lr(const std::string& path) { return parse_lr(read_file(path), path); }

}  // namespace solvmetry

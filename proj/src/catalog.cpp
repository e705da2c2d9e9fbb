#include "solvmetry/catalog.hpp"

#include "solvmetry/errors.hpp"

#include <sstream>

namespace solvmetry {

namespace {

using B = LieAlgebra::Bracket;

Rational q(long p, long d = 1) {
  Rational r{mpz_class(p), mpz_class(d)};
  r.canonicalize();
  return r;
}

CatalogEntry make(std::string name, std::size_t dim, const std::vector<B>& brackets,
                  std::vector<std::string> labels, std::vector<std::size_t> nil, std::string description) {
  CatalogEntry e;
  e.name = name;
  e.algebra = MetricLieAlgebra(LieAlgebra::from_brackets(std::move(name), dim, brackets));
  e.basis_labels = std::move(labels);
  std::vector<QVec> nb;
  for (auto i : nil) nb.push_back(unit_vector(dim, i));
  e.expected_nilradical = Subspace(dim, nb);
  e.description = std::move(description);
  return e;
}

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v;
  for (auto i = from; i < to; ++i) v.push_back(i);
  return v;
}

std::size_t parse_size(const std::string& s, const std::string& full) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw Error(ErrorKind::UnknownCatalogEntry, "bad catalog parameter in '" + full + "'");
  return v;
}

CatalogEntry hyperbolic(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::UnknownCatalogEntry, "hyperbolic:<n> needs n >= 2");
  std::vector<B> br;
  std::vector<std::string> labels{"X"};
  for (std::size_t i = 1; i < n; ++i) {
    br.push_back({0, i, i, 1});
    labels.push_back("e" + std::to_string(i));
  }
  return make("hyperbolic:" + std::to_string(n), n, br, labels, iota(1, n),
              "R X acting by the identity on R^" + std::to_string(n - 1) + " (real hyperbolic space)");
}

CatalogEntry diag_solv(const std::vector<Rational>& w, const std::string& tag) {
  const std::size_t n = w.size() + 1;
  std::vector<B> br;
  std::vector<std::string> labels{"X"};
  for (std::size_t i = 1; i < n; ++i) {
    if (sgn(w[i - 1]) != 0) br.push_back({0, i, i, w[i - 1]});
    labels.push_back("e" + std::to_string(i));
  }
  std::vector<std::size_t> nil;
  for (std::size_t i = 1; i < n; ++i) nil.push_back(i);
  bool all_zero = true;
  for (const auto& x : w) all_zero = all_zero && sgn(x) == 0;
  if (all_zero) nil.insert(nil.begin(), 0);
  return make("diag_solv:" + tag, n, br, labels, nil, "R X acting diagonally with weights " + tag);
}

CatalogEntry abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return make("abelian:" + std::to_string(n), n, {}, labels, iota(0, n), "abelian R^" + std::to_string(n));
}

CatalogEntry non_solvable(std::string name, std::size_t dim, const std::vector<B>& br,
                          std::vector<std::string> labels, std::string description) {
  CatalogEntry e;
  e.name = name;
  e.algebra = MetricLieAlgebra(LieAlgebra::from_brackets(std::move(name), dim, br));
  e.basis_labels = std::move(labels);
  e.description = std::move(description);
  return e;
}

std::string available() {
  std::ostringstream os;
  os << "available: ";
  bool first = true;
  for (const auto& n : catalog_names()) {
    os << (first ? "" : ", ") << n;
    first = false;
  }
  os << " (parametric: hyperbolic:<n>, abelian:<n>, diag_solv:<w1>,<w2>,...)";
  return os.str();
}

}  // namespace

CatalogEntry catalog_entry(const std::string& full) {
  const auto colon = full.find(':');
  const std::string base = full.substr(0, colon);
  const std::string param = colon == std::string::npos ? std::string() : full.substr(colon + 1);
  const bool has_param = colon != std::string::npos;
  auto no_param = [&] {
    if (has_param) throw Error(ErrorKind::UnknownCatalogEntry, "catalog entry '" + base + "' takes no parameters");
  };

  if (base == "heisenberg3" || base == "h3") {
    no_param();
    return make("heisenberg3", 3, {{0, 1, 2, 1}}, {"X", "Y", "Z"}, {0, 1, 2}, "3-dimensional Heisenberg algebra");
  }
  if (base == "aff1") {
    no_param();
    return make("aff1", 2, {{0, 1, 1, 1}}, {"X", "Y"}, {1}, "affine algebra of the line (hyperbolic plane)");
  }
  if (base == "hyperbolic") return hyperbolic(has_param ? parse_size(param, full) : 3);
  if (base == "hyperbolic3") {
    no_param();
    return hyperbolic(3);
  }
  if (base == "oscillator4") {
    no_param();
    return make("oscillator4", 4, {{0, 1, 2, 1}, {0, 2, 1, -1}, {1, 2, 3, 1}}, {"T", "X", "Y", "Z"}, {1, 2, 3},
                "oscillator algebra: T rotates the Heisenberg plane");
  }
  if (base == "nilpotent5") {
    no_param();
    auto e = make("nilpotent5", 5, {{0, 1, 3, 1}, {1, 2, 4, 1}}, {"e1", "e2", "e3", "e4", "e5"}, iota(0, 5),
                  "5-dimensional 2-step nilpotent algebra with a skew derivation nonsingular on the center");
    QMat d(5, 5);
    d(2, 0) = -1;  // D e1 = -e3
    d(0, 2) = 1;   // D e3 = e1
    d(4, 3) = 1;   // D e4 = e5
    d(3, 4) = -1;  // D e5 = -e4
    e.expected_skew_derivation = d;
    return e;
  }
  if (base == "h2xR") {
    no_param();
    return make("h2xR", 3, {{0, 1, 1, 1}}, {"X", "Y", "W"}, {1, 2}, "aff1 plus a central line");
  }
  if (base == "diag_solv") {
    if (!has_param || param.empty()) throw Error(ErrorKind::UnknownCatalogEntry, "diag_solv needs weights, e.g. diag_solv:1,2");
    std::vector<Rational> w;
    std::stringstream ss(param);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        w.push_back(parse_rational(item));
      } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::UnknownCatalogEntry, "bad diag_solv weight '" + item + "'");
      }
    }
    return diag_solv(w, param);
  }
  if (base == "spiral3") {
    no_param();
    return make("spiral3", 3, {{0, 1, 1, 1}, {0, 1, 2, 1}, {0, 2, 1, -1}, {0, 2, 2, 1}}, {"X", "Y1", "Y2"}, {1, 2},
                "R X acting on R^2 by the identity plus a rotation");
  }
  if (base == "abelian") return abelian(has_param ? parse_size(param, full) : 3);
  if (base == "aff1_std4") {
    no_param();
    return make("aff1_std4", 4, {{0, 1, 1, 1}, {0, 2, 2, q(1, 2)}, {0, 3, 3, q(-1, 2)}, {1, 3, 2, 1}},
                {"X", "Y", "V1", "V2"}, {1, 2, 3}, "aff1 acting on R^2 through the standard sl2 representation");
  }
  if (base == "aff1xh3") {
    no_param();
    return make("aff1xh3", 5, {{0, 1, 1, 1}, {2, 3, 4, 1}}, {"X", "Y", "P", "Q", "Z"}, {1, 2, 3, 4},
                "aff1 plus the Heisenberg algebra");
  }
  if (base == "sl2") {
    no_param();
    return non_solvable("sl2", 3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}, {"H", "E", "F"}, "sl(2,R)");
  }
  if (base == "so3") {
    no_param();
    return non_solvable("so3", 3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}, {"e1", "e2", "e3"}, "so(3)");
  }
  if (base == "sl2_plus_R2") {
    no_param();
    return non_solvable("sl2_plus_R2", 5,
                        {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}, {0, 3, 3, 1}, {0, 4, 4, -1}, {1, 4, 3, 1}, {2, 3, 4, 1}},
                        {"H", "E", "F", "v1", "v2"}, "sl(2,R) acting on R^2 by the standard representation");
  }
  throw Error(ErrorKind::UnknownCatalogEntry, "unknown catalog entry '" + full + "'; " + available());
}

MetricLieAlgebra catalog(const std::string& name) { return catalog_entry(name).algebra; }

std::vector<std::string> catalog_names() {
  auto names = solvable_catalog_names();
  names.insert(names.end(), {"sl2", "so3", "sl2_plus_R2"});
  return names;
}

std::vector<std::string> solvable_catalog_names() {
  return {"heisenberg3", "aff1",      "hyperbolic:3", "oscillator4", "nilpotent5", "h2xR",
          "diag_solv:1,2", "spiral3", "abelian:3",    "aff1_std4",   "aff1xh3",    "hyperbolic:4",
          "diag_solv:1,-1"};
}

}  // namespace solvmetry

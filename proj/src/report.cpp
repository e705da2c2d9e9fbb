#include "solvmetry/report.hpp"

#include "solvmetry/catalog.hpp"
#include "solvmetry/errors.hpp"
#include "solvmetry/isometry.hpp"
#include "solvmetry/modification.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

namespace solvmetry {

using ojson = nlohmann::ordered_json;

namespace {

ojson approx(double x) {
  if (x == 0 || !std::isfinite(x)) return ojson{{"approx", x == 0 ? 0.0 : x}};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double v = std::strtod(buf, nullptr);
  if (v == 0) v = 0.0;
  return ojson{{"approx", v}};
}

ojson rational_vector(const QVec& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ojson matrix(const QMat& m) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(rational_vector(m.row(i)));
  return a;
}

ojson subspace(const Subspace& V) {
  ojson basis = ojson::array();
  for (const auto& v : V.basis()) basis.push_back(rational_vector(v));
  return ojson{{"dim", V.dim()}, {"basis", basis}};
}

ojson algebra_object(const LieAlgebra& L, const QMat* gram) {
  return ojson::parse(emit_algebra(gram ? MetricLieAlgebra(L, *gram) : MetricLieAlgebra(L)));
}

ojson algebra_without_metric(const LieAlgebra& L) {
  ojson o = ojson::parse(emit_algebra(MetricLieAlgebra(L)));
  o.erase("metric");
  return o;
}

ojson signature_json(const Signature& s) {
  return ojson{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

ojson optional_bool(const std::optional<bool>& b) { return b ? ojson(*b) : ojson(nullptr); }

std::string kind_name(ErrorKind k) { return std::string(to_string(k)); }

const char* status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Ok:
      return "ok";
    case RunStatus::DomainError:
      return "domain_error";
    case RunStatus::InputError:
      return "input_error";
    case RunStatus::InternalError:
      return "internal_error";
  }
  return "internal_error";
}

void require_solvable(const LieAlgebra& L, const std::string& what) {
  if (!structure_flags(L).solvable) throw Error(ErrorKind::NotSolvable, what + " needs a solvable algebra");
}

ojson cmd_validate(const ParsedAlgebra& in, RunStatus& status) {
  const auto violations = validate(in.algebra.algebra());
  ojson list = ojson::array();
  for (const auto& v : violations) {
    ojson item;
    item["kind"] = v.kind == Violation::Kind::Antisymmetry ? "antisymmetry" : "jacobi";
    item["indices"] = v.kind == Violation::Kind::Antisymmetry ? ojson{v.i, v.j, v.k} : ojson{v.i, v.j, v.k, v.l};
    item["value"] = to_string(v.value);
    item["description"] = describe(v);
    list.push_back(item);
  }
  if (!violations.empty()) status = RunStatus::InputError;
  return ojson{{"valid", violations.empty()}, {"violation_count", violations.size()}, {"violations", list}};
}

ojson cmd_invariants(const ParsedAlgebra& in, const RunOptions& opt) {
  const MetricLieAlgebra& M = in.algebra;
  const LieAlgebra& L = M.algebra();
  const StructureFlags f = structure_flags(L);
  ojson r;
  r["name"] = L.name();
  r["dim"] = L.dim();
  r["flags"] = {{"solvable", f.solvable}, {"nilpotent", f.nilpotent}, {"abelian", f.abelian}, {"unimodular", is_unimodular(L)}};
  ojson ds = ojson::array(), lcs = ojson::array();
  for (const auto& V : derived_series(L)) ds.push_back(V.dim());
  for (const auto& V : lower_central_series(L)) lcs.push_back(V.dim());
  r["derived_series_dims"] = ds;
  r["lower_central_series_dims"] = lcs;
  r["center"] = subspace(center(L));
  r["derived_algebra"] = subspace(derived_subalgebra(L));
  r["radical"] = subspace(radical(L));
  r["killing_signature"] = signature_json(signature(killing_form(L)));
  r["derivation_dim"] = derivation_algebra(L).dim();
  const DerivationSpace skew = skew_derivations(M);
  ojson mats = ojson::array();
  for (const auto& D : skew.basis) mats.push_back(matrix(D));
  r["skew_derivations"] = {{"dim", skew.dim()}, {"basis", mats}};
  if (f.solvable) {
    r["nilradical"] = subspace(nilradical(L, opt.tol));
    const WeightSystem ws = adjoint_weights(L, opt.tol);
    ojson weights = ojson::array();
    for (const auto& w : ws.distinct_weights(opt.tol.eps_eig)) {
      ojson re = ojson::array(), im = ojson::array();
      for (Eigen::Index k = 0; k < w.size(); ++k) {
        re.push_back(approx(w(k).real()));
        im.push_back(approx(w(k).imag()));
      }
      weights.push_back({{"re", re}, {"im", im}});
    }
    r["weights"] = weights;
  }
  return r;
}

ojson cmd_classify(const ParsedAlgebra& in, const RunOptions& opt) {
  const MetricLieAlgebra& M = in.algebra;
  const LieAlgebra& L = M.algebra();
  require_solvable(L, "classify");
  const AcsResult acs = is_almost_completely_solvable(L, opt.tol);
  const PositivityResult pos = is_positive(L, opt.tol);
  const StronglySolvableFlag flag = strongly_solvable_flag(M, opt.tol);
  ojson r;
  r["solvable"] = true;
  r["nilpotent"] = structure_flags(L).nilpotent;
  r["acs"] = acs.acs;
  r["acs_witness"] = acs.witness ? rational_vector(*acs.witness) : ojson(nullptr);
  r["admissible"] = is_admissible(L);
  r["positive"] = pos.positive;
  if (pos.witness) {
    ojson w = ojson::array();
    for (double x : *pos.witness) w.push_back(approx(x));
    r["positive_witness"] = w;
  } else {
    r["positive_witness"] = nullptr;
  }
  r["positive_margin"] = approx(pos.margin);
  r["unimodular"] = is_unimodular(L);
  r["strongly_solvable"] = flag.value ? ojson(true) : ojson("unknown");
  r["strongly_solvable_basis"] = flag.basis;
  r["nilradical"] = subspace(nilradical(L, opt.tol));
  return r;
}

ojson certificate_json(const Certificate& c) {
  return ojson{{"passed", c.passed()},           {"phi_abelian", c.phi_abelian}, {"derived_in_kernel", c.derived_in_kernel},
               {"normalizes", c.normalizes},     {"subalgebra", c.subalgebra},   {"failures", c.failures}};
}

ojson modification_json(const ModificationResult& m) {
  ojson r;
  r["derivation_dim"] = m.host.d();
  r["trivial"] = m.is_trivial();
  r["phi"] = matrix(m.phi);
  r["s_prime_in_host"] = subspace(m.s_prime);
  r["certificate"] = certificate_json(normal_modification_certificate(m));
  r["induced_algebra"] = algebra_object(m.induced_metric.algebra(), &m.induced_metric.gram());
  return r;
}

ojson cmd_modify(const ParsedAlgebra& in) {
  require_solvable(in.algebra.algebra(), "modify");
  return modification_json(standard_modification(in.algebra));
}

ojson cmd_standard_position(const ParsedAlgebra& in, const RunOptions& opt) {
  const MetricLieAlgebra& M = in.algebra;
  require_solvable(M.algebra(), "standard-position");
  const StandardPosition sp = standard_position(M);
  ojson r;
  r["iterations"] = sp.iterations;
  r["fixed_point_verified"] = sp.fixed_point_verified;
  ojson steps = ojson::array();
  for (const auto& s : sp.steps) steps.push_back({{"derivation_dim", s.host.d()}, {"trivial", s.is_trivial()}});
  r["steps"] = steps;
  r["algebra"] = algebra_object(sp.algebra().algebra(), &sp.algebra().gram());
  const bool applicable = is_almost_completely_solvable(M.algebra(), opt.tol).acs && is_admissible(M.algebra());
  const CenterContainment cc = center_in_r_derived(M, sp);
  r["center_in_r_derived"] = {{"applicable", applicable},
                              {"holds", cc.holds},
                              {"s_prime_in_r", cc.s_prime_in_r},
                              {"center_in_s_prime", cc.center_in_s_prime},
                              {"center_dim", cc.center_in_f.dim()},
                              {"r_derived_dim", cc.r_derived.dim()}};
  return r;
}

ojson isometry_json(const LRDecomposition& lr, const IsometryAlgebra& iso) {
  ojson r;
  r["lr"] = {{"g1", lr.descriptor.label()}, {"s1", subspace(lr.s1)}, {"s2", subspace(lr.s2)}, {"suitable", true}};
  r["isometry_dim"] = iso.total.dim();
  r["g1_dim"] = iso.g1.dim();
  r["d0_dim"] = iso.d0.dim();
  r["s2_dim"] = iso.s2.dim();
  r["isotropy_dim"] = iso.isotropy.dim();
  r["killing_signature"] = signature_json(signature(killing_form(iso.total)));
  r["unimodular"] = is_unimodular(iso.total);
  r["total"] = algebra_without_metric(iso.total);
  r["isotropy"] = subspace(iso.isotropy);
  r["transferred_gram"] = matrix(iso.transferred_gram);
  return r;
}

ojson cmd_isometry(const ParsedAlgebra& in, const RunOptions& opt) {
  const MetricLieAlgebra& M = in.algebra;
  require_solvable(M.algebra(), "isometry");
  if (opt.lr) {
    const LRDecomposition lr = make_lr(M, opt.lr->first, opt.lr->second);
    if (!check_suitable(lr))
      throw Error(ErrorKind::PreconditionFailed, "LR-decomposition is not suitable w.r.t. the constructed compact");
    ojson r = isometry_json(lr, assemble_isometry(lr));
    r["lr_source"] = "file";
    return r;
  }
  const StandardPosition sp = standard_position(M);
  const LrSearch search = enumerate_lr(sp.algebra(), opt.tol);
  const LRDecomposition& best = search.decompositions.front();
  ojson r = isometry_json(best, assemble_isometry(best));
  r["lr_source"] = "search";
  r["standard_position_iterations"] = sp.iterations;
  r["search"] = {{"complete", search.complete},
                 {"dim_bound", search.dim_bound ? ojson(*search.dim_bound) : ojson(nullptr)},
                 {"suitable_found", search.decompositions.size()},
                 {"rejected", search.rejected}};
  return r;
}

ojson cmd_split(const ParsedAlgebra& in) {
  const FlatSplit s = flat_factor_split(in.algebra);
  return ojson{{"t", subspace(s.t)}, {"u", subspace(s.u)}, {"t_admissible", s.t_admissible}};
}

ojson cmd_transitive(const ParsedAlgebra& in, const RunOptions& opt) {
  if (!opt.subalgebra) throw Error(ErrorKind::InvalidInput, "transitive-test needs --subalgebra <file>");
  if (!opt.iwasawa) throw Error(ErrorKind::InvalidInput, "transitive-test needs --iwasawa <file>");
  const LieAlgebra& g = in.algebra.algebra();
  const bool result = transitive_solvable_test(g, *opt.subalgebra, *opt.iwasawa);
  const Subspace rad = radical(g);
  return ojson{{"result", result},
               {"dim", g.dim()},
               {"iwasawa_dim", opt.iwasawa->dim()},
               {"radical_dim", rad.dim()},
               {"h_dim", opt.subalgebra->dim()},
               {"span_dim", (*opt.iwasawa + rad + *opt.subalgebra).dim()}};
}

ojson cmd_rigidity(const ParsedAlgebra& in, const RunOptions& opt) {
  const RigidityVerdict v = rigidity_verdict(in.algebra, opt.tol);
  ojson r;
  r["verdict"] = to_string(v.verdict);
  r["reason"] = v.reason;
  r["acs"] = v.acs;
  r["positive"] = optional_bool(v.positive);
  r["standard_position_iterations"] = v.standard_position_iterations ? ojson(*v.standard_position_iterations) : ojson(nullptr);
  r["search_complete"] = optional_bool(v.search_complete);
  r["g1"] = v.g1 ? ojson(*v.g1) : ojson(nullptr);
  r["s1_dim"] = v.s1_dim ? ojson(*v.s1_dim) : ojson(nullptr);
  r["isometry_dim"] = v.total_dim ? ojson(*v.total_dim) : ojson(nullptr);
  r["isometry_unimodular"] = optional_bool(v.total_unimodular);
  return r;
}

ojson cmd_catalog() {
  ojson entries = ojson::array();
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_entry(name);
    entries.push_back({{"name", e.name},
                       {"dim", e.algebra.dim()},
                       {"solvable", structure_flags(e.algebra.algebra()).solvable},
                       {"basis_labels", e.basis_labels},
                       {"description", e.description}});
  }
  return ojson{{"entries", entries},
               {"parametric", {"hyperbolic:<n>", "abelian:<n>", "diag_solv:<w1>,<w2>,..."}}};
}

ojson metadata(const RunOptions& opt) {
  ojson m;
  m["version"] = kVersion;
  m["tolerances"] = {{"eps_rank", approx(opt.tol.eps_rank)},
                     {"eps_eig", approx(opt.tol.eps_eig)},
                     {"snap_denominator_bound", opt.tol.snap_denominator_bound}};
  m["seed"] = opt.seed ? ojson(*opt.seed) : ojson(nullptr);
  m["conventions"] = {
      {"indices", "0-based basis indices; rationals as exact strings; floats tagged {\"approx\": x}"},
      {"induced_metric", "s' has basis v_i = phi(e_i) + e_i and carries the Gram matrix of s"},
      {"suitability_representative", "the maximal compact subalgebra constructed for the recognized g1; conjugates are not searched"},
      {"imaginary_locus", "acs iff the common kernel of the real parts of the weights equals the nilradical"},
  };
  return m;
}

}  // namespace

RunStatus status_of(ErrorKind kind) {
  if (kind == ErrorKind::InternalCheck) return RunStatus::InternalError;
  return is_input_error(kind) ? RunStatus::InputError : RunStatus::DomainError;
}

std::vector<std::string> command_names() {
  return {"validate", "invariants", "classify", "modify", "standard-position",
          "isometry", "split",      "transitive-test", "rigidity", "catalog"};
}

RunOutput run_command(const std::string& command, const ParsedAlgebra* input, const std::string& source,
                      const RunOptions& options) {
  ojson report;
  report["schema"] = kReportSchema;
  report["command"] = command;
  if (input)
    report["input"] = {{"source", source}, {"name", input->algebra.algebra().name()}, {"dim", input->algebra.dim()}};
  report["metadata"] = metadata(options);

  RunOutput out;
  ojson result;
  try {
    options.tol.check();
    const std::map<std::string, std::function<ojson()>> table{
        {"validate", [&] { return cmd_validate(*input, out.status); }},
        {"invariants", [&] { return cmd_invariants(*input, options); }},
        {"classify", [&] { return cmd_classify(*input, options); }},
        {"modify", [&] { return cmd_modify(*input); }},
        {"standard-position", [&] { return cmd_standard_position(*input, options); }},
        {"isometry", [&] { return cmd_isometry(*input, options); }},
        {"split", [&] { return cmd_split(*input); }},
        {"transitive-test", [&] { return cmd_transitive(*input, options); }},
        {"rigidity", [&] { return cmd_rigidity(*input, options); }},
        {"catalog", [&] { return cmd_catalog(); }},
    };
    const auto it = table.find(command);
    if (it == table.end()) throw Error(ErrorKind::InvalidInput, "unknown command '" + command + "'");
    if (!input && command != "catalog") throw Error(ErrorKind::InvalidInput, "command '" + command + "' needs an algebra");
    if (input && command != "validate" && command != "catalog") {
      const auto violations = validate(input->algebra.algebra());
      if (!violations.empty()) throw Error(ErrorKind::ValidationFailed, describe(violations.front()));
    }
    result = it->second();
  } catch (const Error& e) {
    out.status = status_of(e.kind());
    report["error"] = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    out.status = RunStatus::InternalError;
    report["error"] = {{"kind", "InternalCheck"}, {"message", e.what()}};
  }
  report["status"] = status_name(out.status);
  if (!result.is_null()) report["result"] = result;
  out.json = report.dump(2);
  return out;
}

namespace {

std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.size() == 1 && v.contains("approx")) return "~" + v["approx"].dump();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool is_flat(const ojson& v) {
  if (v.is_array()) {
    for (const auto& x : v)
      if (!is_flat(x)) return false;
    return true;
  }
  return !v.is_object() || (v.size() == 1 && v.contains("approx"));
}

void render(const ojson& v, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object() && !is_flat(v)) {
    for (const auto& [key, value] : v.items()) {
      if (is_flat(value)) {
        os << pad << key << ": " << scalar_text(value) << "\n";
      } else {
        os << pad << key << ":\n";
        render(value, indent + 1, os);
      }
    }
  } else if (v.is_array() && !is_flat(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << pad << "- [" << i << "]\n";
      render(v[i], indent + 1, os);
    }
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render_text(const std::string& report_json) {
  ojson doc;
  try {
    doc = ojson::parse(report_json);
  } catch (const ojson::parse_error&) {
    throw Error(ErrorKind::ParseError, "render_text: input is not JSON");
  }
  std::ostringstream os;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (i) os << "\n";
      render(doc[i], 0, os);
    }
  } else {
    render(doc, 0, os);
  }
  return os.str();
}

}  // namespace solvmetry

namespace solvmetry {

ParsedAlgebra load_input(const std::string& input, bool check_jacobi) {
  if (input.rfind("catalog:", 0) == 0) {
    const CatalogEntry e = catalog_entry(input.substr(8));
    return ParsedAlgebra{e.algebra, e.basis_labels};
  }
  return load_algebra(input, check_jacobi);
}

RunOutput run_on_input(const std::string& command, const std::string& input, const RunOptions& options) {
  try {
    const ParsedAlgebra in = load_input(input, command != "validate");
    return run_command(command, &in, input, options);
  } catch (const std::exception& e) {
    const Error* err = dynamic_cast<const Error*>(&e);
    const ErrorKind kind = err ? err->kind() : ErrorKind::InternalCheck;
    ojson report;
    report["schema"] = kReportSchema;
    report["command"] = command;
    report["input"] = {{"source", input}};
    report["metadata"] = metadata(options);
    RunOutput out;
    out.status = status_of(kind);
    report["error"] = {{"kind", kind_name(kind)}, {"message", e.what()}};
    report["status"] = status_name(out.status);
    out.json = report.dump(2);
    return out;
  }
}

}  // namespace solvmetry

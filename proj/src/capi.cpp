#include "solvmetry/solvmetry.h"

#include "solvmetry/catalog.hpp"
#include "solvmetry/errors.hpp"
#include "solvmetry/io.hpp"
#include "solvmetry/report.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

using namespace solvmetry;

struct sm_algebra {
  ParsedAlgebra parsed;
  std::string source;
};

struct sm_subspace {
  Subspace space;
};

struct sm_options {
  RunOptions run;
};

namespace {

thread_local std::string last_error;

sm_status fail(sm_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <class F>
sm_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(static_cast<sm_status>(status_of(e.kind())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SM_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(SM_INTERNAL_ERROR, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sm_status null_argument(const char* name) { return fail(SM_INPUT_ERROR, std::string("null argument: ") + name); }

constexpr const char* kCatalogPrefix = "catalog:";

}  // namespace

extern "C" {

const char* sm_version(void) { return kVersion; }

const char* sm_last_error(void) { return last_error.c_str(); }

void sm_string_free(char* s) { std::free(s); }

sm_status sm_algebra_load(const char* path, unsigned flags, sm_algebra** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] {
    const std::string p(path);
    auto a = std::make_unique<sm_algebra>();
    a->parsed = load_input(p, (flags & SM_LOAD_NO_JACOBI) == 0);
    a->source = p;
    *out = a.release();
    return SM_OK;
  });
}

sm_status sm_algebra_parse(const char* json_text, const char* source, unsigned flags, sm_algebra** out) {
  if (!json_text || !out) return null_argument("json_text/out");
  return guarded([&] {
    auto a = std::make_unique<sm_algebra>();
    a->source = source ? source : "<string>";
    a->parsed = parse_algebra(json_text, a->source, (flags & SM_LOAD_NO_JACOBI) == 0);
    *out = a.release();
    return SM_OK;
  });
}

sm_status sm_algebra_from_catalog(const char* name, sm_algebra** out) {
  if (!name || !out) return null_argument("name/out");
  return guarded([&] {
    const CatalogEntry e = catalog_entry(name);
    auto a = std::make_unique<sm_algebra>();
    a->parsed = ParsedAlgebra{e.algebra, e.basis_labels};
    a->source = std::string(kCatalogPrefix) + name;
    *out = a.release();
    return SM_OK;
  });
}

sm_status sm_algebra_to_json(const sm_algebra* a, char** out) {
  if (!a || !out) return null_argument("algebra/out");
  return guarded([&] {
    *out = copy_string(emit_algebra(a->parsed.algebra, a->parsed.basis_labels));
    return SM_OK;
  });
}

size_t sm_algebra_dim(const sm_algebra* a) { return a ? a->parsed.algebra.dim() : 0; }

void sm_algebra_free(sm_algebra* a) { delete a; }

sm_status sm_subspace_load(const char* path, sm_subspace** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] {
    *out = new sm_subspace{load_subspace(path)};
    return SM_OK;
  });
}

sm_status sm_subspace_parse(const char* json_text, sm_subspace** out) {
  if (!json_text || !out) return null_argument("json_text/out");
  return guarded([&] {
    *out = new sm_subspace{parse_subspace(json_text)};
    return SM_OK;
  });
}

size_t sm_subspace_dim(const sm_subspace* s) { return s ? s->space.dim() : 0; }

void sm_subspace_free(sm_subspace* s) { delete s; }

sm_options* sm_options_new(void) { return new (std::nothrow) sm_options{}; }

void sm_options_free(sm_options* o) { delete o; }

sm_status sm_options_set_tol(sm_options* o, double eps_rank, double eps_eig) {
  if (!o) return null_argument("options");
  return guarded([&] {
    ToleranceConfig t = o->run.tol;
    t.eps_rank = eps_rank;
    t.eps_eig = eps_eig;
    t.check();
    o->run.tol = t;
    return SM_OK;
  });
}

void sm_options_set_seed(sm_options* o, uint64_t seed) {
  if (o) o->run.seed = seed;
}

sm_status sm_options_set_subspace(sm_options* o, const char* role, const sm_subspace* s) {
  if (!o || !role || !s) return null_argument("options/role/subspace");
  const std::string r(role);
  if (r == "subalgebra") {
    o->run.subalgebra = s->space;
  } else if (r == "iwasawa") {
    o->run.iwasawa = s->space;
  } else {
    return fail(SM_INPUT_ERROR, "unknown subspace role '" + r + "'");
  }
  return SM_OK;
}

sm_status sm_options_load_lr(sm_options* o, const char* path) {
  if (!o || !path) return null_argument("options/path");
  return guarded([&] {
    o->run.lr = load_lr(path);
    return SM_OK;
  });
}

sm_status sm_run(const char* command, const sm_algebra* a, const sm_options* opts, char** report) {
  if (!command || !report) return null_argument("command/report");
  return guarded([&] {
    static const sm_options defaults{};
    const RunOutput r = run_command(command, a ? &a->parsed : nullptr, a ? a->source : std::string(),
                                    opts ? opts->run : defaults.run);
    *report = copy_string(r.json);
    if (r.status != RunStatus::Ok) last_error = "command '" + std::string(command) + "' failed; see report";
    return static_cast<sm_status>(r.status);
  });
}

sm_status sm_run_input(const char* command, const char* input, const sm_options* opts, char** report) {
  if (!command || !input || !report) return null_argument("command/input/report");
  return guarded([&] {
    static const sm_options defaults{};
    const RunOutput r = run_on_input(command, input, opts ? opts->run : defaults.run);
    *report = copy_string(r.json);
    if (r.status != RunStatus::Ok) last_error = "command '" + std::string(command) + "' failed on " + input + "; see report";
    return static_cast<sm_status>(r.status);
  });
}

sm_status sm_catalog_list(char** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    std::string s;
    for (const auto& n : catalog_names()) s += n + "\n";
    *out = copy_string(s);
    return SM_OK;
  });
}

sm_status sm_render_text(const char* report_json, char** out) {
  if (!report_json || !out) return null_argument("report_json/out");
  return guarded([&] {
    *out = copy_string(render_text(report_json));
    return SM_OK;
  });
}

}  // extern "C"

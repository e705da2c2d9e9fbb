// solvmetry command-line front end. Talks to the library only through the C API.

#include "solvmetry/solvmetry.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct Flags {
  std::vector<std::string> inputs;
  std::optional<double> tol;
  std::string format = "json";
  std::string lr;
  std::string subalgebra;
  std::string iwasawa;
  std::string out;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
};

struct Owned {
  char* s = nullptr;
  ~Owned() { sm_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct OptionsHandle {
  sm_options* p = sm_options_new();
  ~OptionsHandle() { sm_options_free(p); }
};

int exit_code(sm_status s) {
  switch (s) {
    case SM_OK:
      return kExitOk;
    case SM_INPUT_ERROR:
      return kExitInput;
    default:
      return kExitDomain;
  }
}

int fail(const std::string& msg, int code = kExitInput) {
  std::cerr << "solvmetry: " << msg << "\n";
  return code;
}

// Tolerance from the flag, else SOLVMETRY_TOL, else the library default.
std::optional<double> resolve_tol(const Flags& f, std::string& error) {
  if (f.tol) return f.tol;
  const char* env = std::getenv("SOLVMETRY_TOL");
  if (!env || !*env) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    error = std::string("SOLVMETRY_TOL is not a number: '") + env + "'";
    return std::nullopt;
  }
}

int load_subspace_option(sm_options* opts, const char* role, const std::string& path) {
  if (path.empty()) return kExitOk;
  sm_subspace* s = nullptr;
  if (const sm_status st = sm_subspace_load(path.c_str(), &s); st != SM_OK) return fail(sm_last_error(), exit_code(st));
  const sm_status st = sm_options_set_subspace(opts, role, s);
  sm_subspace_free(s);
  return st == SM_OK ? kExitOk : fail(sm_last_error(), exit_code(st));
}

int write_output(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return kExitOk;
  }
  std::ofstream os(f.out, std::ios::binary);
  if (!os || !(os << text)) return fail("cannot write '" + f.out + "'");
  return kExitOk;
}

std::string ensure_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

int emit(const Flags& f, const std::string& json_text) {
  if (f.format == "json") return write_output(f, ensure_newline(json_text));
  Owned text;
  if (sm_render_text(json_text.c_str(), &text.s) != SM_OK) return fail(sm_last_error(), kExitDomain);
  return write_output(f, ensure_newline(text.str()));
}

int run_catalog(const Flags& f) {
  if (f.inputs.empty()) {
    Owned report;
    const sm_status st = sm_run("catalog", nullptr, nullptr, &report.s);
    if (!report.s) return fail(sm_last_error(), exit_code(st));
    const int rc = emit(f, report.str());
    return rc != kExitOk ? rc : exit_code(st);
  }
  if (f.inputs.size() > 1) return fail("catalog takes at most one entry name");
  sm_algebra* a = nullptr;
  if (const sm_status st = sm_algebra_from_catalog(f.inputs.front().c_str(), &a); st != SM_OK)
    return fail(sm_last_error(), exit_code(st));
  Owned text;
  const sm_status st = sm_algebra_to_json(a, &text.s);
  sm_algebra_free(a);
  if (st != SM_OK) return fail(sm_last_error(), exit_code(st));
  return write_output(f, text.str());
}

int run(const std::string& command, const Flags& f) {
  if (command == "catalog") return run_catalog(f);
  if (f.format != "json" && f.format != "text") return fail("--format must be json or text");

  OptionsHandle opts;
  if (!opts.p) return fail("out of memory", kExitDomain);
  std::string tol_error;
  const std::optional<double> tol = resolve_tol(f, tol_error);
  if (!tol_error.empty()) return fail(tol_error);
  if (tol && sm_options_set_tol(opts.p, *tol, 10 * *tol) != SM_OK) return fail(sm_last_error());
  if (f.seed) sm_options_set_seed(opts.p, *f.seed);
  if (int rc = load_subspace_option(opts.p, "subalgebra", f.subalgebra); rc != kExitOk) return rc;
  if (int rc = load_subspace_option(opts.p, "iwasawa", f.iwasawa); rc != kExitOk) return rc;
  if (!f.lr.empty())
    if (const sm_status st = sm_options_load_lr(opts.p, f.lr.c_str()); st != SM_OK) return fail(sm_last_error(), exit_code(st));

  const std::size_t n = f.inputs.size();
  std::vector<std::string> reports(n);
  std::vector<sm_status> status(n, SM_OK);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      Owned r;
      status[i] = sm_run_input(command.c_str(), f.inputs[i].c_str(), opts.p, &r.s);
      reports[i] = r.s ? r.str() : std::string();
      if (!r.s) status[i] = SM_INTERNAL_ERROR;
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(f.jobs, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string json_text;
  if (n == 1) {
    json_text = reports.front();
  } else {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& r : reports) all.push_back(nlohmann::ordered_json::parse(r));
    json_text = all.dump(2);
  }
  if (const int rc = emit(f, json_text); rc != kExitOk) return rc;

  int code = kExitOk;
  for (const sm_status s : status) {
    if (s == SM_INPUT_ERROR) return kExitInput;
    if (s != SM_OK) code = kExitDomain;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvmetry: structure, isometry algebras and rigidity of metric solvable Lie algebras"};
  app.set_version_flag("--version", std::string(sm_version()));
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"validate", "check antisymmetry and the Jacobi identity"},
      {"invariants", "series, center, radical, nilradical, derivations, weights"},
      {"classify", "almost completely solvable, admissible, positive, unimodular, strongly solvable"},
      {"modify", "one standard modification with its certificate"},
      {"standard-position", "iterate the standard modification to its fixed point"},
      {"isometry", "assemble the isometry algebra from an LR-decomposition"},
      {"split", "orthogonal split off the Euclidean factor"},
      {"transitive-test", "does g = iwasawa + radical + h hold (needs --subalgebra and --iwasawa)"},
      {"rigidity", "compact-quotient rigidity verdict"},
      {"catalog", "list the built-in algebras, or print one as an algebra file"},
  };

  Flags flags;
  std::string chosen;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    const bool is_catalog = std::string(s.name) == "catalog";
    sub->add_option("inputs", flags.inputs, is_catalog ? "entry name" : "algebra files or catalog:<name>")
        ->required(!is_catalog);
    sub->add_option("--format", flags.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", flags.out, "write the output here instead of stdout");
    if (is_catalog) continue;
    sub->add_option("--tol", flags.tol, "rank tolerance; eigenvalue tolerance is 10x (default from SOLVMETRY_TOL or 1e-9)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--lr", flags.lr, "LR-decomposition file {ambient_dim, s1, s2}");
    sub->add_option("--subalgebra", flags.subalgebra, "subspace file for h");
    sub->add_option("--iwasawa", flags.iwasawa, "subspace file for the Iwasawa subalgebra");
    sub->add_option("--seed", flags.seed, "recorded in the report metadata");
    sub->add_option("--jobs", flags.jobs, "worker threads for several inputs")->check(CLI::PositiveNumber);
    sub->callback([&chosen, name = std::string(s.name)] { chosen = name; });
  }
  app.get_subcommand("catalog")->callback([&chosen] { chosen = "catalog"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  return run(chosen, flags);
}

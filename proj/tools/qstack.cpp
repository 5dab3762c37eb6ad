// Command-line driver. JSON reports go to stdout (or --output); human
// summaries go to stderr. Exit codes: 0 success, 1 domain error, 2 usage.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qstack/commands.hpp"
#include "qstack/dsl.hpp"
#include "qstack/error.hpp"
#include "qstack/json_io.hpp"
#include "qstack/verify.hpp"

namespace {

using nlohmann::json;
using namespace qstack;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Splits on commas outside parentheses, so ids like "(g_b,e)" survive.
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

template <class T, class Parse>
std::map<std::string, T> parse_assignments(const std::string& s, const char* what, Parse parse) {
  std::map<std::string, T> out;
  if (s.empty()) return out;
  for (const auto& item : split_list(s)) {
    const auto eq = item.rfind('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw UsageError(std::string("malformed ") + what + " entry '" + item + "', expected v=value");
    }
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      T parsed = parse(value, used);
      if (used != value.size()) throw std::invalid_argument(value);
      out[item.substr(0, eq)] = parsed;
    } catch (const std::logic_error&) {
      throw UsageError(std::string("malformed ") + what + " value in '" + item + "'");
    }
  }
  return out;
}

DimVector parse_dims(const std::string& s) {
  return parse_assignments<std::size_t>(s, "--dims", [](const std::string& v, std::size_t& used) {
    if (!v.empty() && v[0] == '-') throw std::invalid_argument(v);
    return static_cast<std::size_t>(std::stoull(v, &used));
  });
}

std::map<std::string, double> parse_levels(const std::string& s) {
  return parse_assignments<double>(
      s, "--lambda", [](const std::string& v, std::size_t& used) { return std::stod(v, &used); });
}

struct Output {
  std::string path;
  bool quiet = false;

  void emit(const json& report) const {
    const std::string text = dump_canonical(report);
    if (path.empty()) {
      std::cout << text;
      std::cout.flush();
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw UsageError("cannot write '" + path + "'");
      out << text;
    }
  }

  std::ostream& note() const {
    static std::ostream null(nullptr);
    return quiet ? null : std::cerr;
  }
};

json report(const std::vector<std::string>& argv, const std::string& input, json result,
            const json& seed) {
  return {{"command", argv},
          {"input_hash", input.empty() ? "" : fnv1a(input)},
          {"result", std::move(result)},
          {"version", QSTACK_VERSION},
          {"seed", seed}};
}

QuiverDoc load_doc(const std::string& path, std::string& text) {
  text = read_file(path);
  return parse_quiver(text);
}

int run_build(const std::vector<std::string>& argv, const Output& out, const std::string& kind,
              const std::string& file, const std::vector<std::string>& at) {
  std::string text;
  const QuiverDoc doc = load_doc(file, text);
  std::optional<std::vector<std::string>> vertices;
  if (!at.empty()) vertices = at;
  json result = build_command(doc, kind, vertices);
  out.note() << kind << " of " << doc.name << ": " << result["vertices"] << " vertices, "
             << result["edges"] << " edges, " << result["triangles"] << " triangles\n";
  out.emit(report(argv, text, std::move(result), nullptr));
  return 0;
}

int run_count(const std::vector<std::string>& argv, const Output& out, const std::string& file,
              std::uint32_t p, const std::string& dims_arg, bool orbits) {
  std::string text;
  const QuiverDoc doc = load_doc(file, text);
  json result = count_command(doc, p, parse_dims(dims_arg), orbits);
  out.note() << doc.name << " over F_" << p << ": |Rep| = " << result["rep_count"].get<std::string>()
             << ", |G| = " << result["gauge_order"].get<std::string>()
             << ", stacky count = " << result["stacky_count"].get<std::string>() << "\n";
  out.emit(report(argv, text, std::move(result), nullptr));
  return 0;
}

struct SolveArgs {
  std::string file;
  std::string dims;
  std::string lambda;
  std::vector<std::string> frame;
  bool unframed = false;
  SolveRequest req;
};

int run_solve(const std::vector<std::string>& argv, const Output& out, SolveArgs& a) {
  std::string text;
  const QuiverDoc doc = load_doc(a.file, text);
  a.req.dims = parse_dims(a.dims);
  a.req.lambda = parse_levels(a.lambda);
  if (!a.frame.empty()) a.req.frame = a.frame;
  if (a.unframed) a.req.frame = std::vector<std::string>{};
  json result = solve_command(doc, a.req);
  const json& best = result["best"];
  out.note() << doc.name << ": " << result["converged_count"] << "/" << a.req.starts
             << " starts converged, best residual " << best["residual"] << " (seed " << best["seed"]
             << ", Jacobian rank " << best["jacobian_rank"] << ")\n";
  out.emit(report(argv, text, std::move(result), a.req.seed));
  return 0;
}

int run_check_higgs(const std::vector<std::string>& argv, const Output& out, const std::string& file) {
  const std::string text = read_file(file);
  json result = check_higgs_command(json::parse(text));
  out.note() << "Higgs datum n=" << result["n"] << " m=" << result["m"] << ": "
             << (result["integrable"].get<bool>() ? "integrable" : "not integrable") << "\n";
  out.emit(report(argv, text, std::move(result), nullptr));
  return 0;
}

void note_suite(const Output& out, const json& r) {
  out.note() << (r["ok"].get<bool>() ? "PASS " : "FAIL ") << r["suite"].get<std::string>() << "  "
             << r["passed"] << "/" << r["cases"] << "\n";
  for (const auto& f : r["failures"]) out.note() << "  " << f.get<std::string>() << "\n";
}

int run_verify(const std::vector<std::string>& argv, const Output& out, const std::string& suite,
               std::uint64_t seed, int cases) {
  json result = verify_command(suite, seed, cases);
  if (result.contains("suites")) {
    for (const auto& r : result["suites"]) note_suite(out, r);
  } else {
    note_suite(out, result);
  }
  const bool ok = result["ok"].get<bool>();
  out.emit(report(argv, "", std::move(result), seed));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  CLI::App app{"Representations of quivers with composition witnesses: constructions, point "
               "counts, moment-map solves and verification suites"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(QSTACK_VERSION));
  Output out;
  app.add_option("-o,--output", out.path, "Write the JSON report to this file");
  app.add_flag("-q,--quiet", out.quiet, "Suppress the summary on stderr");

  std::string build_kind, build_file;
  std::vector<std::string> build_at;
  auto* build = app.add_subcommand("build", "Build the tilde, doubled or framed quiver");
  build->add_option("kind", build_kind, "tilde | double | frame")
      ->required()
      ->check(CLI::IsMember({"tilde", "double", "frame"}));
  build->add_option("file", build_file, "Quiver file")->required()->check(CLI::ExistingFile);
  build->add_option("--at", build_at, "Vertices to frame (frame only; default all)")->delimiter(',');

  std::string count_file, count_dims;
  std::uint32_t count_p = 2;
  bool count_orbits = false;
  auto* count = app.add_subcommand("count", "Exact point count over F_p");
  count->add_option("file", count_file, "Quiver file")->required()->check(CLI::ExistingFile);
  count->add_option("--field", count_p, "Prime p <= 64")->required();
  count->add_option("--dims", count_dims, "Dimensions v=N,... (override the file)");
  count->add_flag("--orbits", count_orbits, "Also list gauge orbits");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve-nakajima", "Numerical point of the moment-map zero locus");
  solve_cmd->add_option("file", solve.file, "Quiver file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--dims", solve.dims, "Dimensions v=N,... including framing nodes");
  solve_cmd->add_option("--lambda", solve.lambda, "Levels v=x,... (default 0)");
  solve_cmd->add_option("--tol", solve.req.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve.req.seed, "Seed of the first start");
  solve_cmd->add_option("--max-iter", solve.req.max_iter, "Iterations per start")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--starts", solve.req.starts, "Number of seeded starts")->check(CLI::PositiveNumber);
  auto* frame_opt =
      solve_cmd->add_option("--frame", solve.frame, "Vertices receiving a framing node")->delimiter(',');
  solve_cmd->add_flag("--unframed", solve.unframed, "Add no framing nodes")->excludes(frame_opt);

  std::string higgs_file;
  auto* higgs = app.add_subcommand("check-higgs", "Integrability of a Higgs datum");
  higgs->add_option("--json", higgs_file, "Higgs datum {n, m, phi, field?}")
      ->required()
      ->check(CLI::ExistingFile);

  std::string suite;
  std::uint64_t verify_seed = 0;
  int verify_cases = 0;
  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  verify->add_option("suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(names));
  verify->add_option("--seed", verify_seed, "Seed");
  verify->add_option("--cases", verify_cases, "Number of cases (0: suite default)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) return run_build(args, out, build_kind, build_file, build_at);
    if (*count) return run_count(args, out, count_file, count_p, count_dims, count_orbits);
    if (*solve_cmd) return run_solve(args, out, solve);
    if (*higgs) return run_check_higgs(args, out, higgs_file);
    if (*verify) return run_verify(args, out, suite, verify_seed, verify_cases);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qstack::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

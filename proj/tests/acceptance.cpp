// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qstack/dsl.hpp"
#include "qstack/verify.hpp"

using namespace qstack;

namespace {

constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from_suites(const std::vector<SuiteResult>& results) {
  bool ok = true;
  std::ostringstream out;
  for (const auto& r : results) {
    ok = ok && r.ok();
    out << r.suite << " " << r.passed << "/" << r.cases;
    if (r.required >= 0) out << " (need " << r.required << ")";
    if (!r.details.empty()) out << " " << r.details.dump();
    if (!r.failures.empty()) out << " first failure: " << r.failures.front();
    out << "; ";
  }
  return {ok, out.str()};
}

std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  if (pclose(pipe) != 0) out = "<exit failure>" + out;
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_determinism() {
  const std::string cli = QSTACK_CLI_PATH;
  const std::filesystem::path fixtures = QSTACK_FIXTURE_DIR;
  const std::vector<std::string> commands = {
      "solve-nakajima " + (fixtures / "jordan.qv").string() + " --dims a=1,w_a=1 --seed 11 --starts 3",
      "count " + (fixtures / "square.qv").string() + " --field 3",
      "build tilde " + (fixtures / "example.qv").string(),
      "verify moment-map --seed 4 --cases 50",
  };
  std::ostringstream out;
  bool ok = true;
  for (const auto& c : commands) {
    const std::string full = "'" + cli + "' -q " + c + " 2>/dev/null";
    const auto first = run_capture(full);
    const auto second = run_capture(full);
    const bool same = !first.empty() && first.rfind("<exit failure>", 0) != 0 && first == second;
    ok = ok && same;
    if (!same) out << "differs: " << c << "; ";
  }
  out << commands.size() << " commands byte-identical; ";

  int files = 0;
  bool has_example = false;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures)) {
    if (entry.path().extension() != ".qv") continue;
    ++files;
    has_example = has_example || entry.path().filename() == "example.qv";
    try {
      const auto doc = parse_quiver(slurp(entry.path()));
      const auto printed = print_quiver(doc);
      const auto again = parse_quiver(printed);
      if (!(again == doc) || print_quiver(again) != printed) {
        ok = false;
        out << "round trip changed " << entry.path().filename().string() << "; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      out << entry.path().filename().string() << ": " << e.what() << "; ";
    }
  }
  ok = ok && files >= 10 && has_example;
  out << files << " fixtures round-tripped" << (has_example ? "" : " (example missing)");
  return {ok, out.str()};
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const SuiteConfig cfg{kSeed, 0};
  const std::vector<Criterion> criteria = {
      {1, "trace composition matches matrix product", 5,
       [&] { return from_suites({verify_trace_composition(cfg)}); }},
      {2, "internal category laws", 5, [&] { return from_suites({verify_internal_category(cfg)}); }},
      {3, "tilde representation count bijection", 60,
       [&] { return from_suites({verify_tilde_bijection(cfg)}); }},
      {4, "orbit census matches stacky count", 60,
       [&] { return from_suites({verify_coequalizer(cfg)}); }},
      {5, "simplex coherence, exhaustive on Delta^3 over F_2", 120,
       [] { return from_suites({verify_chain_coherence_exhaustive(3, 2, 2)}); }},
      {6, "simplicial functoriality", 10, [&] { return from_suites({verify_functoriality(cfg)}); }},
      {7, "Higgs integrability matches diagram validity", 60,
       [&] { return from_suites({verify_higgs_exhaustive(2, 2), verify_higgs(cfg)}); }},
      {8, "moment map assembly", 10, [&] { return from_suites({verify_moment_map(cfg)}); }},
      {9, "Nakajima solve on the framed Jordan quiver", 30,
       [&] { return from_suites({verify_nakajima(cfg)}); }},
      {10, "CLI determinism and document round trip", 5, cli_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.budget_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing
              << (in_time ? "" : ", over budget") << ") " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}

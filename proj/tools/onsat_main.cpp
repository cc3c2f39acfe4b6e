// onsat command-line driver. Talks to the library only through onsat.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "onsat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

struct SolveOptions {
  std::string input = "-";
  std::string mode = "decide";
  std::string format = "auto";
  std::string output = "auto";
  std::size_t n0 = 16;
  std::size_t split_depth = 3;
  std::size_t workers = 0;  // 0: environment or hardware default
  long long seed = -1;
  bool strict_dimacs = false;
  bool expand_dont_cares = false;
};

struct VerifyOptions {
  std::size_t n = 4;
  std::size_t trials = 100;
  long long seed = -1;
  bool exhaustive = false;
  std::string function;
  std::string other;
  std::string onset;
};

struct CurveOptions {
  std::string modulus = "b";
  std::string a1 = "0", a2 = "0", a3 = "0", a4 = "0", a6 = "0";
  std::string method = "field";
  std::size_t workers = 1;
};

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

int report_error(const char* context) {
  std::cerr << "onsat: " << context << ": " << onsat_last_error() << '\n';
  return kExitError;
}

std::size_t resolve_workers(const SolveOptions& o) {
  if (o.workers != 0) return o.workers;
  if (const char* env = std::getenv("ONSAT_WORKERS")) {
    try {
      const long long w = std::stoll(env);
      if (w >= 1) return static_cast<std::size_t>(w);
    } catch (const std::exception&) {
    }
    std::cerr << "onsat: ignoring invalid ONSAT_WORKERS='" << env << "'\n";
  }
  // A seed asks for reproducible output, which needs a single worker.
  if (o.seed >= 0) return 1;
  return 0;
}

struct Printer {
  const onsat_problem* problem;
  bool json;
  std::size_t count = 0;
};

int print_solution(const signed char* values, size_t n, void* user) {
  auto& p = *static_cast<Printer*>(user);
  ++p.count;
  if (p.json) {
    nlohmann::ordered_json line;
    line["assignment"] = nlohmann::ordered_json::object();
    line["dont_care"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < n; ++i) {
      const char* name = onsat_problem_var_name(p.problem, i);
      if (values[i] < 0) {
        line["dont_care"].push_back(name);
      } else {
        line["assignment"][name] = static_cast<int>(values[i]);
      }
    }
    std::cout << line.dump() << '\n';
    return 1;
  }
  std::ostringstream dc;
  std::ostringstream v;
  v << 'v';
  for (size_t i = 0; i < n; ++i) {
    if (values[i] < 0) dc << ' ' << (i + 1);
    v << ' ' << (values[i] == 1 ? "" : "-") << (i + 1);
  }
  if (!dc.str().empty()) std::cout << "c dont-care" << dc.str() << '\n';
  std::cout << v.str() << " 0\n";
  return 1;
}

int run_solve(const SolveOptions& o) {
  std::string text;
  if (!read_input(o.input, text)) {
    std::cerr << "onsat: cannot read '" << o.input << "'\n";
    return kExitError;
  }
  const onsat_format fmt = o.format == "dimacs"   ? ONSAT_FORMAT_DIMACS
                           : o.format == "system" ? ONSAT_FORMAT_SYSTEM
                                                  : ONSAT_FORMAT_AUTO;
  onsat_problem* problem = nullptr;
  if (onsat_problem_parse(text.data(), text.size(), fmt, o.strict_dimacs ? 1 : 0, &problem) !=
      ONSAT_OK) {
    return report_error(o.input == "-" ? "<stdin>" : o.input.c_str());
  }
  for (size_t i = 0; i < onsat_problem_warning_count(problem); ++i) {
    std::cerr << "onsat: warning: " << onsat_problem_warning(problem, i) << '\n';
  }

  onsat_config* cfg = onsat_config_new();
  const std::size_t workers = resolve_workers(o);
  bool ok = onsat_config_set_mode(cfg, o.mode == "enumerate" ? ONSAT_MODE_ENUMERATE
                                                             : ONSAT_MODE_DECIDE) == ONSAT_OK &&
            onsat_config_set_n0(cfg, o.n0) == ONSAT_OK &&
            onsat_config_set_split_depth(cfg, o.split_depth) == ONSAT_OK &&
            onsat_config_set_expand_dont_cares(cfg, o.expand_dont_cares ? 1 : 0) == ONSAT_OK &&
            (workers == 0 || onsat_config_set_workers(cfg, workers) == ONSAT_OK);
  int exit_code = kExitError;
  if (!ok) {
    exit_code = report_error("configuration");
  } else {
    const bool dimacs_input = onsat_problem_format(problem) == ONSAT_FORMAT_DIMACS;
    const bool json = o.output == "json" ||
                      (o.output == "auto" && (!dimacs_input || o.mode == "enumerate"));
    Printer printer{problem, json};
    onsat_stats stats{};
    const onsat_status st = onsat_solve(problem, cfg, print_solution, &printer, &stats);
    if (st == ONSAT_SAT || st == ONSAT_UNSAT) {
      const char* verdict = st == ONSAT_SAT ? "SATISFIABLE" : "UNSATISFIABLE";
      if (json) {
        nlohmann::ordered_json tail;
        tail["status"] = verdict;
        tail["solutions"] = printer.count;
        std::cout << tail.dump() << '\n';
      } else {
        std::cout << "s " << verdict << '\n';
      }
      exit_code = st;
    } else {
      exit_code = report_error("solve");
    }
  }
  onsat_config_free(cfg);
  onsat_problem_free(problem);
  return exit_code;
}

void print_identity(const char* name, size_t checked, size_t failed, const char* first, void*) {
  if (failed == 0) {
    std::cout << "PASS " << name << " (" << checked << " checks)\n";
  } else {
    std::cout << "FAIL " << name << " (" << failed << " of " << checked << " failed; first: "
              << first << ")\n";
  }
}

int run_verify(const VerifyOptions& o) {
  onsat_status st;
  if (!o.function.empty()) {
    if (o.onset.empty()) {
      std::cerr << "onsat: --function needs --onset\n";
      return kExitError;
    }
    st = onsat_verify_case(o.function.c_str(), o.other.empty() ? nullptr : o.other.c_str(),
                           o.onset.c_str(), print_identity, nullptr);
  } else if (o.exhaustive) {
    st = onsat_verify_exhaustive(o.n, print_identity, nullptr);
  } else {
    const auto seed = static_cast<uint64_t>(o.seed < 0 ? 1 : o.seed);
    st = onsat_verify_random(o.n, o.trials, seed, print_identity, nullptr);
  }
  if (st == ONSAT_OK) return kExitOk;
  if (st == ONSAT_E_CHECK_FAILED) return kExitVerifyFailed;
  return report_error("verify");
}

bool parse_hex(const std::string& text, uint32_t& out) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used, 16);
    if (used != text.size() || v > 0xFFFFFFFFUL) return false;
    out = static_cast<uint32_t>(v);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

int run_curve(const CurveOptions& o) {
  onsat_curve curve{};
  const std::pair<const std::string*, uint32_t*> fields[] = {
      {&o.modulus, &curve.modulus}, {&o.a1, &curve.a1}, {&o.a2, &curve.a2},
      {&o.a3, &curve.a3},           {&o.a4, &curve.a4}, {&o.a6, &curve.a6}};
  for (const auto& [text, slot] : fields) {
    if (!parse_hex(*text, *slot)) {
      std::cerr << "onsat: '" << *text << "' is not a hex field element\n";
      return kExitError;
    }
  }
  onsat_config* cfg = onsat_config_new();
  onsat_config_set_mode(cfg, ONSAT_MODE_ENUMERATE);
  onsat_config_set_workers(cfg, o.workers);
  size_t count = 0;
  const onsat_status st = onsat_curve_enumerate(
      &curve, o.method == "boolean" ? ONSAT_CURVE_BOOLEAN : ONSAT_CURVE_FIELD, cfg,
      [](uint32_t x, uint32_t y, void*) { std::printf("0x%x 0x%x\n", x, y); }, nullptr, &count);
  onsat_config_free(cfg);
  if (st != ONSAT_OK) return report_error("curve");
  std::fflush(stdout);
  std::cerr << count << " affine points\n";
  return kExitOk;
}

void add_solve_flags(CLI::App* cmd, SolveOptions& o, bool with_mode) {
  cmd->add_option("input", o.input, "DIMACS or equation-system file ('-' for stdin)");
  if (with_mode) {
    cmd->add_option("--mode", o.mode, "decide or enumerate")
        ->check(CLI::IsMember({"decide", "enumerate"}));
  }
  cmd->add_option("--format", o.format, "input format")
      ->check(CLI::IsMember({"auto", "dimacs", "system"}));
  cmd->add_option("--output", o.output, "solution output style")
      ->check(CLI::IsMember({"auto", "dimacs", "json"}));
  cmd->add_option("--n0", o.n0, "brute-force threshold")->check(CLI::PositiveNumber);
  cmd->add_option("--split-depth", o.split_depth, "literals per splitting chain")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", o.workers, "worker threads (default: ONSAT_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "reproducible run; implies one worker unless set");
  cmd->add_flag("--strict-dimacs", o.strict_dimacs, "treat DIMACS header mismatches as errors");
  cmd->add_flag("--expand-dont-cares", o.expand_dont_cares, "report only total assignments");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean equation and CNF solver based on orthonormal expansions"};
  app.set_version_flag("--version", std::string(onsat_version()));
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "decide (or enumerate with --mode) a problem");
  add_solve_flags(solve_cmd, solve, true);

  SolveOptions enumerate;
  enumerate.mode = "enumerate";
  auto* enum_cmd = app.add_subcommand("enumerate", "list every solution");
  add_solve_flags(enum_cmd, enumerate, false);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the expansion identity suite");
  verify_cmd->add_option("--n", verify.n, "variables per random case")->check(CLI::Range(1, 6));
  verify_cmd->add_option("--trials", verify.trials, "random cases");
  verify_cmd->add_option("--seed", verify.seed, "random seed");
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "every function over n <= 4 variables");
  verify_cmd->add_option("--function", verify.function, "check one function f");
  verify_cmd->add_option("--other", verify.other, "second operand g (default: ~f)");
  verify_cmd->add_option("--onset", verify.onset, "ON set, e.g. 'chain: x,~y' or 'x; ~x'");

  CurveOptions curve;
  auto* curve_cmd = app.add_subcommand("curve", "affine points of a Weierstrass curve over GF(2^k)");
  curve_cmd->add_option("--modulus", curve.modulus, "irreducible polynomial (hex)");
  for (auto [flag, slot] : {std::pair{"--a1", &curve.a1}, {"--a2", &curve.a2}, {"--a3", &curve.a3},
                            {"--a4", &curve.a4}, {"--a6", &curve.a6}}) {
    curve_cmd->add_option(flag, *slot, "coefficient (hex)");
  }
  curve_cmd->add_option("--method", curve.method, "field or boolean")
      ->check(CLI::IsMember({"field", "boolean"}));
  curve_cmd->add_option("--workers", curve.workers, "solver workers for --method boolean")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  if (solve_cmd->parsed()) return run_solve(solve);
  if (enum_cmd->parsed()) return run_solve(enumerate);
  if (verify_cmd->parsed()) return run_verify(verify);
  return run_curve(curve);
}

#include "onsat.h"

#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "core/cnf.hpp"
#include "core/gf2k.hpp"
#include "core/identities.hpp"
#include "core/parser.hpp"
#include "core/solver.hpp"

struct onsat_problem {
  std::variant<onsat::CnfSet, onsat::BoolSystem> body;
  std::vector<std::string> names;
  std::vector<std::string> warnings;
};

struct onsat_config {
  onsat::SolverConfig cfg;
};

namespace {

thread_local std::string last_error;

onsat_status fail(onsat_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

onsat_status status_of(onsat::ErrorCode code) {
  using onsat::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return ONSAT_E_PARSE;
    case ErrorCode::HeaderMismatch: return ONSAT_E_HEADER_MISMATCH;
    case ErrorCode::TooManyVariables: return ONSAT_E_TOO_MANY_VARIABLES;
    case ErrorCode::InvalidOnSet: return ONSAT_E_INVALID_ONSET;
    case ErrorCode::DivisionByZero:
    case ErrorCode::NotQuadratic: return ONSAT_E_FIELD;
    case ErrorCode::Internal: return ONSAT_E_INTERNAL;
    default: return ONSAT_E_INVALID_ARGUMENT;
  }
}

// Runs body, translating exceptions into status codes.
template <class Body>
onsat_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const onsat::Error& e) {
    return fail(status_of(e.code()), std::string(onsat::to_string(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(ONSAT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ONSAT_E_INTERNAL, e.what());
  }
}

bool looks_like_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string a;
    std::string b;
    if ((tokens >> a >> b) && a == "p" && b == "cnf") return true;
  }
  return false;
}

onsat_status report_identities(const onsat::IdentityReport& report, onsat_identity_fn fn,
                               void* user) {
  if (fn != nullptr) {
    for (const auto& r : report.results()) {
      fn(r.name.c_str(), r.checked, r.failed, r.first_failure.c_str(), user);
    }
  }
  return report.passed() ? ONSAT_OK : fail(ONSAT_E_CHECK_FAILED, "an identity failed");
}

}  // namespace

extern "C" {

const char* onsat_version(void) { return "1.0.0"; }

const char* onsat_last_error(void) { return last_error.c_str(); }

onsat_status onsat_problem_parse(const char* text, size_t length, onsat_format format,
                                 int strict_dimacs, onsat_problem** out) {
  if (out == nullptr || (text == nullptr && length != 0)) {
    return fail(ONSAT_E_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    const std::string_view src(text == nullptr ? "" : text, length);
    if (format == ONSAT_FORMAT_AUTO) {
      format = looks_like_dimacs(src) ? ONSAT_FORMAT_DIMACS : ONSAT_FORMAT_SYSTEM;
    }
    auto p = std::make_unique<onsat_problem>();
    if (format == ONSAT_FORMAT_DIMACS) {
      auto parsed = onsat::parse_dimacs(src, strict_dimacs != 0);
      for (std::size_t i = 1; i <= parsed.cnf.num_vars; ++i) p->names.push_back(std::to_string(i));
      p->warnings = std::move(parsed.warnings);
      p->body = std::move(parsed.cnf);
    } else if (format == ONSAT_FORMAT_SYSTEM) {
      auto file = onsat::parse_system_file(src);
      std::vector<onsat::Equation> eqs;
      for (auto& [l, r] : file.equations) eqs.push_back({l, r});
      p->names.assign(file.symbols.names().begin(), file.symbols.names().end());
      p->body = onsat::BoolSystem::make(std::move(eqs), file.symbols.size());
    } else {
      return fail(ONSAT_E_INVALID_ARGUMENT, "unknown input format");
    }
    *out = p.release();
    return ONSAT_OK;
  });
}

void onsat_problem_free(onsat_problem* problem) { delete problem; }

onsat_format onsat_problem_format(const onsat_problem* problem) {
  if (problem == nullptr) return ONSAT_FORMAT_AUTO;
  return std::holds_alternative<onsat::CnfSet>(problem->body) ? ONSAT_FORMAT_DIMACS
                                                              : ONSAT_FORMAT_SYSTEM;
}

size_t onsat_problem_var_count(const onsat_problem* problem) {
  return problem == nullptr ? 0 : problem->names.size();
}

const char* onsat_problem_var_name(const onsat_problem* problem, size_t var) {
  if (problem == nullptr || var >= problem->names.size()) return nullptr;
  return problem->names[var].c_str();
}

size_t onsat_problem_warning_count(const onsat_problem* problem) {
  return problem == nullptr ? 0 : problem->warnings.size();
}

const char* onsat_problem_warning(const onsat_problem* problem, size_t index) {
  if (problem == nullptr || index >= problem->warnings.size()) return nullptr;
  return problem->warnings[index].c_str();
}

onsat_config* onsat_config_new(void) { return new (std::nothrow) onsat_config{}; }

void onsat_config_free(onsat_config* config) { delete config; }

onsat_status onsat_config_set_mode(onsat_config* config, onsat_mode mode) {
  if (config == nullptr) return fail(ONSAT_E_INVALID_ARGUMENT, "null config");
  if (mode != ONSAT_MODE_DECIDE && mode != ONSAT_MODE_ENUMERATE) {
    return fail(ONSAT_E_INVALID_ARGUMENT, "unknown mode");
  }
  config->cfg.mode = mode == ONSAT_MODE_DECIDE ? onsat::SolveMode::Decide
                                               : onsat::SolveMode::Enumerate;
  return ONSAT_OK;
}

onsat_status onsat_config_set_n0(onsat_config* config, size_t n0) {
  if (config == nullptr || n0 < 1) return fail(ONSAT_E_INVALID_ARGUMENT, "n0 must be at least 1");
  config->cfg.n0 = n0;
  return ONSAT_OK;
}

onsat_status onsat_config_set_split_depth(onsat_config* config, size_t depth) {
  if (config == nullptr || depth < 1) {
    return fail(ONSAT_E_INVALID_ARGUMENT, "split depth must be at least 1");
  }
  config->cfg.split_depth = depth;
  return ONSAT_OK;
}

onsat_status onsat_config_set_workers(onsat_config* config, size_t workers) {
  if (config == nullptr || workers < 1) {
    return fail(ONSAT_E_INVALID_ARGUMENT, "workers must be at least 1");
  }
  config->cfg.workers = workers;
  return ONSAT_OK;
}

onsat_status onsat_config_set_expand_dont_cares(onsat_config* config, int expand) {
  if (config == nullptr) return fail(ONSAT_E_INVALID_ARGUMENT, "null config");
  config->cfg.expand_dont_cares = expand != 0;
  return ONSAT_OK;
}

size_t onsat_config_workers(const onsat_config* config) {
  return config == nullptr ? 0 : config->cfg.workers;
}

onsat_status onsat_solve(const onsat_problem* problem, const onsat_config* config,
                         onsat_solution_fn on_solution, void* user, onsat_stats* stats) {
  if (problem == nullptr) return fail(ONSAT_E_INVALID_ARGUMENT, "null problem");
  return guarded([&] {
    const onsat::SolverConfig cfg = config == nullptr ? onsat::SolverConfig{} : config->cfg;
    onsat::validate(cfg);
    std::size_t delivered = 0;
    onsat::SolutionCallback cb = [&](const onsat::SolutionCube& c) {
      ++delivered;
      if (on_solution == nullptr) return true;
      return on_solution(reinterpret_cast<const signed char*>(c.values.data()), c.values.size(),
                         user) != 0;
    };
    const onsat::SolveOutcome out =
        std::holds_alternative<onsat::CnfSet>(problem->body)
            ? onsat::solve_sat(std::get<onsat::CnfSet>(problem->body), cfg, cb)
            : onsat::bool_solve(std::get<onsat::BoolSystem>(problem->body), cfg, cb);
    if (stats != nullptr) {
      *stats = {out.stats.nodes, out.stats.leaves, out.stats.conflicts, delivered};
    }
    return out.status == onsat::SolveStatus::Sat ? ONSAT_SAT : ONSAT_UNSAT;
  });
}

onsat_status onsat_verify_random(size_t n, size_t trials, uint64_t seed, onsat_identity_fn report,
                                 void* user) {
  return guarded([&] { return report_identities(onsat::random_identities(n, trials, seed), report, user); });
}

onsat_status onsat_verify_exhaustive(size_t n, onsat_identity_fn report, void* user) {
  return guarded([&] { return report_identities(onsat::exhaustive_identities(n), report, user); });
}

onsat_status onsat_verify_case(const char* f, const char* g, const char* onset,
                               onsat_identity_fn report, void* user) {
  if (f == nullptr || onset == nullptr) return fail(ONSAT_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    onsat::SymbolTable symbols;
    onsat::BoolFunc ff = onsat::parse_function(f, symbols);
    onsat::BoolFunc gg = g == nullptr ? ~ff : onsat::parse_function(g, symbols);
    onsat::OnSet base = onsat::parse_onset_spec(onset, symbols);
    return report_identities(onsat::check_identities({ff, gg, base}), report, user);
  });
}

onsat_status onsat_curve_enumerate(const onsat_curve* curve, onsat_curve_method method,
                                   const onsat_config* config, onsat_point_fn on_point, void* user,
                                   size_t* count) {
  if (curve == nullptr) return fail(ONSAT_E_INVALID_ARGUMENT, "null curve");
  if (method != ONSAT_CURVE_FIELD && method != ONSAT_CURVE_BOOLEAN) {
    return fail(ONSAT_E_INVALID_ARGUMENT, "unknown curve method");
  }
  return guarded([&] {
    const onsat::Gf2k field(curve->modulus);
    const onsat::WeierstrassCurve e{field.element(curve->a1), field.element(curve->a2),
                                    field.element(curve->a3), field.element(curve->a4),
                                    field.element(curve->a6)};
    const auto points = onsat::enumerate_curve(
        field, e,
        method == ONSAT_CURVE_FIELD ? onsat::CurveMethod::FieldDirect
                                    : onsat::CurveMethod::BooleanSolver,
        config == nullptr ? onsat::SolverConfig{} : config->cfg);
    for (const auto& p : points) {
      if (on_point != nullptr) on_point(p.x.bits, p.y.bits, user);
    }
    if (count != nullptr) *count = points.size();
    return ONSAT_OK;
  });
}

}  // extern "C"

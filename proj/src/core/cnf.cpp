#include "cnf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace onsat {

std::vector<VarId> CnfSet::occurring_vars() const {
  std::vector<char> seen(num_vars, 0);
  for (const auto& c : clauses) {
    for (const auto& l : c.literals) seen.at(l.var) = 1;
  }
  std::vector<VarId> out;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(static_cast<VarId>(v));
  }
  return out;
}

namespace {

// Returns false for a tautological clause; drops repeated literals.
bool normalize_clause(Clause& c) {
  std::vector<Literal> out;
  for (const auto& l : c.literals) {
    if (std::find(out.begin(), out.end(), l) != out.end()) continue;
    if (std::find(out.begin(), out.end(), l.negated()) != out.end()) return false;
    out.push_back(l);
  }
  c.literals = std::move(out);
  return true;
}

}  // namespace

DimacsParse parse_dimacs(std::string_view text, bool strict) {
  DimacsParse out;
  bool have_header = false;
  std::size_t declared_vars = 0;
  std::size_t declared_clauses = 0;
  std::size_t max_var = 0;
  Clause current;
  bool open_clause = false;
  std::size_t line_no = 0;

  auto parse_error = [&](const std::string& msg) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
  };
  auto mismatch = [&](const std::string& msg) {
    if (strict) throw Error(ErrorCode::HeaderMismatch, msg);
    out.warnings.push_back(msg);
  };
  auto finish_clause = [&] {
    if (normalize_clause(current)) {
      out.cnf.clauses.push_back(std::move(current));
    } else {
      out.warnings.push_back("line " + std::to_string(line_no) +
                             ": dropped tautological clause");
    }
    current = Clause{};
    open_clause = false;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first[0] == 'c') continue;
    if (first == "%") break;
    if (first == "p") {
      std::string fmt;
      long long v = -1;
      long long c = -1;
      if (have_header) throw parse_error("second problem line");
      if (!(tokens >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0) {
        throw parse_error("expected 'p cnf <vars> <clauses>'");
      }
      std::string extra;
      if (tokens >> extra) throw parse_error("trailing tokens after problem line");
      have_header = true;
      declared_vars = static_cast<std::size_t>(v);
      declared_clauses = static_cast<std::size_t>(c);
      continue;
    }
    if (!have_header) throw parse_error("clause before the 'p cnf' header");
    tokens.clear();
    tokens.seekg(0);
    std::string tok;
    while (tokens >> tok) {
      long long lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw parse_error("bad literal '" + tok + "'");
      }
      if (used != tok.size()) throw parse_error("bad literal '" + tok + "'");
      if (lit == 0) {
        finish_clause();
        continue;
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > (std::size_t{1} << 30)) throw parse_error("variable index too large");
      max_var = std::max(max_var, var);
      current.literals.push_back({static_cast<VarId>(var - 1), lit > 0});
      open_clause = true;
    }
  }
  if (open_clause) {
    out.warnings.push_back("last clause is not terminated by 0");
    finish_clause();
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'p cnf' header");
  if (max_var > declared_vars) {
    mismatch("header declares " + std::to_string(declared_vars) + " variables but literals use " +
             std::to_string(max_var));
  }
  if (out.cnf.clauses.size() != declared_clauses) {
    mismatch("header declares " + std::to_string(declared_clauses) + " clauses, found " +
             std::to_string(out.cnf.clauses.size()));
  }
  out.cnf.num_vars = std::max(declared_vars, max_var);
  return out;
}

std::string emit_dimacs(const CnfSet& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (const auto& l : c.literals) {
      os << (l.positive ? "" : "-") << (l.var + 1) << ' ';
    }
    os << "0\n";
  }
  return os.str();
}

CnfSet make_cnf(std::size_t num_vars, const std::vector<std::vector<int>>& clauses) {
  CnfSet out;
  out.num_vars = num_vars;
  for (const auto& row : clauses) {
    Clause c;
    for (int lit : row) {
      if (lit == 0 || static_cast<std::size_t>(lit < 0 ? -lit : lit) > num_vars) {
        throw Error(ErrorCode::InvalidArgument, "literal " + std::to_string(lit) + " out of range");
      }
      c.literals.push_back({static_cast<VarId>((lit < 0 ? -lit : lit) - 1), lit > 0});
    }
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
      for (std::size_t j = i + 1; j < c.literals.size(); ++j) {
        if (c.literals[i].var == c.literals[j].var) {
          throw Error(ErrorCode::DuplicateVariable, "clause repeats a variable");
        }
      }
    }
    out.clauses.push_back(std::move(c));
  }
  return out;
}

std::vector<Literal> find_pure_literals(const CnfSet& cnf) {
  // bit 0: seen positive, bit 1: seen negative
  std::vector<std::uint8_t> seen(cnf.num_vars, 0);
  for (const auto& c : cnf.clauses) {
    for (const auto& l : c.literals) seen[l.var] |= l.positive ? 1 : 2;
  }
  std::vector<Literal> out;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v] == 1 || seen[v] == 2) out.push_back({static_cast<VarId>(v), seen[v] == 1});
  }
  return out;
}

std::optional<CnfSet> assign_and_reduce(const CnfSet& cnf, const PartialAssignment& p) {
  std::vector<std::int8_t> value(cnf.num_vars, -1);
  for (const auto& [v, b] : p.entries()) {
    if (v < value.size()) value[v] = b ? 1 : 0;
  }
  CnfSet out;
  out.num_vars = cnf.num_vars;
  out.clauses.reserve(cnf.clauses.size());
  for (const auto& c : cnf.clauses) {
    Clause reduced;
    bool satisfied = false;
    for (const auto& l : c.literals) {
      const auto val = value[l.var];
      if (val < 0) {
        reduced.literals.push_back(l);
      } else if ((val == 1) == l.positive) {
        satisfied = true;
        break;
      }
    }
    if (satisfied) continue;
    if (reduced.literals.empty()) return std::nullopt;
    out.clauses.push_back(std::move(reduced));
  }
  return out;
}

bool satisfies(const CnfSet& cnf, const PartialAssignment& p) {
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.literals.begin(), c.literals.end(), [&](const Literal& l) {
      auto v = p.lookup(l.var);
      return v && *v == l.positive;
    });
  });
}

CnfReduction propagate_units(const CnfSet& cnf) {
  CnfReduction out{cnf, {}};
  while (true) {
    std::map<VarId, bool> units;
    for (const auto& c : out.cnf->clauses) {
      if (c.literals.size() != 1) continue;
      const Literal l = c.literals.front();
      auto [it, inserted] = units.emplace(l.var, l.positive);
      if (!inserted && it->second != l.positive) {
        out.cnf.reset();
        return out;
      }
    }
    if (units.empty()) return out;
    PartialAssignment p(std::vector<PartialAssignment::Entry>(units.begin(), units.end()));
    out.assigned = out.assigned.extended(p);
    out.cnf = assign_and_reduce(*out.cnf, p);
    if (!out.cnf) return out;
  }
}

CnfReduction assign_pure_round(const CnfSet& cnf) {
  CnfReduction out{cnf, {}};
  for (const Literal& l : find_pure_literals(cnf)) {
    const bool occurs = std::any_of(
        out.cnf->clauses.begin(), out.cnf->clauses.end(), [&](const Clause& c) {
          return std::any_of(c.literals.begin(), c.literals.end(),
                             [&](const Literal& x) { return x.var == l.var; });
        });
    if (!occurs) continue;
    PartialAssignment p({{l.var, l.positive}});
    out.assigned.assign(l.var, l.positive);
    // A pure literal only satisfies clauses, so this never conflicts.
    out.cnf = assign_and_reduce(*out.cnf, p);
  }
  return out;
}

OnSet pure_literal_chain(const CnfSet& cnf) {
  auto pures = find_pure_literals(cnf);
  if (pures.empty()) throw Error(ErrorCode::NoPureLiterals, "CNF set has no pure literals");
  return term_chain(pures);
}

OnSet choose_split(const CnfSet& cnf, const SolverConfig& cfg) {
  std::vector<std::size_t> pos(cnf.num_vars, 0);
  std::vector<std::size_t> neg(cnf.num_vars, 0);
  for (const auto& c : cnf.clauses) {
    for (const auto& l : c.literals) ++(l.positive ? pos : neg)[l.var];
  }
  std::vector<VarId> ranked;
  for (std::size_t v = 0; v < cnf.num_vars; ++v) {
    if (pos[v] + neg[v] > 0) ranked.push_back(static_cast<VarId>(v));
  }
  if (ranked.empty()) throw Error(ErrorCode::InvalidArgument, "no variable left to split on");
  std::stable_sort(ranked.begin(), ranked.end(), [&](VarId a, VarId b) {
    return pos[a] + neg[a] > pos[b] + neg[b];
  });
  std::vector<Literal> chain;
  for (std::size_t i = 0; i < ranked.size() && i < cfg.split_depth; ++i) {
    chain.push_back({ranked[i], pos[ranked[i]] >= neg[ranked[i]]});
  }
  return term_chain(chain);
}

std::vector<std::optional<CnfSet>> decompose(const CnfSet& cnf, const OnSet& terms) {
  std::vector<std::optional<CnfSet>> out;
  out.reserve(terms.order());
  for (const Term& t : terms.terms()) out.push_back(assign_and_reduce(cnf, t.partial_assignment()));
  return out;
}

BoolSystem to_bool_system(const CnfSet& cnf) {
  std::vector<Equation> eqs;
  eqs.reserve(cnf.clauses.size());
  for (const auto& c : cnf.clauses) {
    std::vector<BoolFunc> lits;
    for (const auto& l : c.literals) lits.push_back(BoolFunc::literal(l));
    eqs.push_back({BoolFunc::disjunction(std::move(lits)), BoolFunc::constant(true)});
  }
  return BoolSystem::make(std::move(eqs), cnf.num_vars);
}

namespace {

struct CnfNode {
  CnfSet cnf;
  PartialAssignment trail;
};

SolutionCube cube_of(std::size_t num_vars, const PartialAssignment& trail,
                     const PartialAssignment& local) {
  SolutionCube c;
  c.values.assign(num_vars, -1);
  for (const auto& [v, b] : trail.entries()) c.values[v] = b ? 1 : 0;
  for (const auto& [v, b] : local.entries()) c.values[v] = b ? 1 : 0;
  return c;
}

template <class Emit>
void brute_force_leaf(const CnfNode& node, SolveMode mode, Emit&& emit) {
  const auto occ = node.cnf.occurring_vars();
  check_enumeration_cap(occ.size(), kDefaultEnumerationCap);
  for_each_packed_block(occ, [&](std::uint64_t base, std::uint64_t mask, auto words) {
    std::uint64_t ok = mask;
    for (const auto& c : node.cnf.clauses) {
      std::uint64_t sat = 0;
      for (const auto& l : c.literals) sat |= l.positive ? words[l.var] : ~words[l.var];
      ok &= sat;
      if (!ok) break;
    }
    while (ok) {
      const int j = std::countr_zero(ok);
      ok &= ok - 1;
      const std::uint64_t idx = base + static_cast<std::uint64_t>(j);
      PartialAssignment local;
      for (std::size_t p = 0; p < occ.size(); ++p) {
        local.assign(occ[p], ((idx >> (occ.size() - 1 - p)) & 1U) != 0);
      }
      if (!emit(cube_of(node.cnf.num_vars, node.trail, local))) return false;
      if (mode == SolveMode::Decide) return false;
    }
    return true;
  });
}

// Applies a reduction to node; false on conflict.
bool absorb(CnfNode& node, CnfReduction&& r) {
  if (!r.cnf) return false;
  node.cnf = std::move(*r.cnf);
  node.trail = node.trail.extended(r.assigned);
  return true;
}

}  // namespace

SolveOutcome solve_sat(const CnfSet& cnf, const SolverConfig& cfg,
                       const SolutionCallback& callback) {
  const std::size_t num_vars = cnf.num_vars;
  auto branch_on = [](const CnfNode& node, const OnSet& terms, Frontier<CnfNode>& frontier) {
    for (const Term& t : terms.terms()) {
      const auto q = t.partial_assignment();
      if (auto child = assign_and_reduce(node.cnf, q)) {
        frontier.branch({std::move(*child), node.trail.extended(q)});
      } else {
        frontier.conflict();
      }
    }
  };

  auto expand = [&](CnfNode node, Frontier<CnfNode>& frontier) {
    if (frontier.stopped()) return;
    while (true) {
      if (!absorb(node, propagate_units(node.cnf))) {
        frontier.conflict();
        return;
      }
      if (cfg.mode == SolveMode::Enumerate || node.cnf.clauses.empty()) break;
      auto pures = assign_pure_round(node.cnf);
      if (pures.assigned.empty()) break;
      absorb(node, std::move(pures));
    }
    if (node.cnf.clauses.empty()) {
      frontier.leaf();
      frontier.emit(cube_of(num_vars, node.trail, {}));
      return;
    }
    if (node.cnf.occurring_vars().size() <= cfg.n0) {
      frontier.leaf();
      brute_force_leaf(node, cfg.mode, [&](const SolutionCube& c) { return frontier.emit(c); });
      return;
    }
    if (cfg.mode == SolveMode::Enumerate && !find_pure_literals(node.cnf).empty()) {
      branch_on(node, pure_literal_chain(node.cnf), frontier);
      return;
    }
    branch_on(node, choose_split(node.cnf, cfg), frontier);
  };

  auto verifier = [&cnf](const SolutionCube& cube) {
    for (const auto& c : cnf.clauses) {
      const bool sat = std::any_of(c.literals.begin(), c.literals.end(), [&](const Literal& l) {
        return cube.values[l.var] == (l.positive ? 1 : 0);
      });
      if (!sat) throw Error(ErrorCode::Internal, "emitted solution leaves a clause unsatisfied");
    }
  };
  return run_search<CnfNode>(CnfNode{cnf, {}}, cfg, expand, callback, verifier);
}

}  // namespace onsat

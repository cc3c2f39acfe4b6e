#include "solver.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace onsat {

BoolSystem BoolSystem::make(std::vector<Equation> equations, std::size_t var_count) {
  BoolSystem s;
  for (const auto& eq : equations) {
    for (VarId v : eq.lhs.vars()) var_count = std::max<std::size_t>(var_count, v + 1);
    for (VarId v : eq.rhs.vars()) var_count = std::max<std::size_t>(var_count, v + 1);
  }
  s.equations = std::move(equations);
  s.root_var_count = var_count;
  s.vars.resize(var_count);
  for (std::size_t i = 0; i < var_count; ++i) s.vars[i] = static_cast<VarId>(i);
  return s;
}

std::vector<VarId> BoolSystem::occurring_vars() const {
  std::vector<VarId> out;
  for (const auto& eq : equations) {
    out = merge_vars(out, eq.lhs.vars());
    out = merge_vars(out, eq.rhs.vars());
  }
  return out;
}

namespace {

void erase_vars(std::vector<VarId>& vars, const PartialAssignment& p) {
  std::erase_if(vars, [&](VarId v) { return p.contains(v); });
}

// x xor y (possibly negated) over two distinct variables: returns (x, y, parity)
// with the node equal to x ^ y ^ parity.
std::optional<std::tuple<VarId, VarId, bool>> as_binary_xor(const BoolFunc& f) {
  const Node* n = &f.node();
  bool parity = false;
  if (n->op == Op::Not) {
    parity = true;
    n = n->kids.front().get();
  }
  if (n->op != Op::Xor || n->kids.size() != 2) return std::nullopt;
  const Node& a = *n->kids[0];
  const Node& b = *n->kids[1];
  if (a.op != Op::Var || b.op != Op::Var) return std::nullopt;
  return std::make_tuple(a.var, b.var, parity);
}

bool all_literal_kids(const BoolFunc& f) {
  return std::all_of(f.node().kids.begin(), f.node().kids.end(), [](const NodePtr& k) {
    return k->op == Op::Var || (k->op == Op::Not && k->kids.front()->op == Op::Var);
  });
}

Literal kid_literal(const NodePtr& k) {
  if (k->op == Op::Var) return {k->var, true};
  return {k->kids.front()->var, false};
}

}  // namespace

std::optional<TrivReduction> triv_solve(const BoolSystem& s) {
  TrivReduction out{s, {}};
  BoolSystem& sys = out.system;
  while (true) {
    std::map<VarId, bool> units;
    bool conflict = false;
    auto force = [&](Literal l, bool value) {
      const bool v = l.positive ? value : !value;
      auto [it, inserted] = units.emplace(l.var, v);
      if (!inserted && it->second != v) conflict = true;
    };
    std::optional<std::size_t> bind_eq;
    Binding bind{};
    std::vector<Equation> kept;
    kept.reserve(sys.equations.size());

    for (const auto& eq : sys.equations) {
      if (conflict) break;
      BoolFunc l = eq.lhs;
      BoolFunc r = eq.rhs;
      if (l.same_node(r)) continue;
      if (l.is_constant() && !r.is_constant()) std::swap(l, r);
      if (l.is_constant()) {
        if (*l.constant_value() != *r.constant_value()) conflict = true;
        continue;
      }
      if (auto c = r.constant_value()) {
        if (auto lit = l.as_literal()) {
          force(*lit, *c);
          continue;
        }
        const Op op = l.node().op;
        if (op == Op::Or && !*c && all_literal_kids(l)) {
          for (const auto& k : l.node().kids) force(kid_literal(k), false);
          continue;
        }
        if (op == Op::And && *c && all_literal_kids(l)) {
          for (const auto& k : l.node().kids) force(kid_literal(k), true);
          continue;
        }
        if (auto x = as_binary_xor(l)) {
          auto [a, b, parity] = *x;
          const bool rhs = *c ^ parity;  // a ^ b = rhs
          if (a == b) {
            if (rhs) conflict = true;
            continue;
          }
          if (!bind_eq) {
            bind_eq = kept.size();
            bind = {a, {b, !rhs}};
          }
        }
        kept.push_back(eq);
        continue;
      }
      auto ll = l.as_literal();
      auto rl = r.as_literal();
      if (ll && rl) {
        if (ll->var == rl->var) {
          if (ll->positive != rl->positive) conflict = true;
          continue;
        }
        if (!bind_eq) {
          bind_eq = kept.size();
          bind = {ll->var, {rl->var, ll->positive == rl->positive}};
        }
      }
      kept.push_back(eq);
    }
    if (conflict) return std::nullopt;

    if (!units.empty()) {
      PartialAssignment p(std::vector<PartialAssignment::Entry>(units.begin(), units.end()));
      for (auto& eq : kept) {
        eq.lhs = cofactor(eq.lhs, p);
        eq.rhs = cofactor(eq.rhs, p);
      }
      sys.equations = std::move(kept);
      erase_vars(sys.vars, p);
      sys.trail = sys.trail.extended(p);
      out.assigned = out.assigned.extended(p);
      continue;
    }
    if (bind_eq) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(*bind_eq));
      const std::map<VarId, BoolFunc> repl{{bind.var, BoolFunc::literal(bind.source)}};
      for (auto& eq : kept) {
        eq.lhs = substitute(eq.lhs, repl);
        eq.rhs = substitute(eq.rhs, repl);
      }
      sys.equations = std::move(kept);
      std::erase(sys.vars, bind.var);
      sys.bindings.push_back(bind);
      continue;
    }
    sys.equations = std::move(kept);
    return out;
  }
}

OnSet choose_split(const BoolSystem& s, const SolverConfig& cfg) {
  std::map<VarId, std::size_t> counts;
  for (const auto& eq : s.equations) {
    for (const auto& [v, c] : occurrence_counts(eq.lhs)) counts[v] += c;
    for (const auto& [v, c] : occurrence_counts(eq.rhs)) counts[v] += c;
  }
  std::vector<std::pair<VarId, std::size_t>> ranked(counts.begin(), counts.end());
  if (ranked.empty()) throw Error(ErrorCode::InvalidArgument, "no variable left to split on");
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<Literal> chain;
  for (std::size_t i = 0; i < ranked.size() && i < cfg.split_depth; ++i) {
    chain.push_back({ranked[i].first, true});
  }
  return term_chain(chain);
}

std::vector<BoolSystem> decompose(const BoolSystem& s, const OnSet& terms) {
  std::vector<BoolSystem> out;
  out.reserve(terms.order());
  for (const Term& t : terms.terms()) {
    const PartialAssignment q = t.partial_assignment();
    for (const auto& [v, b] : q.entries()) {
      if (!std::binary_search(s.vars.begin(), s.vars.end(), v)) {
        throw Error(ErrorCode::InvalidArgument,
                    "split variable " + std::to_string(v) + " is not unresolved in the system");
      }
    }
    BoolSystem child;
    child.equations.reserve(s.equations.size());
    for (const auto& eq : s.equations) {
      child.equations.push_back({cofactor(eq.lhs, q), cofactor(eq.rhs, q)});
    }
    child.vars = s.vars;
    erase_vars(child.vars, q);
    child.trail = s.trail.extended(q);
    child.bindings = s.bindings;
    child.root_var_count = s.root_var_count;
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<SolutionCube> reassemble(const BoolSystem& s, const PartialAssignment& local) {
  SolutionCube base;
  base.values.assign(s.root_var_count, -1);
  for (const auto& [v, b] : s.trail.entries()) base.values.at(v) = b ? 1 : 0;
  for (const auto& [v, b] : local.entries()) base.values.at(v) = b ? 1 : 0;

  std::vector<SolutionCube> cubes{std::move(base)};
  // Newest binding first: its source is final by the time older ones read it.
  for (auto it = s.bindings.rbegin(); it != s.bindings.rend(); ++it) {
    const Binding& bd = *it;
    std::vector<SolutionCube> next;
    next.reserve(cubes.size());
    for (auto& c : cubes) {
      auto set_from_source = [&](SolutionCube& cube) {
        const bool src = cube.values[bd.source.var] != 0;
        cube.values[bd.var] = (bd.source.positive ? src : !src) ? 1 : 0;
      };
      if (c.values[bd.source.var] < 0) {
        for (std::int8_t b : {0, 1}) {
          SolutionCube copy = c;
          copy.values[bd.source.var] = b;
          set_from_source(copy);
          next.push_back(std::move(copy));
        }
      } else {
        set_from_source(c);
        next.push_back(std::move(c));
      }
    }
    cubes = std::move(next);
  }
  return cubes;
}

namespace {

// Enumerates local solutions over the occurring variables; emit returns false
// to stop.
template <class Emit>
void leaf_enumerate(const BoolSystem& s, SolveMode mode, std::uint64_t cap, Emit&& emit) {
  const auto occ = s.occurring_vars();
  check_enumeration_cap(occ.size(), cap);
  std::vector<PackedProgram> mismatch;
  mismatch.reserve(s.equations.size());
  for (const auto& eq : s.equations) mismatch.emplace_back(eq.lhs ^ eq.rhs);
  for_each_packed_block(occ, [&](std::uint64_t base, std::uint64_t mask, auto words) {
    std::uint64_t ok = mask;
    for (const auto& prog : mismatch) {
      ok &= ~prog.run(words);
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
      for (const auto& cube : reassemble(s, local)) {
        if (!emit(cube)) return false;
      }
      if (mode == SolveMode::Decide) return false;
    }
    return true;
  });
}

}  // namespace

SolveOutcome brute_force(const BoolSystem& s, SolveMode mode, std::uint64_t cap) {
  SolveOutcome out;
  out.stats.nodes = out.stats.leaves = 1;
  leaf_enumerate(s, mode, cap, [&](const SolutionCube& c) {
    out.solutions.push_back(c);
    return true;
  });
  out.status = out.solutions.empty() ? SolveStatus::Unsat : SolveStatus::Sat;
  return out;
}

void verify_cube(const std::vector<Equation>& equations, const SolutionCube& cube) {
  PartialAssignment fixed;
  for (std::size_t v = 0; v < cube.values.size(); ++v) {
    if (cube.values[v] >= 0) fixed.assign(static_cast<VarId>(v), cube.values[v] != 0);
  }
  for (const auto& eq : equations) {
    const BoolFunc l = cofactor(eq.lhs, fixed);
    const BoolFunc r = cofactor(eq.rhs, fixed);
    const bool ok = (l.is_constant() && r.is_constant())
                        ? *l.constant_value() == *r.constant_value()
                        : equivalent(l, r);
    if (!ok) throw Error(ErrorCode::Internal, "emitted solution violates a root equation");
  }
}

SolveOutcome bool_solve(const BoolSystem& s, const SolverConfig& cfg,
                        const SolutionCallback& callback) {
  auto expand = [&cfg](BoolSystem node, Frontier<BoolSystem>& frontier) {
    if (frontier.stopped()) return;
    auto reduced = triv_solve(node);
    if (!reduced) {
      frontier.conflict();
      return;
    }
    BoolSystem& sys = reduced->system;
    if (sys.occurring_vars().size() <= cfg.n0) {
      frontier.leaf();
      leaf_enumerate(sys, cfg.mode, kDefaultEnumerationCap,
                     [&](const SolutionCube& c) { return frontier.emit(c); });
      return;
    }
    for (auto& child : decompose(sys, choose_split(sys, cfg))) frontier.branch(std::move(child));
  };
  const auto& root_equations = s.equations;
  return run_search<BoolSystem>(s, cfg, expand, callback, [&root_equations](const SolutionCube& c) {
    verify_cube(root_equations, c);
  });
}

}  // namespace onsat

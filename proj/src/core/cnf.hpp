#pragma once

// CNF specialization: DIMACS I/O, unit and pure-literal reductions, splitting
// by term chains, and the SolveSAT driver on the shared search engine.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolalg.hpp"
#include "onset.hpp"
#include "search.hpp"
#include "solver.hpp"

namespace onsat {

struct Clause {
  std::vector<Literal> literals;  // no variable twice; empty = falsified
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Clauses over variables 0..num_vars-1 (DIMACS variable i is VarId i-1).
struct CnfSet {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  /// Variables occurring in some clause, sorted.
  std::vector<VarId> occurring_vars() const;
  friend bool operator==(const CnfSet&, const CnfSet&) = default;
};

struct DimacsParse {
  CnfSet cnf;
  std::vector<std::string> warnings;
};

/// Header/count mismatches are warnings unless strict, where they throw
/// HeaderMismatch. Malformed input throws ParseError naming the line.
DimacsParse parse_dimacs(std::string_view text, bool strict = false);
std::string emit_dimacs(const CnfSet& cnf);

/// Builds a clause set from signed DIMACS-style literals.
CnfSet make_cnf(std::size_t num_vars, const std::vector<std::vector<int>>& clauses);

/// Variables occurring with a single polarity, in VarId order.
std::vector<Literal> find_pure_literals(const CnfSet& cnf);

/// Drops satisfied clauses and false literals; nullopt on an empty clause.
std::optional<CnfSet> assign_and_reduce(const CnfSet& cnf, const PartialAssignment& p);

/// True iff the assignment makes every clause contain a true literal.
bool satisfies(const CnfSet& cnf, const PartialAssignment& p);

struct CnfReduction {
  std::optional<CnfSet> cnf;   // nullopt on conflict
  PartialAssignment assigned;  // what the reduction set
};

/// Assigns unit literals true until none remain.
CnfReduction propagate_units(const CnfSet& cnf);

/// One round of pure-literal assignment: the pure literals of cnf are made
/// true in VarId order, skipping any whose variable no longer occurs after
/// the earlier ones were applied.
CnfReduction assign_pure_round(const CnfSet& cnf);

/// Term chain over the pure literals in their polarity; throws NoPureLiterals.
OnSet pure_literal_chain(const CnfSet& cnf);

/// Term chain over the split_depth most frequent variables (ties to the lower
/// VarId), each in its majority polarity (ties positive).
OnSet choose_split(const CnfSet& cnf, const SolverConfig& cfg);

/// cnf / t for every term; nullopt marks a conflicting branch.
std::vector<std::optional<CnfSet>> decompose(const CnfSet& cnf, const OnSet& terms);

/// Each clause as `l1 | ... | lk = 1`.
BoolSystem to_bool_system(const CnfSet& cnf);

/// Generalized DPLL: units, pure literals (decide: assign; enumerate: branch
/// over the pure chain), term-chain splitting, brute force at n0.
SolveOutcome solve_sat(const CnfSet& cnf, const SolverConfig& cfg,
                       const SolutionCallback& callback = {});

}  // namespace onsat

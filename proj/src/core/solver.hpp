#pragma once

// Decomposition solver for systems f_i = g_i over B0: trivial reductions,
// splitting by ON term sets, brute force below n0, reassembly of root
// solutions with don't-cares.

#include <optional>
#include <vector>

#include "boolalg.hpp"
#include "onset.hpp"
#include "search.hpp"

namespace onsat {

struct Equation {
  BoolFunc lhs;
  BoolFunc rhs;
};

/// var = source (a literal over another variable), recorded when a
/// literal-equality equation eliminates var.
struct Binding {
  VarId var;
  Literal source;
};

class BoolSystem {
 public:
  /// Root system over variables 0..var_count-1; var_count is raised to cover
  /// every variable the equations mention.
  static BoolSystem make(std::vector<Equation> equations, std::size_t var_count = 0);

  std::vector<Equation> equations;
  std::vector<VarId> vars;  // unresolved variables of this subproblem, sorted
  PartialAssignment trail;  // assignments made on the way from the root
  std::vector<Binding> bindings;
  std::size_t root_var_count = 0;

  /// Unresolved variables mentioned by some equation, sorted.
  std::vector<VarId> occurring_vars() const;
};

struct TrivReduction {
  BoolSystem system;
  PartialAssignment assigned;  // assignments made by this reduction
};

/// Trivial reductions to fixpoint; nullopt signals a conflict (local UNSAT).
std::optional<TrivReduction> triv_solve(const BoolSystem& s);

/// Term chain over the split_depth most frequent unresolved variables (ties
/// to the lower VarId), positive polarity.
OnSet choose_split(const BoolSystem& s, const SolverConfig& cfg);

/// One subsystem per term: equations cofactored by q(t), trail extended.
std::vector<BoolSystem> decompose(const BoolSystem& s, const OnSet& terms);

/// Root solution cubes for a local solution of s; a don't-care that a
/// binding depends on is expanded into both values.
std::vector<SolutionCube> reassemble(const BoolSystem& s, const PartialAssignment& local);

/// Exhaustive search over the occurring variables of s (no reductions).
SolveOutcome brute_force(const BoolSystem& s, SolveMode mode = SolveMode::Enumerate,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// Full decomposition solve. Solutions go to callback when given, else into
/// the outcome.
SolveOutcome bool_solve(const BoolSystem& s, const SolverConfig& cfg,
                        const SolutionCallback& callback = {});

/// Throws Internal unless every expansion of the cube satisfies the equations.
void verify_cube(const std::vector<Equation>& equations, const SolutionCube& cube);

}  // namespace onsat

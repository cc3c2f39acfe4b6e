#pragma once

// Expansions f = sum(alpha_i * phi_i) over an ON set, coefficient algebra and
// the consistency conditions built on them.

#include <optional>
#include <vector>

#include "boolalg.hpp"
#include "onset.hpp"

namespace onsat {

enum class CoefficientChoice {
  Default,    // Ratio for term sets, Canonical otherwise
  Canonical,  // alpha_i = f * phi_i
  Ratio,      // alpha_i = f / t_i, term sets only
};

struct OnExpansion {
  OnSet base;
  std::vector<BoolFunc> coefficients;  // aligned with base members
  std::vector<VarId> vars;             // variables of the expanded function

  /// sum(alpha_i * phi_i)
  BoolFunc reconstruct() const;
};

OnExpansion expand(const BoolFunc& f, const OnSet& s,
                   CoefficientChoice choice = CoefficientChoice::Default);

enum class CombineOp { And, Or, Xor };

/// Coefficient-wise combination; throws BaseMismatch unless both share a base.
OnExpansion combine(const OnExpansion& a, const OnExpansion& b, CombineOp op);
OnExpansion negate(const OnExpansion& e);

/// Expansion of f(g_1, ..., g_n), where g_i expands the i-th variable of f
/// (in VarId order). Throws ArityMismatch or BaseMismatch.
OnExpansion compose(const BoolFunc& f, const std::vector<OnExpansion>& g);

/// True iff every alpha_i lies in [f * phi_i, f + phi_i'].
bool coefficients_in_range(const BoolFunc& f, const OnExpansion& e,
                           std::uint64_t cap = kDefaultEnumerationCap);

/// Indices i with alpha_i = 0 consistent. Empty proves f = 0 inconsistent;
/// non-empty proves nothing.
std::vector<std::size_t> necessary_condition(const OnExpansion& e,
                                             std::uint64_t cap = kDefaultEnumerationCap);

/// A point where every alpha_i vanishes, if any; f vanishes there too.
std::optional<Assignment> sufficient_condition(const OnExpansion& e,
                                               std::uint64_t cap = kDefaultEnumerationCap);

/// f = 0 consistent iff prod_i (f / mu_i) = 0 is consistent, mu_i ranging over
/// the minterms of x1.
bool minterm_consistency(const BoolFunc& f, const std::vector<VarId>& x1,
                         std::uint64_t cap = kDefaultEnumerationCap);

struct SupportWitness {
  std::size_t index;  // member k (0-based)
  Assignment point;   // q in supp(phi_k) with f(q) = 0
};

/// Exact consistency test for f = 0, where f is the function the expansion
/// reconstructs: searches supp(phi_k) for a zero of f, k in member order.
std::optional<SupportWitness> consistency_via_support(
    const OnExpansion& e, std::uint64_t cap = kDefaultEnumerationCap);

/// f(1, Y) * f(0, Y); throws VariableAbsent if x does not occur in f.
BoolFunc eliminant(const BoolFunc& f, VarId x);

/// Base mapped to phi_i(X*), coefficients to alpha_i(X*).
OnExpansion conjugate_expansion(const OnExpansion& e);

}  // namespace onsat

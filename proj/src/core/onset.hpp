#pragma once

// Orthonormal (ON) sets: pairwise orthogonal, summing to 1, no zero member.

#include <optional>
#include <string>
#include <vector>

#include "boolalg.hpp"

namespace onsat {

enum class OnViolationKind { NotOrthogonal, NotNormal, NotReduced };

struct OnViolation {
  OnViolationKind kind;
  std::size_t first = 0;   // member index (0-based)
  std::size_t second = 0;  // NotOrthogonal: the other member
  friend bool operator==(const OnViolation&, const OnViolation&) = default;
};

std::string describe(const OnViolation& v);

/// Thrown when a candidate fails the ON checks; lists every violation found.
class InvalidOnSet : public Error {
 public:
  explicit InvalidOnSet(std::vector<OnViolation> violations);
  const std::vector<OnViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<OnViolation> violations_;
};

/// Validated, immutable ON set. When every member is a term the term form
/// is kept alongside, so partial assignments are available directly.
class OnSet {
 public:
  std::size_t order() const noexcept { return members_.size(); }
  const std::vector<BoolFunc>& members() const noexcept { return members_; }
  const BoolFunc& member(std::size_t i) const { return members_.at(i); }

  bool is_term_set() const noexcept { return terms_.has_value(); }
  /// Term form; throws RatioUnavailable when the set is not a term set.
  const std::vector<Term>& terms() const;

  /// Sorted union of the members' variables.
  std::vector<VarId> vars() const;

  /// Same member nodes in the same order.
  bool same_base(const OnSet& other) const noexcept;

 private:
  friend OnSet validate_on(std::vector<BoolFunc>, std::uint64_t);
  friend OnSet make_term_onset(std::vector<Term>, std::uint64_t);
  friend OnSet trusted_term_onset(std::vector<Term>);
  std::vector<BoolFunc> members_;
  std::optional<std::vector<Term>> terms_;
};

/// Every violation of the ON conditions, checked exhaustively over the
/// members' variables.
std::vector<OnViolation> check_on(const std::vector<BoolFunc>& candidate,
                                  std::uint64_t cap = kDefaultEnumerationCap);

/// Throws InvalidOnSet listing the violations, if any.
OnSet validate_on(std::vector<BoolFunc> candidate, std::uint64_t cap = kDefaultEnumerationCap);

/// Validated term set.
OnSet make_term_onset(std::vector<Term> terms, std::uint64_t cap = kDefaultEnumerationCap);

/// y1 = u1', yj = u1...u(j-1) uj', ym = u1...u(m-1). Orthogonal and normal for
/// any u; throws InvalidOnSet(NotReduced) if a member vanishes.
OnSet chain_from_elements(const std::vector<BoolFunc>& u,
                          std::uint64_t cap = kDefaultEnumerationCap);

/// A partition of {0, ..., 2^n - 1} into blocks of minterm indices.
struct MintermPartition {
  std::vector<std::vector<std::uint64_t>> blocks;
};

/// Member i is the sum of the minterms in block i. Minterm index bits follow
/// `vars`, first variable most significant. Singleton blocks give a term set.
OnSet from_minterm_partition(const MintermPartition& p, const std::vector<VarId>& vars);

/// t1 = l1', t2 = l1 l2', ..., tr = l1...l(r-1) lr', t(r+1) = l1...lr.
/// Throws DuplicateVariable.
OnSet term_chain(const std::vector<Literal>& literals);

/// Builds a term set without exhaustive checks; the caller guarantees the
/// terms form an ON set (used on solver hot paths with term_chain shapes).
OnSet trusted_term_onset(std::vector<Term> terms);

/// Sums members group-wise; grouping must partition {0, ..., m-1}.
OnSet coarsen(const OnSet& s, const std::vector<std::vector<std::size_t>>& grouping);

/// {phi1_k * phi2_l} in row-major order; throws InvalidOnSet(NotReduced) naming
/// the flat index k * m2 + l of a vanishing product.
OnSet product_onset(const OnSet& s1, const OnSet& s2,
                    std::uint64_t cap = kDefaultEnumerationCap);

/// Support of a term member: its partial assignment plus the free variables.
struct TermSupport {
  PartialAssignment fixed;
  std::vector<VarId> free;
};

TermSupport term_support(const Term& t, const std::vector<VarId>& universe);

/// Streams supp(phi) over `universe` in index order (first variable MSB).
class SupportStream {
 public:
  SupportStream(BoolFunc phi, std::vector<VarId> universe,
                std::uint64_t cap = kDefaultEnumerationCap);
  std::optional<Assignment> next();

 private:
  BoolFunc phi_;
  std::vector<VarId> universe_;
  PackedProgram program_;
  std::uint64_t total_ = 0;
  std::uint64_t base_ = 0;
  std::uint64_t pending_ = 0;  // hits left in the current block
  std::vector<std::uint64_t> words_;
  bool block_loaded_ = false;
};

}  // namespace onsat

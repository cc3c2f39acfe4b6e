#pragma once

// Boolean functions over B0 = {0,1}: expression trees with structural
// sharing, eager constant folding, evaluation, cofactoring and the
// zero-set algebra.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace onsat {

using VarId = std::uint32_t;

/// Upper bound on the number of evaluations an exhaustive operation may
/// perform before it refuses with TooManyVariables.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Throws TooManyVariables when 2^var_count exceeds cap.
void check_enumeration_cap(std::size_t var_count, std::uint64_t cap);

/// Sorted union of two sorted variable lists.
std::vector<VarId> merge_vars(std::span<const VarId> a, std::span<const VarId> b);

/// Total assignment over a declared variable set.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::span<const VarId> vars, std::span<const bool> values);

  /// Assignment of vars from the low bits of index; vars.front() takes the
  /// most significant bit.
  static Assignment from_index(std::span<const VarId> vars, std::uint64_t index);

  bool at(VarId v) const;
  bool declares(VarId v) const noexcept {
    return v < slots_.size() && slots_[v] >= 0;
  }
  void set(VarId v, bool value);
  std::vector<VarId> vars() const;
  std::size_t size() const noexcept;

  /// Value table indexed by VarId; -1 marks undeclared variables.
  std::span<const std::int8_t> slots() const noexcept { return slots_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) {
    return a.slots_ <=> b.slots_;
  }

 private:
  std::vector<std::int8_t> slots_;
};

/// Componentwise complement.
Assignment star(const Assignment& a);

/// Partial map VarId -> {0,1}; each variable at most once.
class PartialAssignment {
 public:
  using Entry = std::pair<VarId, bool>;

  PartialAssignment() = default;
  /// Throws ConflictingAssignment if a variable repeats.
  explicit PartialAssignment(std::vector<Entry> entries);

  /// Throws ConflictingAssignment if v is already assigned.
  void assign(VarId v, bool value);
  std::optional<bool> lookup(VarId v) const;
  bool contains(VarId v) const { return lookup(v).has_value(); }

  /// Disjoint union; throws ConflictingAssignment on overlap.
  PartialAssignment extended(const PartialAssignment& other) const;

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by VarId
};

struct Literal {
  VarId var = 0;
  bool positive = true;

  Literal negated() const { return {var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

enum class Op : std::uint8_t { Const, Var, Not, And, Or, Xor };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Const;
  bool value = false;  // Const only
  VarId var = 0;       // Var only
  std::vector<NodePtr> kids;
  // Sorted variables reachable from this node; shared between nodes with equal support.
  std::shared_ptr<const std::vector<VarId>> support;
};

/// Immutable Boolean function. Copies share structure.
class BoolFunc {
 public:
  BoolFunc();  // constant 0

  static BoolFunc constant(bool value);
  static BoolFunc variable(VarId v);
  static BoolFunc literal(Literal l);

  static BoolFunc conjunction(std::vector<BoolFunc> fs);
  static BoolFunc disjunction(std::vector<BoolFunc> fs);
  static BoolFunc exclusive(std::vector<BoolFunc> fs);
  static BoolFunc negation(const BoolFunc& f);

  const Node& node() const noexcept { return *node_; }
  const NodePtr& ptr() const noexcept { return node_; }
  std::span<const VarId> vars() const noexcept { return *node_->support; }

  bool is_constant() const noexcept { return node_->op == Op::Const; }
  std::optional<bool> constant_value() const {
    if (is_constant()) return node_->value;
    return std::nullopt;
  }
  /// Literal view of a Var or Not(Var) node.
  std::optional<Literal> as_literal() const;

  bool same_node(const BoolFunc& other) const noexcept {
    return node_ == other.node_;
  }

 private:
  explicit BoolFunc(NodePtr node) : node_(std::move(node)) {}
  friend BoolFunc make_func(NodePtr);
  NodePtr node_;
};

BoolFunc operator&(const BoolFunc& a, const BoolFunc& b);
BoolFunc operator|(const BoolFunc& a, const BoolFunc& b);
BoolFunc operator^(const BoolFunc& a, const BoolFunc& b);
BoolFunc operator~(const BoolFunc& a);

/// Evaluates f; throws UndeclaredVariable when a misses a variable of f.
bool eval(const BoolFunc& f, const Assignment& a);

/// Evaluates 64 assignments at once. var_words is indexed by VarId; bit j of
/// each word belongs to assignment j.
std::uint64_t eval_packed(const BoolFunc& f, std::span<const std::uint64_t> var_words);

/// Postorder program for repeated packed evaluation of one function.
class PackedProgram {
 public:
  explicit PackedProgram(const BoolFunc& f);
  std::uint64_t run(std::span<const std::uint64_t> var_words) const;

 private:
  struct Instr {
    Op op;
    std::uint32_t arg;  // var id, const value, or child count
  };
  std::vector<Instr> code_;
  mutable std::vector<std::uint64_t> stack_;
};

/// Calls visit(index_block, mask) for every block of 64 consecutive
/// assignment indices over vars (first var = MSB), with var_words filled in.
/// mask has one bit per valid assignment in the block.
void for_each_packed_block(
    std::span<const VarId> vars,
    const std::function<bool(std::uint64_t base, std::uint64_t mask,
                             std::span<const std::uint64_t> words)>& visit);

/// {x over vars : f(x) = 0}. vars must cover vars(f); defaults to vars(f).
std::vector<Assignment> zero_set(const BoolFunc& f, std::span<const VarId> vars,
                                 std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Assignment> zero_set(const BoolFunc& f,
                                 std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Assignment> support_set(const BoolFunc& f, std::span<const VarId> vars,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// True iff f = 0 has a solution.
bool has_zero(const BoolFunc& f, std::uint64_t cap = kDefaultEnumerationCap);
/// True iff f and g agree on every assignment of their joint variables.
bool equivalent(const BoolFunc& f, const BoolFunc& g,
                std::uint64_t cap = kDefaultEnumerationCap);
/// f <= g pointwise.
bool implies(const BoolFunc& f, const BoolFunc& g,
             std::uint64_t cap = kDefaultEnumerationCap);
inline bool is_zero(const BoolFunc& f, std::uint64_t cap = kDefaultEnumerationCap) {
  return equivalent(f, BoolFunc::constant(false), cap);
}

/// f with the assigned variables substituted, constant-folded.
BoolFunc cofactor(const BoolFunc& f, const PartialAssignment& p);

/// Simultaneous substitution of variables by functions.
BoolFunc substitute(const BoolFunc& f, const std::map<VarId, BoolFunc>& replacement);

/// f^d(X) = f(X*)'.
BoolFunc dual(const BoolFunc& f);
/// f(X*).
BoolFunc conjugate(const BoolFunc& f);

/// Sum of (x_i xor a_i); its zero set is exactly {a}.
BoolFunc point_function(const Assignment& a);

/// Leaf-occurrence count of each variable in the expression tree.
std::map<VarId, std::size_t> occurrence_counts(const BoolFunc& f);

/// Product of literals over distinct variables.
class Term {
 public:
  Term() = default;  // constant 1
  /// Throws DuplicateVariable if a variable repeats.
  explicit Term(std::vector<Literal> literals);

  std::span<const Literal> literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }
  PartialAssignment partial_assignment() const;
  BoolFunc to_func() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::vector<Literal> literals_;  // sorted by var
};

/// Dense mapping between external names and VarIds.
class SymbolTable {
 public:
  VarId intern(const std::string& name);
  std::optional<VarId> find(const std::string& name) const;
  const std::string& name(VarId v) const { return names_.at(v); }
  std::size_t size() const noexcept { return names_.size(); }
  std::span<const std::string> names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> index_;
};

/// Human-readable rendering in the parser grammar.
std::string to_string(const BoolFunc& f, const SymbolTable* symbols = nullptr);

}  // namespace onsat

#include "boolalg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

namespace onsat {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::ConflictingAssignment: return "ConflictingAssignment";
    case ErrorCode::DuplicateVariable: return "DuplicateVariable";
    case ErrorCode::InvalidOnSet: return "InvalidOnSet";
    case ErrorCode::RatioUnavailable: return "RatioUnavailable";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::VariableAbsent: return "VariableAbsent";
    case ErrorCode::NoPureLiterals: return "NoPureLiterals";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void check_enumeration_cap(std::size_t var_count, std::uint64_t cap) {
  if (var_count >= 63 || (std::uint64_t{1} << var_count) > cap) {
    throw Error(ErrorCode::TooManyVariables,
                "exhaustive enumeration over " + std::to_string(var_count) +
                    " variables exceeds the evaluation cap of " + std::to_string(cap));
  }
}

std::vector<VarId> merge_vars(std::span<const VarId> a, std::span<const VarId> b) {
  std::vector<VarId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(std::span<const VarId> vars, std::span<const bool> values) {
  if (vars.size() != values.size()) {
    throw Error(ErrorCode::InvalidArgument, "assignment variable/value length mismatch");
  }
  for (std::size_t i = 0; i < vars.size(); ++i) set(vars[i], values[i]);
}

Assignment Assignment::from_index(std::span<const VarId> vars, std::uint64_t index) {
  Assignment a;
  const std::size_t n = vars.size();
  for (std::size_t p = 0; p < n; ++p) {
    a.set(vars[p], (index >> (n - 1 - p)) & 1U);
  }
  return a;
}

bool Assignment::at(VarId v) const {
  if (!declares(v)) {
    throw Error(ErrorCode::UndeclaredVariable,
                "assignment does not declare variable " + std::to_string(v));
  }
  return slots_[v] != 0;
}

void Assignment::set(VarId v, bool value) {
  if (v >= slots_.size()) slots_.resize(v + 1, -1);
  slots_[v] = value ? 1 : 0;
}

std::vector<VarId> Assignment::vars() const {
  std::vector<VarId> out;
  for (VarId v = 0; v < slots_.size(); ++v) {
    if (slots_[v] >= 0) out.push_back(v);
  }
  return out;
}

std::size_t Assignment::size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(), [](std::int8_t s) { return s >= 0; }));
}

Assignment star(const Assignment& a) {
  Assignment out;
  for (VarId v : a.vars()) out.set(v, !a.at(v));
  return out;
}

// ---------------------------------------------------------------------------
// PartialAssignment

PartialAssignment::PartialAssignment(std::vector<Entry> entries) {
  for (const auto& [v, b] : entries) assign(v, b);
}

void PartialAssignment::assign(VarId v, bool value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VarId key) { return e.first < key; });
  if (it != entries_.end() && it->first == v) {
    throw Error(ErrorCode::ConflictingAssignment,
                "variable " + std::to_string(v) + " assigned twice");
  }
  entries_.insert(it, {v, value});
}

std::optional<bool> PartialAssignment::lookup(VarId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VarId key) { return e.first < key; });
  if (it != entries_.end() && it->first == v) return it->second;
  return std::nullopt;
}

PartialAssignment PartialAssignment::extended(const PartialAssignment& other) const {
  PartialAssignment out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      throw Error(ErrorCode::ConflictingAssignment,
                  "partial assignments overlap on variable " + std::to_string(a->first));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Node construction with constant folding

namespace {

using Support = std::shared_ptr<const std::vector<VarId>>;

const Support& empty_support() {
  static const Support empty = std::make_shared<const std::vector<VarId>>();
  return empty;
}

const NodePtr& const_node(bool value) {
  static const NodePtr zero =
      std::make_shared<const Node>(Node{Op::Const, false, 0, {}, empty_support()});
  static const NodePtr one =
      std::make_shared<const Node>(Node{Op::Const, true, 0, {}, empty_support()});
  return value ? one : zero;
}

NodePtr var_node(VarId v) {
  return std::make_shared<const Node>(
      Node{Op::Var, false, v, {}, std::make_shared<const std::vector<VarId>>(1, v)});
}

// Reuses the widest kid's support when it already covers the others.
Support kids_support(const std::vector<NodePtr>& kids) {
  const Node* widest = kids.front().get();
  for (const auto& k : kids) {
    if (k->support->size() > widest->support->size()) widest = k.get();
  }
  const auto& w = *widest->support;
  bool covered = true;
  for (const auto& k : kids) {
    if (k.get() == widest || k->support == widest->support) continue;
    if (!std::includes(w.begin(), w.end(), k->support->begin(), k->support->end())) {
      covered = false;
      break;
    }
  }
  if (covered) return widest->support;
  if (kids.size() == 2) {
    return std::make_shared<const std::vector<VarId>>(
        merge_vars(*kids[0]->support, *kids[1]->support));
  }
  std::vector<VarId> out;
  for (const auto& k : kids) out.insert(out.end(), k->support->begin(), k->support->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return std::make_shared<const std::vector<VarId>>(std::move(out));
}

NodePtr make_not(const NodePtr& a) {
  if (a->op == Op::Const) return const_node(!a->value);
  if (a->op == Op::Not) return a->kids.front();
  return std::make_shared<const Node>(Node{Op::Not, false, 0, {a}, a->support});
}

// And/Or share folding: `absorbing` is the annihilating constant.
NodePtr make_lattice(Op op, const std::vector<NodePtr>& in) {
  const bool absorbing = (op == Op::Or);
  std::vector<NodePtr> kids;
  kids.reserve(in.size());
  for (const auto& k : in) {
    if (k->op == Op::Const) {
      if (k->value == absorbing) return const_node(absorbing);
      continue;
    }
    if (k->op == op) {
      kids.insert(kids.end(), k->kids.begin(), k->kids.end());
    } else {
      kids.push_back(k);
    }
  }
  if (kids.empty()) return const_node(!absorbing);
  if (kids.size() == 1) return kids.front();
  auto support = kids_support(kids);
  return std::make_shared<const Node>(Node{op, false, 0, std::move(kids), std::move(support)});
}

NodePtr make_xor(const std::vector<NodePtr>& in) {
  bool parity = false;
  std::vector<NodePtr> kids;
  kids.reserve(in.size());
  auto push = [&](const NodePtr& k) {
    if (k->op == Op::Const) {
      parity ^= k->value;
    } else if (k->op == Op::Not) {
      parity = !parity;
      kids.push_back(k->kids.front());
    } else {
      kids.push_back(k);
    }
  };
  for (const auto& k : in) {
    if (k->op == Op::Xor) {
      for (const auto& kk : k->kids) push(kk);
    } else {
      push(k);
    }
  }
  NodePtr body;
  if (kids.empty()) {
    body = const_node(false);
  } else if (kids.size() == 1) {
    body = kids.front();
  } else {
    auto support = kids_support(kids);
    body = std::make_shared<const Node>(
        Node{Op::Xor, false, 0, std::move(kids), std::move(support)});
  }
  return parity ? make_not(body) : body;
}

NodePtr rebuild(const Node& n, const std::vector<NodePtr>& kids) {
  switch (n.op) {
    case Op::Not: return make_not(kids.front());
    case Op::And:
    case Op::Or: return make_lattice(n.op, kids);
    case Op::Xor: return make_xor(kids);
    default: break;
  }
  throw Error(ErrorCode::Internal, "rebuild on a leaf node");
}

std::vector<NodePtr> ptrs(std::vector<BoolFunc>& fs) {
  std::vector<NodePtr> out;
  out.reserve(fs.size());
  for (auto& f : fs) out.push_back(f.ptr());
  return out;
}

bool eval_node(const Node& n, std::span<const std::int8_t> slots) {
  switch (n.op) {
    case Op::Const: return n.value;
    case Op::Var: return slots[n.var] != 0;
    case Op::Not: return !eval_node(*n.kids.front(), slots);
    case Op::And:
      for (const auto& k : n.kids) {
        if (!eval_node(*k, slots)) return false;
      }
      return true;
    case Op::Or:
      for (const auto& k : n.kids) {
        if (eval_node(*k, slots)) return true;
      }
      return false;
    case Op::Xor: {
      bool acc = false;
      for (const auto& k : n.kids) acc ^= eval_node(*k, slots);
      return acc;
    }
  }
  return false;
}

std::uint64_t eval_packed_node(const Node& n, std::span<const std::uint64_t> words) {
  switch (n.op) {
    case Op::Const: return n.value ? ~std::uint64_t{0} : 0;
    case Op::Var: return n.var < words.size() ? words[n.var] : 0;
    case Op::Not: return ~eval_packed_node(*n.kids.front(), words);
    case Op::And: {
      std::uint64_t acc = ~std::uint64_t{0};
      for (const auto& k : n.kids) acc &= eval_packed_node(*k, words);
      return acc;
    }
    case Op::Or: {
      std::uint64_t acc = 0;
      for (const auto& k : n.kids) acc |= eval_packed_node(*k, words);
      return acc;
    }
    case Op::Xor: {
      std::uint64_t acc = 0;
      for (const auto& k : n.kids) acc ^= eval_packed_node(*k, words);
      return acc;
    }
  }
  return 0;
}

}  // namespace

BoolFunc make_func(NodePtr n) { return BoolFunc(std::move(n)); }

BoolFunc::BoolFunc() : node_(const_node(false)) {}

BoolFunc BoolFunc::constant(bool value) { return BoolFunc(const_node(value)); }
BoolFunc BoolFunc::variable(VarId v) { return BoolFunc(var_node(v)); }
BoolFunc BoolFunc::literal(Literal l) {
  auto v = var_node(l.var);
  return BoolFunc(l.positive ? v : make_not(v));
}

BoolFunc BoolFunc::conjunction(std::vector<BoolFunc> fs) {
  return BoolFunc(make_lattice(Op::And, ptrs(fs)));
}
BoolFunc BoolFunc::disjunction(std::vector<BoolFunc> fs) {
  return BoolFunc(make_lattice(Op::Or, ptrs(fs)));
}
BoolFunc BoolFunc::exclusive(std::vector<BoolFunc> fs) {
  return BoolFunc(make_xor(ptrs(fs)));
}
BoolFunc BoolFunc::negation(const BoolFunc& f) { return BoolFunc(make_not(f.node_)); }

std::optional<Literal> BoolFunc::as_literal() const {
  if (node_->op == Op::Var) return Literal{node_->var, true};
  if (node_->op == Op::Not && node_->kids.front()->op == Op::Var) {
    return Literal{node_->kids.front()->var, false};
  }
  return std::nullopt;
}

BoolFunc operator&(const BoolFunc& a, const BoolFunc& b) {
  return BoolFunc::conjunction({a, b});
}
BoolFunc operator|(const BoolFunc& a, const BoolFunc& b) {
  return BoolFunc::disjunction({a, b});
}
BoolFunc operator^(const BoolFunc& a, const BoolFunc& b) {
  return BoolFunc::exclusive({a, b});
}
BoolFunc operator~(const BoolFunc& a) { return BoolFunc::negation(a); }

// ---------------------------------------------------------------------------
// Evaluation

bool eval(const BoolFunc& f, const Assignment& a) {
  for (VarId v : f.vars()) {
    if (!a.declares(v)) {
      throw Error(ErrorCode::UndeclaredVariable,
                  "assignment misses variable " + std::to_string(v) + " of the function");
    }
  }
  return eval_node(f.node(), a.slots());
}

std::uint64_t eval_packed(const BoolFunc& f, std::span<const std::uint64_t> var_words) {
  return eval_packed_node(f.node(), var_words);
}

PackedProgram::PackedProgram(const BoolFunc& f) {
  // Iterative postorder keeps deep trees off the call stack.
  std::vector<std::pair<const Node*, bool>> todo{{&f.node(), false}};
  while (!todo.empty()) {
    auto [n, expanded] = todo.back();
    todo.pop_back();
    if (n->op == Op::Const) {
      code_.push_back({Op::Const, n->value ? 1U : 0U});
    } else if (n->op == Op::Var) {
      code_.push_back({Op::Var, n->var});
    } else if (expanded) {
      code_.push_back({n->op, static_cast<std::uint32_t>(n->kids.size())});
    } else {
      todo.push_back({n, true});
      for (auto it = n->kids.rbegin(); it != n->kids.rend(); ++it) {
        todo.push_back({it->get(), false});
      }
    }
  }
}

std::uint64_t PackedProgram::run(std::span<const std::uint64_t> words) const {
  stack_.clear();
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::Const: stack_.push_back(in.arg ? ~std::uint64_t{0} : 0); break;
      case Op::Var: stack_.push_back(in.arg < words.size() ? words[in.arg] : 0); break;
      case Op::Not: stack_.back() = ~stack_.back(); break;
      case Op::And:
      case Op::Or:
      case Op::Xor: {
        const std::size_t base = stack_.size() - in.arg;
        std::uint64_t acc = stack_[base];
        for (std::size_t i = base + 1; i < stack_.size(); ++i) {
          if (in.op == Op::And) {
            acc &= stack_[i];
          } else if (in.op == Op::Or) {
            acc |= stack_[i];
          } else {
            acc ^= stack_[i];
          }
        }
        stack_.resize(base);
        stack_.push_back(acc);
        break;
      }
    }
  }
  return stack_.back();
}

void for_each_packed_block(
    std::span<const VarId> vars,
    const std::function<bool(std::uint64_t, std::uint64_t, std::span<const std::uint64_t>)>&
        visit) {
  static constexpr std::array<std::uint64_t, 6> kPatterns = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  const std::size_t n = vars.size();
  if (n >= 63) throw Error(ErrorCode::TooManyVariables, "packed enumeration limit");
  VarId max_var = 0;
  for (VarId v : vars) max_var = std::max(max_var, v);
  std::vector<std::uint64_t> words(vars.empty() ? 0 : max_var + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t bit = n - 1 - p;
    if (bit < 6) words[vars[p]] = kPatterns[bit];
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t mask = total >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
  for (std::uint64_t base = 0; base < total; base += 64) {
    for (std::size_t p = 0; p + 6 < n; ++p) {
      const std::size_t bit = n - 1 - p;
      words[vars[p]] = ((base >> bit) & 1U) ? ~std::uint64_t{0} : 0;
    }
    if (!visit(base, mask, words)) return;
  }
}

namespace {

std::vector<Assignment> collect(const BoolFunc& f, std::span<const VarId> vars,
                                std::uint64_t cap, bool want_value) {
  if (!std::includes(vars.begin(), vars.end(), f.vars().begin(), f.vars().end())) {
    throw Error(ErrorCode::UndeclaredVariable,
                "enumeration variable set does not cover the function's variables");
  }
  check_enumeration_cap(vars.size(), cap);
  std::vector<Assignment> out;
  if (vars.size() <= 6 && (vars.empty() || vars.back() < 64)) {
    static constexpr std::array<std::uint64_t, 6> kPatterns = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    const std::size_t n = vars.size();
    std::array<std::uint64_t, 64> words{};
    for (std::size_t p = 0; p < n; ++p) words[vars[p]] = kPatterns[n - 1 - p];
    const std::uint64_t mask = n == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << n)) - 1;
    std::uint64_t hits = eval_packed_node(f.node(), words);
    hits = (want_value ? hits : ~hits) & mask;
    while (hits) {
      const int j = std::countr_zero(hits);
      hits &= hits - 1;
      out.push_back(Assignment::from_index(vars, static_cast<std::uint64_t>(j)));
    }
    return out;
  }
  PackedProgram prog(f);
  for_each_packed_block(vars, [&](std::uint64_t base, std::uint64_t mask, auto words) {
    std::uint64_t hits = prog.run(words);
    if (!want_value) hits = ~hits;
    hits &= mask;
    while (hits) {
      const int j = std::countr_zero(hits);
      hits &= hits - 1;
      out.push_back(Assignment::from_index(vars, base + static_cast<std::uint64_t>(j)));
    }
    return true;
  });
  return out;
}

std::vector<VarId> sorted_unique(std::span<const VarId> vars) {
  std::vector<VarId> v(vars.begin(), vars.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Assignment> zero_set(const BoolFunc& f, std::span<const VarId> vars,
                                 std::uint64_t cap) {
  return collect(f, sorted_unique(vars), cap, false);
}

std::vector<Assignment> zero_set(const BoolFunc& f, std::uint64_t cap) {
  return collect(f, f.vars(), cap, false);
}

std::vector<Assignment> support_set(const BoolFunc& f, std::span<const VarId> vars,
                                    std::uint64_t cap) {
  return collect(f, sorted_unique(vars), cap, true);
}

bool has_zero(const BoolFunc& f, std::uint64_t cap) {
  if (auto c = f.constant_value()) return !*c;
  check_enumeration_cap(f.vars().size(), cap);
  const auto vars = f.vars();
  if (vars.size() <= 6 && vars.back() < 64) {
    // One block covers the cube; evaluate the tree in place.
    static constexpr std::array<std::uint64_t, 6> kPatterns = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    std::array<std::uint64_t, 64> words{};
    for (std::size_t p = 0; p < vars.size(); ++p) words[vars[p]] = kPatterns[p];
    const std::uint64_t mask =
        vars.size() == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << vars.size())) - 1;
    return (~eval_packed_node(f.node(), words) & mask) != 0;
  }
  PackedProgram prog(f);
  bool found = false;
  for_each_packed_block(f.vars(), [&](std::uint64_t, std::uint64_t mask, auto words) {
    found = (~prog.run(words) & mask) != 0;
    return !found;
  });
  return found;
}

bool equivalent(const BoolFunc& f, const BoolFunc& g, std::uint64_t cap) {
  if (f.same_node(g)) return true;
  return !has_zero(~(f ^ g), cap);
}

bool implies(const BoolFunc& f, const BoolFunc& g, std::uint64_t cap) {
  return !has_zero(~(f & ~g), cap);
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

template <class LeafFn>
NodePtr rewrite(const NodePtr& n, const std::vector<std::int8_t>& touched, LeafFn&& leaf,
                std::unordered_map<const Node*, NodePtr>& memo) {
  if (n->op == Op::Const) return n;
  bool hit = false;
  for (VarId v : *n->support) {
    if (v < touched.size() && touched[v]) {
      hit = true;
      break;
    }
  }
  if (!hit) return n;
  if (n->op == Op::Var) return leaf(n);
  // A node held by one parent is reached once; only shared nodes need the memo.
  const bool shared = n.use_count() > 1;
  if (shared) {
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
  }
  std::vector<NodePtr> kids;
  kids.reserve(n->kids.size());
  for (const auto& k : n->kids) kids.push_back(rewrite(k, touched, leaf, memo));
  NodePtr out = rebuild(*n, kids);
  if (shared) memo.emplace(n.get(), out);
  return out;
}

}  // namespace

BoolFunc cofactor(const BoolFunc& f, const PartialAssignment& p) {
  if (p.empty() || f.is_constant()) return f;
  std::vector<std::int8_t> value;
  for (const auto& [v, b] : p.entries()) {
    if (v >= value.size()) value.resize(v + 1, -1);
    value[v] = b ? 1 : 0;
  }
  std::vector<std::int8_t> touched(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) touched[i] = value[i] >= 0;
  std::unordered_map<const Node*, NodePtr> memo;
  return make_func(rewrite(
      f.ptr(), touched, [&](const NodePtr& x) { return const_node(value[x->var] != 0); }, memo));
}

BoolFunc substitute(const BoolFunc& f, const std::map<VarId, BoolFunc>& replacement) {
  if (replacement.empty() || f.is_constant()) return f;
  std::vector<std::int8_t> touched(replacement.rbegin()->first + 1, 0);
  for (const auto& [v, g] : replacement) touched[v] = 1;
  std::unordered_map<const Node*, NodePtr> memo;
  return make_func(rewrite(
      f.ptr(), touched, [&](const NodePtr& x) { return replacement.at(x->var).ptr(); }, memo));
}

BoolFunc conjugate(const BoolFunc& f) {
  if (f.is_constant()) return f;
  std::vector<std::int8_t> touched(f.vars().back() + 1, 1);
  std::unordered_map<const Node*, NodePtr> memo;
  std::vector<NodePtr> flipped(touched.size());
  return make_func(rewrite(
      f.ptr(), touched,
      [&](const NodePtr& x) {
        auto& slot = flipped[x->var];
        if (!slot) slot = make_not(x);
        return slot;
      },
      memo));
}

BoolFunc dual(const BoolFunc& f) { return ~conjugate(f); }

BoolFunc point_function(const Assignment& a) {
  std::vector<BoolFunc> terms;
  for (VarId v : a.vars()) {
    terms.push_back(BoolFunc::variable(v) ^ BoolFunc::constant(a.at(v)));
  }
  return BoolFunc::disjunction(std::move(terms));
}

std::map<VarId, std::size_t> occurrence_counts(const BoolFunc& f) {
  std::unordered_map<const Node*, std::map<VarId, std::size_t>> memo;
  std::function<const std::map<VarId, std::size_t>&(const Node&)> count =
      [&](const Node& n) -> const std::map<VarId, std::size_t>& {
    if (auto it = memo.find(&n); it != memo.end()) return it->second;
    std::map<VarId, std::size_t> acc;
    if (n.op == Op::Var) {
      acc[n.var] = 1;
    } else {
      for (const auto& k : n.kids) {
        for (const auto& [v, c] : count(*k)) acc[v] += c;
      }
    }
    return memo.emplace(&n, std::move(acc)).first->second;
  };
  return count(f.node());
}

// ---------------------------------------------------------------------------
// Term, SymbolTable

Term::Term(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    if (literals_[i].var == literals_[i - 1].var) {
      throw Error(ErrorCode::DuplicateVariable,
                  "term repeats variable " + std::to_string(literals_[i].var));
    }
  }
}

PartialAssignment Term::partial_assignment() const {
  PartialAssignment p;
  for (const Literal& l : literals_) p.assign(l.var, l.positive);
  return p;
}

BoolFunc Term::to_func() const {
  std::vector<BoolFunc> lits;
  lits.reserve(literals_.size());
  for (const Literal& l : literals_) lits.push_back(BoolFunc::literal(l));
  return BoolFunc::conjunction(std::move(lits));
}

VarId SymbolTable::intern(const std::string& name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const auto id = static_cast<VarId>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

std::optional<VarId> SymbolTable::find(const std::string& name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

namespace {

void render(const Node& n, const SymbolTable* symbols, std::ostringstream& os, int parent_prec) {
  // Precedence: | 1, ^ 2, & 3, ~ 4.
  auto name = [&](VarId v) {
    if (symbols && v < symbols->size()) return symbols->name(v);
    return "x" + std::to_string(v);
  };
  switch (n.op) {
    case Op::Const: os << (n.value ? '1' : '0'); return;
    case Op::Var: os << name(n.var); return;
    case Op::Not:
      os << '~';
      render(*n.kids.front(), symbols, os, 4);
      return;
    default: break;
  }
  const int prec = n.op == Op::Or ? 1 : n.op == Op::Xor ? 2 : 3;
  const char* sep = n.op == Op::Or ? " | " : n.op == Op::Xor ? " ^ " : " & ";
  if (prec < parent_prec) os << '(';
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    if (i) os << sep;
    render(*n.kids[i], symbols, os, prec + 1);
  }
  if (prec < parent_prec) os << ')';
}

}  // namespace

std::string to_string(const BoolFunc& f, const SymbolTable* symbols) {
  std::ostringstream os;
  render(f.node(), symbols, os, 0);
  return os.str();
}

}  // namespace onsat

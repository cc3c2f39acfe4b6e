#include "onset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

namespace onsat {

std::string describe(const OnViolation& v) {
  switch (v.kind) {
    case OnViolationKind::NotOrthogonal:
      return "NotOrthogonal(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
    case OnViolationKind::NotNormal: return "NotNormal";
    case OnViolationKind::NotReduced: return "NotReduced(" + std::to_string(v.first) + ")";
  }
  return "?";
}

namespace {

std::string join_violations(const std::vector<OnViolation>& vs) {
  std::string out = "not an ON set:";
  for (const auto& v : vs) out += " " + describe(v);
  return out;
}

}  // namespace

InvalidOnSet::InvalidOnSet(std::vector<OnViolation> violations)
    : Error(ErrorCode::InvalidOnSet, join_violations(violations)),
      violations_(std::move(violations)) {}

const std::vector<Term>& OnSet::terms() const {
  if (!terms_) throw Error(ErrorCode::RatioUnavailable, "ON set members are not all terms");
  return *terms_;
}

std::vector<VarId> OnSet::vars() const {
  std::vector<VarId> out;
  for (const auto& m : members_) out = merge_vars(out, m.vars());
  return out;
}

bool OnSet::same_base(const OnSet& other) const noexcept {
  if (members_.size() != other.members_.size()) return false;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!members_[i].same_node(other.members_[i])) return false;
  }
  return true;
}

std::vector<OnViolation> check_on(const std::vector<BoolFunc>& candidate, std::uint64_t cap) {
  std::vector<VarId> vars;
  for (const auto& f : candidate) vars = merge_vars(vars, f.vars());
  check_enumeration_cap(vars.size(), cap);

  const std::size_t m = candidate.size();
  std::vector<PackedProgram> progs;
  progs.reserve(m);
  for (const auto& f : candidate) progs.emplace_back(f);

  std::vector<char> nonzero(m, 0);
  std::set<std::pair<std::size_t, std::size_t>> overlaps;
  bool normal = true;
  std::vector<std::uint64_t> values(m);
  for_each_packed_block(vars, [&](std::uint64_t, std::uint64_t mask, auto words) {
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < m; ++i) {
      values[i] = progs[i].run(words) & mask;
      if (values[i]) nonzero[i] = 1;
      covered |= values[i];
    }
    if (covered != mask) normal = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!values[i]) continue;
      for (std::size_t j = i + 1; j < m; ++j) {
        if (values[i] & values[j]) overlaps.emplace(i, j);
      }
    }
    return true;
  });

  std::vector<OnViolation> out;
  for (const auto& [i, j] : overlaps) out.push_back({OnViolationKind::NotOrthogonal, i, j});
  if (!normal || m == 0) out.push_back({OnViolationKind::NotNormal, 0, 0});
  for (std::size_t i = 0; i < m; ++i) {
    if (!nonzero[i]) out.push_back({OnViolationKind::NotReduced, i, 0});
  }
  return out;
}

OnSet validate_on(std::vector<BoolFunc> candidate, std::uint64_t cap) {
  auto violations = check_on(candidate, cap);
  if (!violations.empty()) throw InvalidOnSet(std::move(violations));
  OnSet s;
  s.members_ = std::move(candidate);
  return s;
}

OnSet make_term_onset(std::vector<Term> terms, std::uint64_t cap) {
  std::vector<BoolFunc> members;
  members.reserve(terms.size());
  for (const auto& t : terms) members.push_back(t.to_func());
  OnSet s = validate_on(std::move(members), cap);
  s.terms_ = std::move(terms);
  return s;
}

OnSet trusted_term_onset(std::vector<Term> terms) {
  OnSet s;
  s.members_.reserve(terms.size());
  for (const auto& t : terms) s.members_.push_back(t.to_func());
  s.terms_ = std::move(terms);
  return s;
}

OnSet chain_from_elements(const std::vector<BoolFunc>& u, std::uint64_t cap) {
  if (u.empty()) {
    throw Error(ErrorCode::InvalidArgument, "chain needs at least one element (order >= 2)");
  }
  std::vector<BoolFunc> members;
  BoolFunc prefix = BoolFunc::constant(true);
  for (const auto& uj : u) {
    members.push_back(prefix & ~uj);
    prefix = prefix & uj;
  }
  members.push_back(prefix);

  std::vector<OnViolation> vanished;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (is_zero(members[i], cap)) vanished.push_back({OnViolationKind::NotReduced, i, 0});
  }
  if (!vanished.empty()) throw InvalidOnSet(std::move(vanished));
  return validate_on(std::move(members), cap);
}

OnSet from_minterm_partition(const MintermPartition& p, const std::vector<VarId>& vars) {
  const std::size_t n = vars.size();
  if (n >= 63) throw Error(ErrorCode::TooManyVariables, "minterm partition too wide");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> seen(total, 0);
  for (const auto& block : p.blocks) {
    if (block.empty()) throw Error(ErrorCode::InvalidArgument, "empty partition block");
    for (std::uint64_t idx : block) {
      if (idx >= total) {
        throw Error(ErrorCode::InvalidArgument,
                    "minterm index " + std::to_string(idx) + " out of range");
      }
      if (seen[idx]) {
        throw Error(ErrorCode::InvalidArgument,
                    "minterm index " + std::to_string(idx) + " in two blocks");
      }
      seen[idx] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorCode::InvalidArgument, "partition does not cover every minterm");
  }

  auto minterm = [&](std::uint64_t idx) {
    std::vector<Literal> lits;
    for (std::size_t pos = 0; pos < n; ++pos) {
      lits.push_back({vars[pos], ((idx >> (n - 1 - pos)) & 1U) != 0});
    }
    return Term(std::move(lits));
  };

  const bool singletons =
      std::all_of(p.blocks.begin(), p.blocks.end(), [](const auto& b) { return b.size() == 1; });
  if (singletons) {
    std::vector<Term> terms;
    for (const auto& b : p.blocks) terms.push_back(minterm(b.front()));
    return trusted_term_onset(std::move(terms));
  }
  if (p.blocks.size() == 1) {
    // The full cover is the empty term.
    return trusted_term_onset({Term{}});
  }
  std::vector<BoolFunc> members;
  for (const auto& block : p.blocks) {
    std::vector<BoolFunc> sum;
    for (std::uint64_t idx : block) sum.push_back(minterm(idx).to_func());
    members.push_back(BoolFunc::disjunction(std::move(sum)));
  }
  return validate_on(std::move(members));
}

OnSet term_chain(const std::vector<Literal>& literals) {
  if (literals.empty()) throw Error(ErrorCode::InvalidArgument, "term chain needs r >= 1");
  std::vector<Term> terms;
  terms.reserve(literals.size() + 1);
  std::vector<Literal> prefix;
  for (const auto& l : literals) {
    auto t = prefix;
    t.push_back(l.negated());
    terms.emplace_back(std::move(t));  // throws DuplicateVariable
    prefix.push_back(l);
  }
  terms.emplace_back(std::move(prefix));
  return trusted_term_onset(std::move(terms));
}

OnSet coarsen(const OnSet& s, const std::vector<std::vector<std::size_t>>& grouping) {
  std::vector<char> seen(s.order(), 0);
  for (const auto& g : grouping) {
    if (g.empty()) throw Error(ErrorCode::InvalidArgument, "empty group");
    for (std::size_t i : g) {
      if (i >= s.order() || seen[i]) {
        throw Error(ErrorCode::InvalidArgument, "grouping is not a partition of the members");
      }
      seen[i] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorCode::InvalidArgument, "grouping does not cover every member");
  }
  const bool keep_terms =
      s.is_term_set() &&
      std::all_of(grouping.begin(), grouping.end(), [](const auto& g) { return g.size() == 1; });
  if (keep_terms) {
    std::vector<Term> terms;
    for (const auto& g : grouping) terms.push_back(s.terms()[g.front()]);
    return trusted_term_onset(std::move(terms));
  }
  std::vector<BoolFunc> members;
  for (const auto& g : grouping) {
    std::vector<BoolFunc> sum;
    for (std::size_t i : g) sum.push_back(s.member(i));
    members.push_back(BoolFunc::disjunction(std::move(sum)));
  }
  return validate_on(std::move(members));
}

OnSet product_onset(const OnSet& s1, const OnSet& s2, std::uint64_t cap) {
  std::vector<BoolFunc> members;
  std::vector<OnViolation> vanished;
  for (std::size_t k = 0; k < s1.order(); ++k) {
    for (std::size_t l = 0; l < s2.order(); ++l) {
      BoolFunc prod = s1.member(k) & s2.member(l);
      if (is_zero(prod, cap)) {
        vanished.push_back({OnViolationKind::NotReduced, k * s2.order() + l, 0});
      }
      members.push_back(std::move(prod));
    }
  }
  if (!vanished.empty()) throw InvalidOnSet(std::move(vanished));

  if (s1.is_term_set() && s2.is_term_set()) {
    // Non-vanishing products of terms are terms: shared variables agree.
    std::vector<Term> terms;
    for (const auto& a : s1.terms()) {
      for (const auto& b : s2.terms()) {
        std::vector<Literal> lits(a.literals().begin(), a.literals().end());
        for (const auto& l : b.literals()) {
          if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
        }
        terms.emplace_back(std::move(lits));
      }
    }
    return trusted_term_onset(std::move(terms));
  }
  return validate_on(std::move(members), cap);
}

TermSupport term_support(const Term& t, const std::vector<VarId>& universe) {
  TermSupport out{t.partial_assignment(), {}};
  for (VarId v : universe) {
    if (!out.fixed.contains(v)) out.free.push_back(v);
  }
  return out;
}

SupportStream::SupportStream(BoolFunc phi, std::vector<VarId> universe, std::uint64_t cap)
    : phi_(std::move(phi)), universe_(std::move(universe)), program_(phi_) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  if (!std::includes(universe_.begin(), universe_.end(), phi_.vars().begin(),
                     phi_.vars().end())) {
    throw Error(ErrorCode::UndeclaredVariable, "universe does not cover the member's variables");
  }
  check_enumeration_cap(universe_.size(), cap);
  total_ = std::uint64_t{1} << universe_.size();
}

std::optional<Assignment> SupportStream::next() {
  static constexpr std::array<std::uint64_t, 6> kPatterns = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  const std::size_t n = universe_.size();
  while (true) {
    if (block_loaded_ && pending_) {
      const int j = std::countr_zero(pending_);
      pending_ &= pending_ - 1;
      return Assignment::from_index(universe_, base_ + static_cast<std::uint64_t>(j));
    }
    if (block_loaded_) base_ += 64;
    if (base_ >= total_) return std::nullopt;
    if (words_.empty()) {
      VarId max_var = 0;
      for (VarId v : universe_) max_var = std::max(max_var, v);
      words_.assign(n ? max_var + 1 : 0, 0);
    }
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t bit = n - 1 - p;
      words_[universe_[p]] =
          bit < 6 ? kPatterns[bit] : (((base_ >> bit) & 1U) ? ~std::uint64_t{0} : 0);
    }
    const std::uint64_t mask =
        total_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total_) - 1;
    pending_ = program_.run(words_) & mask;
    block_loaded_ = true;
  }
}

}  // namespace onsat

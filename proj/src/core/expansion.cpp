#include "expansion.hpp"

#include <algorithm>
#include <array>

namespace onsat {

BoolFunc OnExpansion::reconstruct() const {
  std::vector<BoolFunc> sum;
  sum.reserve(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    sum.push_back(coefficients[i] & base.member(i));
  }
  return BoolFunc::disjunction(std::move(sum));
}

OnExpansion expand(const BoolFunc& f, const OnSet& s, CoefficientChoice choice) {
  if (choice == CoefficientChoice::Default) {
    choice = s.is_term_set() ? CoefficientChoice::Ratio : CoefficientChoice::Canonical;
  }
  OnExpansion e{s, {}, {f.vars().begin(), f.vars().end()}};
  e.coefficients.reserve(s.order());
  if (choice == CoefficientChoice::Ratio) {
    if (!s.is_term_set()) {
      throw Error(ErrorCode::RatioUnavailable,
                  "ratio coefficients need an ON set of terms or minterms");
    }
    for (const Term& t : s.terms()) e.coefficients.push_back(cofactor(f, t.partial_assignment()));
  } else {
    for (const BoolFunc& phi : s.members()) e.coefficients.push_back(f & phi);
  }
  return e;
}

namespace {

void require_same_base(const OnExpansion& a, const OnExpansion& b) {
  if (!a.base.same_base(b.base)) {
    throw Error(ErrorCode::BaseMismatch, "expansions are over different ON sets");
  }
}

}  // namespace

OnExpansion combine(const OnExpansion& a, const OnExpansion& b, CombineOp op) {
  require_same_base(a, b);
  OnExpansion out{a.base, {}, merge_vars(a.vars, b.vars)};
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    const auto& x = a.coefficients[i];
    const auto& y = b.coefficients[i];
    switch (op) {
      case CombineOp::And: out.coefficients.push_back(x & y); break;
      case CombineOp::Or: out.coefficients.push_back(x | y); break;
      case CombineOp::Xor: out.coefficients.push_back(x ^ y); break;
    }
  }
  return out;
}

OnExpansion negate(const OnExpansion& e) {
  OnExpansion out{e.base, {}, e.vars};
  for (const auto& c : e.coefficients) out.coefficients.push_back(~c);
  return out;
}

OnExpansion compose(const BoolFunc& f, const std::vector<OnExpansion>& g) {
  const auto fvars = f.vars();
  if (g.empty() || g.size() != fvars.size()) {
    throw Error(ErrorCode::ArityMismatch,
                "composition needs one expansion per variable of f (" +
                    std::to_string(fvars.size()) + "), got " + std::to_string(g.size()));
  }
  for (const auto& gi : g) require_same_base(g.front(), gi);
  const OnSet& base = g.front().base;
  OnExpansion out{base, {}, {}};
  for (const auto& gi : g) out.vars = merge_vars(out.vars, gi.vars);
  for (std::size_t j = 0; j < base.order(); ++j) {
    std::map<VarId, BoolFunc> repl;
    for (std::size_t i = 0; i < fvars.size(); ++i) repl.emplace(fvars[i], g[i].coefficients[j]);
    out.coefficients.push_back(substitute(f, repl));
  }
  return out;
}

bool coefficients_in_range(const BoolFunc& f, const OnExpansion& e, std::uint64_t cap) {
  for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
    const auto& phi = e.base.member(i);
    const auto& alpha = e.coefficients[i];
    if (!implies(f & phi, alpha, cap) || !implies(alpha, f | ~phi, cap)) return false;
  }
  return true;
}

std::vector<std::size_t> necessary_condition(const OnExpansion& e, std::uint64_t cap) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
    if (has_zero(e.coefficients[i], cap)) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<VarId> expansion_vars(const OnExpansion& e) {
  std::vector<VarId> u = merge_vars(e.base.vars(), e.vars);
  for (const auto& c : e.coefficients) u = merge_vars(u, c.vars());
  return u;
}

}  // namespace

std::optional<Assignment> sufficient_condition(const OnExpansion& e, std::uint64_t cap) {
  const auto universe = expansion_vars(e);
  const auto zeros = zero_set(BoolFunc::disjunction(e.coefficients), universe, cap);
  if (zeros.empty()) return std::nullopt;
  return zeros.front();
}

bool minterm_consistency(const BoolFunc& f, const std::vector<VarId>& x1, std::uint64_t cap) {
  std::vector<VarId> split(x1);
  std::sort(split.begin(), split.end());
  split.erase(std::unique(split.begin(), split.end()), split.end());
  for (VarId v : split) {
    if (!std::binary_search(f.vars().begin(), f.vars().end(), v)) {
      throw Error(ErrorCode::VariableAbsent,
                  "minterm variable " + std::to_string(v) + " does not occur in f");
    }
  }
  check_enumeration_cap(split.size(), cap);
  const std::size_t rest = f.vars().size() - split.size();
  check_enumeration_cap(rest, cap);

  const auto& fv = f.vars();
  if (!fv.empty() && fv.size() <= 6 && fv.back() < 64) {
    // Truth table of f, bit p of the index is fv[p]. Folding the two halves
    // of each split variable with AND leaves the product of the cofactors.
    static constexpr std::array<std::uint64_t, 6> kPatterns = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    std::array<std::uint64_t, 64> words{};
    for (std::size_t p = 0; p < fv.size(); ++p) words[fv[p]] = kPatterns[p];
    std::uint64_t table = eval_packed(f, words);
    for (VarId v : split) {
      const auto p = static_cast<std::size_t>(
          std::lower_bound(fv.begin(), fv.end(), v) - fv.begin());
      const unsigned shift = 1U << p;
      const std::uint64_t folded = (table & ~kPatterns[p]) & ((table & kPatterns[p]) >> shift);
      table = folded | (folded << shift);
    }
    const std::uint64_t mask =
        fv.size() == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << fv.size())) - 1;
    return (~table & mask) != 0;
  }

  // f(mu, Y) for every minterm mu of the split variables, one variable at a
  // time so each level cofactors the smaller functions of the level above.
  std::vector<BoolFunc> product{f};
  for (VarId v : split) {
    std::vector<BoolFunc> next;
    next.reserve(product.size() * 2);
    for (const auto& g : product) {
      next.push_back(cofactor(g, PartialAssignment({{v, false}})));
      next.push_back(cofactor(g, PartialAssignment({{v, true}})));
    }
    product = std::move(next);
  }
  return has_zero(BoolFunc::conjunction(std::move(product)), cap);
}

std::optional<SupportWitness> consistency_via_support(const OnExpansion& e, std::uint64_t cap) {
  const auto universe = expansion_vars(e);
  check_enumeration_cap(universe.size(), cap);
  for (std::size_t k = 0; k < e.base.order(); ++k) {
    // On supp(phi_k) the expanded function equals alpha_k.
    SupportStream stream(e.base.member(k) & ~e.coefficients[k], universe, cap);
    if (auto q = stream.next()) return SupportWitness{k, *q};
  }
  return std::nullopt;
}

BoolFunc eliminant(const BoolFunc& f, VarId x) {
  if (!std::binary_search(f.vars().begin(), f.vars().end(), x)) {
    throw Error(ErrorCode::VariableAbsent,
                "variable " + std::to_string(x) + " does not occur in f");
  }
  return cofactor(f, PartialAssignment({{x, true}})) & cofactor(f, PartialAssignment({{x, false}}));
}

OnExpansion conjugate_expansion(const OnExpansion& e) {
  OnSet base = [&] {
    if (e.base.is_term_set()) {
      std::vector<Term> flipped;
      for (const Term& t : e.base.terms()) {
        std::vector<Literal> lits;
        for (const Literal& l : t.literals()) lits.push_back(l.negated());
        flipped.emplace_back(std::move(lits));
      }
      return trusted_term_onset(std::move(flipped));
    }
    std::vector<BoolFunc> members;
    for (const auto& m : e.base.members()) members.push_back(conjugate(m));
    return validate_on(std::move(members));
  }();
  OnExpansion out{std::move(base), {}, e.vars};
  for (const auto& c : e.coefficients) out.coefficients.push_back(conjugate(c));
  return out;
}

}  // namespace onsat

#include "identities.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "expansion.hpp"

namespace onsat {

void IdentityReport::record(const std::string& name, bool ok, const std::string& detail) {
  auto it = std::find_if(results_.begin(), results_.end(),
                         [&](const IdentityResult& r) { return r.name == name; });
  if (it == results_.end()) {
    results_.push_back({name, 0, 0, {}});
    it = std::prev(results_.end());
  }
  ++it->checked;
  if (!ok) {
    if (it->failed == 0) it->first_failure = detail;
    ++it->failed;
  }
}

void IdentityReport::merge(const IdentityReport& other) {
  for (const auto& r : other.results_) {
    auto it = std::find_if(results_.begin(), results_.end(),
                           [&](const IdentityResult& x) { return x.name == r.name; });
    if (it == results_.end()) {
      results_.push_back(r);
      continue;
    }
    if (it->failed == 0 && r.failed != 0) it->first_failure = r.first_failure;
    it->checked += r.checked;
    it->failed += r.failed;
  }
}

void IdentityReport::fill_missing_details(const std::string& detail) {
  for (auto& r : results_) {
    if (r.failed != 0 && r.first_failure.empty()) r.first_failure = detail;
  }
}

bool IdentityReport::passed() const noexcept {
  return std::all_of(results_.begin(), results_.end(),
                     [](const IdentityResult& r) { return r.failed == 0; });
}

namespace {

// Shannon tree over vars[depth..]; equal halves collapse, constants fold.
BoolFunc table_tree(const std::vector<VarId>& vars, std::size_t depth, std::uint64_t table,
                    std::map<std::pair<std::size_t, std::uint64_t>, BoolFunc>& memo) {
  const std::size_t rest = vars.size() - depth;
  const std::uint64_t width = std::uint64_t{1} << rest;
  const std::uint64_t full = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  table &= full;
  if (table == 0) return BoolFunc::constant(false);
  if (table == full) return BoolFunc::constant(true);
  if (auto it = memo.find({depth, table}); it != memo.end()) return it->second;
  // Low half of the index range has vars[depth] = 0.
  const std::uint64_t half = width / 2;
  const std::uint64_t lo_mask = (std::uint64_t{1} << half) - 1;
  const BoolFunc f0 = table_tree(vars, depth + 1, table & lo_mask, memo);
  const BoolFunc f1 = table_tree(vars, depth + 1, (table >> half) & lo_mask, memo);
  const BoolFunc x = BoolFunc::variable(vars[depth]);
  BoolFunc out;
  if ((table & lo_mask) == ((table >> half) & lo_mask)) {
    out = f0;
  } else if (f0.constant_value() == false && f1.constant_value() == true) {
    out = x;
  } else if (f0.constant_value() == true && f1.constant_value() == false) {
    out = ~x;
  } else {
    out = (x & f1) | (~x & f0);
  }
  memo.emplace(std::make_pair(depth, table), out);
  return out;
}

}  // namespace

BoolFunc from_truth_table(const std::vector<VarId>& vars, std::uint64_t table) {
  if (vars.size() > 6) throw Error(ErrorCode::TooManyVariables, "truth tables cover at most 6 variables");
  std::map<std::pair<std::size_t, std::uint64_t>, BoolFunc> memo;
  return table_tree(vars, 0, table, memo);
}

namespace {

using IndexSet = std::set<std::uint64_t>;

std::uint64_t index_of(const Assignment& a, const std::vector<VarId>& vars) {
  std::uint64_t idx = 0;
  for (VarId v : vars) idx = (idx << 1) | static_cast<std::uint64_t>(a.at(v));
  return idx;
}

std::string describe_case(const IdentityCase& c) {
  std::string s = "f = " + to_string(c.f) + ", g = " + to_string(c.g) + ", base = {";
  for (std::size_t i = 0; i < c.base.order(); ++i) {
    s += (i ? "; " : "") + to_string(c.base.member(i));
  }
  return s + "}";
}

void check_expansion_algebra(const IdentityCase& c, CoefficientChoice choice,
                             const std::string& tag, IdentityReport& r, const std::string& ctx) {
  const OnExpansion ef = expand(c.f, c.base, choice);
  const OnExpansion eg = expand(c.g, c.base, choice);
  r.record("reconstruction/" + tag, equivalent(ef.reconstruct(), c.f), ctx);
  r.record("range/" + tag, coefficients_in_range(c.f, ef), ctx);
  r.record("sum/" + tag, equivalent(combine(ef, eg, CombineOp::Or).reconstruct(), c.f | c.g), ctx);
  r.record("product/" + tag,
           equivalent(combine(ef, eg, CombineOp::And).reconstruct(), c.f & c.g), ctx);
  r.record("xor/" + tag, equivalent(combine(ef, eg, CombineOp::Xor).reconstruct(), c.f ^ c.g),
           ctx);
  r.record("complement/" + tag, equivalent(negate(ef).reconstruct(), ~c.f), ctx);

  // Outer functions h(u, v) over two fresh variables, composed with (f, g).
  const VarId u = 0;
  const VarId v = 1;
  const BoolFunc hu = BoolFunc::variable(u);
  const BoolFunc hv = BoolFunc::variable(v);
  bool compose_ok = true;
  for (const BoolFunc& h : {hu & hv, hu | ~hv, hu ^ hv, ~(hu & ~hv) ^ hu}) {
    if (h.vars().size() != 2) continue;
    const BoolFunc expected = substitute(h, {{u, c.f}, {v, c.g}});
    compose_ok = compose_ok && equivalent(compose(h, {ef, eg}).reconstruct(), expected);
  }
  r.record("composition/" + tag, compose_ok, ctx);

  const OnExpansion conj = conjugate_expansion(ef);
  bool conj_ok = equivalent(conj.reconstruct(), conjugate(c.f));
  for (std::size_t i = 0; i < conj.base.order(); ++i) {
    conj_ok = conj_ok && equivalent(conj.base.member(i), conjugate(c.base.member(i)));
  }
  r.record("conjugate-expansion/" + tag, conj_ok, ctx);

  const bool f_has_zero = has_zero(c.f);
  if (necessary_condition(ef).empty()) r.record("necessary/" + tag, !f_has_zero, ctx);
  if (auto p = sufficient_condition(ef)) r.record("sufficient/" + tag, !eval(c.f, *p), ctx);

  const auto w = consistency_via_support(ef);
  bool support_ok = w.has_value() == f_has_zero;
  if (w) support_ok = support_ok && !eval(c.f, w->point) && eval(c.base.member(w->index), w->point);
  r.record("support-consistency/" + tag, support_ok, ctx);

  // f = 1 consistent iff the complemented expansion is consistent for 0.
  const auto w1 = consistency_via_support(negate(ef));
  r.record("one-value/" + tag, w1.has_value() == has_zero(~c.f), ctx);
}

}  // namespace

IdentityReport check_identities(const IdentityCase& c) {
  IdentityReport r;
  const std::string ctx;  // filled in only when something fails
  check_expansion_algebra(c, CoefficientChoice::Canonical, "canonical", r, ctx);
  if (c.base.is_term_set()) check_expansion_algebra(c, CoefficientChoice::Ratio, "ratio", r, ctx);

  const auto vars = c.f.vars();

  bool dual_ok = true;
  const BoolFunc d = dual(c.f);
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << vars.size()); ++idx) {
    const Assignment a = Assignment::from_index(vars, idx);
    dual_ok = dual_ok && eval(d, a) == !eval(c.f, star(a));
  }
  r.record("dual", dual_ok, ctx);

  std::vector<Assignment> starred;
  for (const auto& a : zero_set(c.f, vars)) starred.push_back(star(a));
  std::sort(starred.begin(), starred.end());
  auto conj_zeros = zero_set(conjugate(c.f), vars);
  std::sort(conj_zeros.begin(), conj_zeros.end());
  r.record("star", conj_zeros == starred, ctx);

  for (VarId x : vars) {
    std::vector<VarId> rest;
    for (VarId v : vars) {
      if (v != x) rest.push_back(v);
    }
    IndexSet projected;
    for (const auto& a : zero_set(c.f, vars)) projected.insert(index_of(a, rest));
    IndexSet elim;
    for (const auto& a : zero_set(eliminant(c.f, x), rest)) elim.insert(index_of(a, rest));
    r.record("eliminant-projection", projected == elim, ctx);
  }

  const bool f_has_zero = has_zero(c.f);
  const std::size_t subsets = std::size_t{1} << std::min<std::size_t>(vars.size(), 4);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::vector<VarId> x1;
    for (std::size_t i = 0; i < vars.size() && i < 4; ++i) {
      if ((mask >> i) & 1U) x1.push_back(vars[i]);
    }
    r.record("minterm-theorem", minterm_consistency(c.f, x1) == f_has_zero, ctx);
  }
  if (!r.passed()) r.fill_missing_details(describe_case(c));
  return r;
}

namespace {

class CaseGenerator {
 public:
  CaseGenerator(std::size_t n, std::uint64_t seed) : n_(n), rng_(seed) {
    for (std::size_t i = 0; i < n; ++i) vars_.push_back(static_cast<VarId>(i));
  }

  IdentityCase next() {
    BoolFunc f = random_function();
    BoolFunc g = random_function();
    return {std::move(f), std::move(g), random_base()};
  }

 private:
  std::size_t pick(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

  std::vector<VarId> random_vars(std::size_t count) {
    auto v = vars_;
    std::shuffle(v.begin(), v.end(), rng_);
    v.resize(count);
    return v;
  }

  BoolFunc random_tree(std::size_t depth) {
    if (depth == 0 || pick(4) == 0) {
      if (pick(10) == 0) return BoolFunc::constant(pick(2) == 1);
      return BoolFunc::literal({vars_[pick(n_)], pick(2) == 1});
    }
    BoolFunc a = random_tree(depth - 1);
    BoolFunc b = random_tree(depth - 1);
    switch (pick(4)) {
      case 0: return a & b;
      case 1: return a | b;
      case 2: return a ^ b;
      default: return ~(a & b);
    }
  }

  BoolFunc random_function() {
    if (pick(2) == 0) return random_tree(4);
    const auto width = std::size_t{1} << n_;
    std::uint64_t table = rng_();
    if (width < 64) table &= (std::uint64_t{1} << width) - 1;
    return from_truth_table(vars_, table);
  }

  OnSet random_base() {
    switch (pick(3)) {
      case 0: {
        std::vector<Literal> lits;
        for (VarId v : random_vars(1 + pick(n_))) lits.push_back({v, pick(2) == 1});
        return term_chain(lits);
      }
      case 1: {
        const std::size_t m = std::min<std::size_t>(n_, 3);
        const auto vars = random_vars(m);
        const std::size_t blocks = 1 + pick(std::min<std::size_t>(std::size_t{1} << m, 4));
        MintermPartition p;
        p.blocks.resize(blocks);
        std::vector<std::uint64_t> idx(std::size_t{1} << m);
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng_);
        for (std::size_t i = 0; i < idx.size(); ++i) {
          p.blocks[i < blocks ? i : pick(blocks)].push_back(idx[i]);
        }
        for (auto& b : p.blocks) std::sort(b.begin(), b.end());
        return from_minterm_partition(p, vars);
      }
      default: {
        for (int attempt = 0; attempt < 8; ++attempt) {
          std::vector<BoolFunc> u;
          const std::size_t m = 1 + pick(3);
          for (std::size_t i = 0; i < m; ++i) u.push_back(random_tree(2));
          try {
            return chain_from_elements(u);
          } catch (const InvalidOnSet&) {
          }
        }
        return term_chain({{vars_[pick(n_)], true}});
      }
    }
  }

  std::size_t n_;
  std::mt19937_64 rng_;
  std::vector<VarId> vars_;
};

std::vector<OnSet> base_family(std::size_t n) {
  std::vector<VarId> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(static_cast<VarId>(i));
  std::vector<OnSet> out;

  std::vector<Literal> pos;
  std::vector<Literal> mixed;
  for (std::size_t i = 0; i < n; ++i) {
    pos.push_back({vars[i], true});
    mixed.push_back({vars[n - 1 - i], i % 2 == 1});
  }
  out.push_back(term_chain(pos));
  out.push_back(term_chain(mixed));

  MintermPartition singletons;
  MintermPartition parity{{{}, {}}};
  MintermPartition whole{{{}}};
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    singletons.blocks.push_back({i});
    parity.blocks[std::popcount(i) % 2].push_back(i);
    whole.blocks[0].push_back(i);
  }
  out.push_back(from_minterm_partition(singletons, vars));
  out.push_back(from_minterm_partition(parity, vars));
  out.push_back(from_minterm_partition(whole, vars));
  return out;
}

}  // namespace

IdentityReport random_identities(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 1 || n > 6) throw Error(ErrorCode::InvalidArgument, "identity suite needs 1 <= n <= 6");
  CaseGenerator gen(n, seed);
  IdentityReport report;
  for (std::size_t t = 0; t < trials; ++t) report.merge(check_identities(gen.next()));
  return report;
}

IdentityReport exhaustive_identities(std::size_t n) {
  if (n < 1 || n > 4) {
    throw Error(ErrorCode::InvalidArgument, "exhaustive identity sweep needs 1 <= n <= 4");
  }
  std::vector<VarId> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(static_cast<VarId>(i));
  const auto family = base_family(n);
  const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << n);
  IdentityReport report;
  for (std::uint64_t t = 0; t < functions; ++t) {
    const std::uint64_t partner = (t * 0x9E3779B97F4A7C15ULL + 1) & (functions - 1);
    IdentityCase c{from_truth_table(vars, t), from_truth_table(vars, partner),
                   family[t % family.size()]};
    report.merge(check_identities(c));
  }
  return report;
}

}  // namespace onsat

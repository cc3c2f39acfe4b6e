#include <doctest.h>

#include <random>

#include "core/onset.hpp"
#include "support/bridge.hpp"
#include "support/oracle.hpp"

using namespace onsat;

namespace {

BoolFunc var(VarId v) { return BoolFunc::variable(v); }

std::vector<VarId> first_vars(int n) {
  std::vector<VarId> v;
  for (int i = 0; i < n; ++i) v.push_back(static_cast<VarId>(i));
  return v;
}

bool has_kind(const std::vector<OnViolation>& vs, OnViolationKind k) {
  for (const auto& v : vs) {
    if (v.kind == k) return true;
  }
  return false;
}

// Each point of {0,1}^n lies in the support of exactly one member.
bool supports_partition(const OnSet& s, int n) {
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    const auto a = Assignment::from_index(first_vars(n), i);
    int hits = 0;
    for (const auto& m : s.members()) hits += eval(m, a) ? 1 : 0;
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate_on") {
  const BoolFunc x = var(0);
  const BoolFunc y = var(1);
  CHECK(validate_on({x, ~x}).order() == 2);
  CHECK(validate_on({x, ~x & y, ~x & ~y}).order() == 3);

  const auto v = check_on({x, y});
  CHECK(has_kind(v, OnViolationKind::NotOrthogonal));
  CHECK(has_kind(v, OnViolationKind::NotNormal));
  try {
    validate_on({x, y});
    FAIL("expected InvalidOnSet");
  } catch (const InvalidOnSet& e) {
    CHECK(e.code() == ErrorCode::InvalidOnSet);
    CHECK(e.violations().size() == v.size());
  }
  CHECK(has_kind(check_on({x, ~x, BoolFunc::constant(false)}), OnViolationKind::NotReduced));
}

TEST_CASE("chain_from_elements") {
  const BoolFunc x = var(0);
  const BoolFunc y = var(1);
  const OnSet one = chain_from_elements({x});
  REQUIRE(one.order() == 2);
  CHECK(equivalent(one.member(0), ~x));
  CHECK(equivalent(one.member(1), x));

  const OnSet two = chain_from_elements({x, y});
  REQUIRE(two.order() == 3);
  CHECK(equivalent(two.member(0), ~x));
  CHECK(equivalent(two.member(1), x & ~y));
  CHECK(equivalent(two.member(2), x & y));
  CHECK(check_on(two.members()).empty());

  try {
    chain_from_elements({x, x});
    FAIL("expected NotReduced");
  } catch (const InvalidOnSet& e) {
    CHECK(has_kind(e.violations(), OnViolationKind::NotReduced));
  }

  // Any elements give an orthogonal, normal chain; only reducedness can fail.
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<BoolFunc> u;
    for (int i = 0; i < 3; ++i) u.push_back(bridge::func(oracle::random_expr(rng, n, 3), n));
    std::vector<BoolFunc> members{~u[0], u[0] & ~u[1], u[0] & u[1] & ~u[2], u[0] & u[1] & u[2]};
    for (const auto& viol : check_on(members)) CHECK(viol.kind == OnViolationKind::NotReduced);
  }
}

TEST_CASE("from_minterm_partition") {
  const auto single = from_minterm_partition({{{0}, {1}}}, first_vars(1));
  CHECK(single.is_term_set());
  CHECK(equivalent(single.member(0), ~var(0)));
  CHECK(equivalent(single.member(1), var(0)));

  const auto halves = from_minterm_partition({{{0, 1, 2, 3}, {4, 5, 6, 7}}}, first_vars(3));
  CHECK(equivalent(halves.member(0), ~var(0)));
  CHECK(equivalent(halves.member(1), var(0)));

  const auto whole = from_minterm_partition({{{0, 1, 2, 3, 4, 5, 6, 7}}}, first_vars(3));
  REQUIRE(whole.order() == 1);
  CHECK(whole.member(0).constant_value() == true);

  CHECK_THROWS_AS(from_minterm_partition({{{0, 1}, {1, 2, 3}}}, first_vars(2)), Error);
  CHECK_THROWS_AS(from_minterm_partition({{{0}, {1}}}, first_vars(2)), Error);
}

TEST_CASE("term_chain") {
  const OnSet t = term_chain({{0, true}});
  CHECK(equivalent(t.member(0), ~var(0)));
  CHECK(equivalent(t.member(1), var(0)));

  const OnSet pure = term_chain({{0, true}, {2, false}});
  REQUIRE(pure.order() == 3);
  CHECK(equivalent(pure.member(0), ~var(0)));
  CHECK(equivalent(pure.member(1), var(0) & var(2)));
  CHECK(equivalent(pure.member(2), var(0) & ~var(2)));

  const OnSet three = term_chain({{0, true}, {1, true}, {2, true}});
  CHECK(three.order() == 4);
  CHECK(check_on(three.members()).empty());
  CHECK(supports_partition(three, 3));
  // Partial assignments of distinct members contradict each other.
  const auto terms = three.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      bool clash = false;
      const auto qi = terms[i].partial_assignment();
      const auto qj = terms[j].partial_assignment();
      for (const auto& [v, b] : qi.entries()) {
        auto other = qj.lookup(v);
        clash = clash || (other && *other != b);
      }
      CHECK(clash);
    }
  }
  CHECK_THROWS_AS(term_chain({{0, true}, {0, false}}), Error);
}

TEST_CASE("coarsen") {
  const BoolFunc x = var(0);
  const BoolFunc y = var(1);
  const OnSet s = validate_on({x, ~x & y, ~x & ~y});
  const OnSet all = coarsen(s, {{0, 1, 2}});
  REQUIRE(all.order() == 1);
  CHECK(equivalent(all.member(0), BoolFunc::constant(true)));
  const OnSet same = coarsen(s, {{0}, {1}, {2}});
  for (std::size_t i = 0; i < 3; ++i) CHECK(equivalent(same.member(i), s.member(i)));
  const OnSet two = coarsen(s, {{0}, {1, 2}});
  CHECK(equivalent(two.member(0), x));
  CHECK(equivalent(two.member(1), ~x));
}

TEST_CASE("product_onset") {
  const BoolFunc x = var(0);
  const BoolFunc y = var(1);
  const BoolFunc z = var(2);
  const OnSet p = product_onset(validate_on({x, ~x}), validate_on({y, ~y}));
  REQUIRE(p.order() == 4);
  CHECK(equivalent(p.member(0), x & y));
  CHECK(equivalent(p.member(3), ~x & ~y));
  try {
    product_onset(validate_on({x, ~x}), validate_on({x, ~x}));
    FAIL("expected NotReduced");
  } catch (const InvalidOnSet& e) {
    CHECK(has_kind(e.violations(), OnViolationKind::NotReduced));
  }
  const OnSet six = product_onset(validate_on({x, ~x}), validate_on({y, ~y & z, ~y & ~z}));
  CHECK(six.order() == 6);
  CHECK(check_on(six.members()).empty());
  CHECK(supports_partition(six, 3));
}

TEST_CASE("support streams") {
  const auto vars = first_vars(3);
  const Term t({{0, true}, {1, false}});
  const TermSupport ts = term_support(t, vars);
  CHECK(ts.fixed == t.partial_assignment());
  CHECK(ts.free == std::vector<VarId>{2});

  SupportStream s(t.to_func(), vars);
  std::vector<std::uint64_t> seen;
  while (auto a = s.next()) seen.push_back((a->at(0) << 2) | (a->at(1) << 1) | a->at(2));
  CHECK(seen == std::vector<std::uint64_t>{0b100, 0b101});

  SupportStream s2(~var(0) & var(1), vars);
  seen.clear();
  while (auto a = s2.next()) seen.push_back((a->at(0) << 2) | (a->at(1) << 1) | a->at(2));
  CHECK(seen == std::vector<std::uint64_t>{0b010, 0b011});

  SupportStream all(BoolFunc::constant(true), vars);
  int count = 0;
  while (all.next()) ++count;
  CHECK(count == 8);
}

TEST_CASE("every constructor yields a partition of the cube") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<Literal> lits;
    for (int i = 0; i < n; ++i) {
      if (rng() % 2) lits.push_back({static_cast<VarId>(i), rng() % 2 == 1});
    }
    if (lits.empty()) lits.push_back({0, true});
    const OnSet chain = term_chain(lits);
    CHECK(check_on(chain.members()).empty());
    CHECK(supports_partition(chain, n));
  }
}

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "core/boolalg.hpp"
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

std::set<std::uint64_t> zero_indices(const BoolFunc& f, int n) {
  std::set<std::uint64_t> out;
  const auto vars = first_vars(n);
  for (const auto& a : zero_set(f, vars)) {
    std::uint64_t idx = 0;
    for (VarId v : vars) idx = (idx << 1) | static_cast<std::uint64_t>(a.at(v));
    out.insert(idx);
  }
  return out;
}

std::set<std::uint64_t> oracle_zeros(const oracle::Expr& e, int n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    if (!oracle::eval(e, i, n)) out.insert(i);
  }
  return out;
}

}  // namespace

TEST_CASE("eval basics") {
  const BoolFunc x = var(0);
  const BoolFunc y = var(1);
  Assignment a = Assignment::from_index(first_vars(2), 0b10);
  CHECK(eval(x ^ x, a) == false);
  CHECK(eval(x & ~y, a) == true);
  CHECK(a.at(0) == true);
  CHECK(a.at(1) == false);
}

TEST_CASE("eval rejects an undeclared variable") {
  Assignment a = Assignment::from_index(first_vars(1), 1);
  try {
    (void)eval(var(0) & var(3), a);
    FAIL("expected UndeclaredVariable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UndeclaredVariable);
  }
  CHECK_THROWS_AS((void)a.at(2), Error);
}

TEST_CASE("point function vanishes exactly at its point") {
  for (int n = 1; n <= 6; ++n) {
    const auto vars = first_vars(n);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); idx += (n > 4 ? 7 : 1)) {
      const Assignment a = Assignment::from_index(vars, idx);
      const auto zs = zero_set(point_function(a), vars);
      REQUIRE(zs.size() == 1);
      CHECK(zs.front() == a);
      CHECK(eval(point_function(a), a) == false);
    }
  }
}

TEST_CASE("zero sets") {
  SUBCASE("constant zero over two variables") {
    CHECK(zero_set(BoolFunc::constant(false), first_vars(2)).size() == 4);
  }
  SUBCASE("tautology and contradiction") {
    CHECK(zero_set(var(0) | ~var(0), first_vars(1)).empty());
    CHECK(zero_set(var(0) & ~var(0), first_vars(1)).size() == 2);
  }
  SUBCASE("random functions match the oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
      const auto e = oracle::random_expr(rng, 4, 5);
      CHECK(zero_indices(bridge::func(e, 4), 4) == oracle_zeros(e, 4));
    }
  }
  SUBCASE("zero set and support partition the cube") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const auto f = bridge::func(oracle::random_expr(rng, n, 5), n);
      const auto vars = first_vars(n);
      auto z = zero_set(f, vars);
      auto s = support_set(f, vars);
      CHECK(z.size() + s.size() == (std::size_t{1} << n));
      std::vector<Assignment> both;
      std::sort(z.begin(), z.end());
      std::sort(s.begin(), s.end());
      std::set_intersection(z.begin(), z.end(), s.begin(), s.end(), std::back_inserter(both));
      CHECK(both.empty());
    }
  }
  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(zero_set(var(0), first_vars(10), 16), Error);
  }
}

TEST_CASE("zero-set algebra") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto fe = oracle::random_expr(rng, n, 4);
    const auto ge = oracle::random_expr(rng, n, 4);
    const auto f = bridge::func(fe, n);
    const auto g = bridge::func(ge, n);
    const auto vf = zero_indices(f, n);
    const auto vg = zero_indices(g, n);
    std::set<std::uint64_t> meet;
    std::set<std::uint64_t> join;
    std::set_intersection(vf.begin(), vf.end(), vg.begin(), vg.end(),
                          std::inserter(meet, meet.end()));
    std::set_union(vf.begin(), vf.end(), vg.begin(), vg.end(), std::inserter(join, join.end()));
    CHECK(zero_indices(f | g, n) == meet);
    CHECK(zero_indices(f & g, n) == join);
    std::set<std::uint64_t> supp;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      if (!vf.count(i)) supp.insert(i);
    }
    CHECK(zero_indices(~f, n) == supp);
    const bool vg_in_vf = std::includes(vf.begin(), vf.end(), vg.begin(), vg.end());
    CHECK(implies(f, g) == vg_in_vf);
  }
}

TEST_CASE("dual and star") {
  const BoolFunc x = var(0);
  const BoolFunc y = var(1);
  CHECK(equivalent(dual(x), x));
  CHECK(equivalent(dual(x & y), x | y));

  const auto vars = first_vars(3);
  const Assignment a = Assignment::from_index(first_vars(2), 0b00);
  CHECK(star(a) == Assignment::from_index(first_vars(2), 0b11));
  CHECK(star(Assignment::from_index(vars, 0b101)) == Assignment::from_index(vars, 0b010));
  for (std::uint64_t i = 0; i < 8; ++i) {
    const auto p = Assignment::from_index(vars, i);
    CHECK(star(star(p)) == p);
  }

  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const auto f = bridge::func(oracle::random_expr(rng, 4, 5), 4);
    CHECK(equivalent(dual(dual(f)), f));
    std::set<Assignment> starred;
    for (const auto& z : zero_set(f, first_vars(4))) starred.insert(star(z));
    const auto supp = support_set(dual(f), first_vars(4));
    CHECK(std::set<Assignment>(supp.begin(), supp.end()) == starred);
  }
}

TEST_CASE("cofactor") {
  const BoolFunc x1 = var(0);
  const BoolFunc x2 = var(1);
  const BoolFunc x3 = var(2);
  const BoolFunc f = (x1 & ~x2) | x3;
  CHECK(cofactor(f, {}).same_node(f));
  PartialAssignment p;
  p.assign(0, true);
  p.assign(1, false);
  const BoolFunc r = cofactor(f, p);
  REQUIRE(r.is_constant());
  CHECK(*r.constant_value() == true);

  PartialAssignment q;
  q.assign(0, true);
  CHECK_THROWS_AS(q.assign(0, false), Error);

  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    const auto e = oracle::random_expr(rng, 5, 5);
    const auto g = bridge::func(e, 5);
    const VarId a = static_cast<VarId>(rng() % 5);
    const VarId b = static_cast<VarId>((a + 1 + rng() % 4) % 5);
    PartialAssignment pa;
    pa.assign(a, rng() % 2 == 1);
    pa.assign(b, rng() % 2 == 1);
    const BoolFunc c = cofactor(g, pa);
    for (VarId v : c.vars()) CHECK((v != a && v != b));
    for (std::uint64_t i = 0; i < 32; ++i) {
      const auto full = Assignment::from_index(first_vars(5), i);
      if (full.at(a) != *pa.lookup(a) || full.at(b) != *pa.lookup(b)) continue;
      CHECK(eval(c, full) == oracle::eval(e, i, 5));
    }
    // Cofactoring in two steps agrees with one step.
    PartialAssignment p1;
    p1.assign(a, *pa.lookup(a));
    PartialAssignment p2;
    p2.assign(b, *pa.lookup(b));
    CHECK(equivalent(cofactor(cofactor(g, p1), p2), c));
  }
}

TEST_CASE("partial assignments extend disjointly and associatively") {
  PartialAssignment a({{0, true}});
  PartialAssignment b({{1, false}});
  PartialAssignment c({{2, true}});
  CHECK(a.extended(b).extended(c) == a.extended(b.extended(c)));
  CHECK_THROWS_AS(a.extended(a), Error);
}

TEST_CASE("terms") {
  Term t({{0, true}, {1, false}});
  const auto q = t.partial_assignment();
  CHECK(q.size() == 2);
  CHECK(*q.lookup(0) == true);
  CHECK(*q.lookup(1) == false);
  CHECK(Term{}.to_func().constant_value() == true);
  CHECK_THROWS_AS(Term({{0, true}, {0, false}}), Error);
}

TEST_CASE("constant folding") {
  const BoolFunc x = var(0);
  CHECK((x & BoolFunc::constant(false)).constant_value() == false);
  CHECK((x | BoolFunc::constant(true)).constant_value() == true);
  CHECK((x ^ BoolFunc::constant(false)).same_node(x));
  CHECK((~~x).same_node(x));
}

TEST_CASE("packed and scalar evaluation agree") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 50; ++t) {
    const int n = 7;
    const auto e = oracle::random_expr(rng, n, 6);
    const auto f = bridge::func(e, n);
    const PackedProgram prog(f);
    const auto vars = first_vars(n);
    for_each_packed_block(vars, [&](std::uint64_t base, std::uint64_t mask, auto words) {
      const std::uint64_t got = prog.run(words) & mask;
      for (int j = 0; j < 64; ++j) {
        if (!((mask >> j) & 1U)) continue;
        CHECK((((got >> j) & 1U) != 0) == oracle::eval(e, base + j, n));
      }
      return true;
    });
  }
}

#include <doctest.h>

#include <random>

#include "core/cnf.hpp"
#include "support/bridge.hpp"
#include "support/oracle.hpp"

using namespace onsat;

namespace {

using Rows = std::vector<std::vector<int>>;

const Rows kExample1 = {
    {1, -3, 6}, {2, -3, 5, 6, 7}, {1, 2, -3, -5, -6, 8}, {-2, 4, -7, -8}, {-4, 8}};
const Rows kExample2 = {
    {1, -2, 5, -8}, {-1, 3, -4, 7}, {-3, 4, 8}, {2, -5, 6, -7}, {5, -6, -7}};

Rows rows(const CnfSet& c) {
  Rows out;
  for (const auto& cl : c.clauses) {
    std::vector<int> r;
    for (const auto& l : cl.literals) {
      const int v = static_cast<int>(l.var) + 1;
      r.push_back(l.positive ? v : -v);
    }
    out.push_back(r);
  }
  return out;
}

Rows norm(const Rows& r) { return oracle::normalized(r); }
Rows norm(const CnfSet& c) { return oracle::normalized(rows(c)); }

std::vector<int> signed_lits(const PartialAssignment& p) {
  std::vector<int> out;
  for (const auto& [v, b] : p.entries()) {
    const int x = static_cast<int>(v) + 1;
    out.push_back(b ? x : -x);
  }
  return out;
}

SolverConfig cfg_for(SolveMode mode, std::size_t n0, std::size_t depth, std::size_t workers) {
  SolverConfig cfg;
  cfg.mode = mode;
  cfg.n0 = n0;
  cfg.split_depth = depth;
  cfg.workers = workers;
  return cfg;
}

}  // namespace

TEST_CASE("parse_dimacs") {
  const auto one = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  CHECK(one.warnings.empty());
  CHECK(one.cnf.num_vars == 2);
  CHECK(rows(one.cnf) == Rows{{1, -2}});

  const auto spanning = parse_dimacs("c comment\np cnf 3 2\n1 2\n 3 0 -1\n0\n%\n0\n");
  CHECK(rows(spanning.cnf) == Rows{{1, 2, 3}, {-1}});
  CHECK(spanning.warnings.empty());

  const auto dup = parse_dimacs("p cnf 2 2\n1 1 2 0\n1 -1 0\n");
  CHECK(rows(dup.cnf) == Rows{{1, 2}});
  CHECK_FALSE(dup.warnings.empty());  // the dropped tautology

  const auto wider = parse_dimacs("p cnf 2 1\n1 5 0\n");
  CHECK(wider.cnf.num_vars == 5);
  CHECK_FALSE(wider.warnings.empty());

  const auto unterminated = parse_dimacs("p cnf 2 1\n1 2\n");
  CHECK(rows(unterminated.cnf) == Rows{{1, 2}});
  CHECK_FALSE(unterminated.warnings.empty());
}

TEST_CASE("parse_dimacs: header mismatches and errors") {
  const auto loose = parse_dimacs("p cnf 3 5\n1 2 0\n");
  CHECK(loose.warnings.size() == 1);
  try {
    parse_dimacs("p cnf 3 5\n1 2 0\n", true);
    FAIL("expected HeaderMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HeaderMismatch);
  }
  try {
    parse_dimacs("p cnf 2 1\n1 x 0\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n"), Error);
}

TEST_CASE("emit and parse round-trip") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto cnf = make_cnf(static_cast<std::size_t>(n),
                              oracle::random_cnf(rng, n, static_cast<int>(rng() % 20), 4));
    const auto back = parse_dimacs(emit_dimacs(cnf), true);
    CHECK(back.warnings.empty());
    CHECK(back.cnf == cnf);
  }
}

TEST_CASE("make_cnf") {
  CHECK_THROWS_AS(make_cnf(2, {{3}}), Error);
  CHECK_THROWS_AS(make_cnf(2, {{0}}), Error);
  try {
    make_cnf(2, {{1, -1}});
    FAIL("expected DuplicateVariable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateVariable);
  }
}

TEST_CASE("example 1: pure literals and the reduced set") {
  const auto c = make_cnf(8, kExample1);
  CHECK(c.clauses[0].literals ==
        std::vector<Literal>{{0, true}, {2, false}, {5, true}});
  CHECK(find_pure_literals(c) == std::vector<Literal>{{0, true}, {2, false}});

  const OnSet chain = pure_literal_chain(c);
  REQUIRE(chain.order() == 3);
  const auto x1 = BoolFunc::variable(0);
  const auto x3 = BoolFunc::variable(2);
  CHECK(equivalent(chain.member(0), ~x1));
  CHECK(equivalent(chain.member(1), x1 & x3));
  CHECK(equivalent(chain.member(2), x1 & ~x3));

  const auto reduced = assign_and_reduce(c, PartialAssignment({{0, true}, {2, false}}));
  REQUIRE(reduced.has_value());
  CHECK(norm(*reduced) == norm(Rows{{-2, 4, -7, -8}, {-4, 8}}));

  const auto oracle_set = oracle::solve_cnf(kExample1, 8);
  for (std::uint64_t m = 0; m < 16; ++m) {
    oracle::Point p{1, 0, 0, 0, 0, 0, 0, 0};
    for (int j = 0; j < 4; ++j) p[4 + j] = static_cast<std::int8_t>((m >> j) & 1U);
    CHECK(oracle_set.count(p) == 1);
  }

  const auto out = solve_sat(c, cfg_for(SolveMode::Decide, 2, 2, 1));
  CHECK(out.status == SolveStatus::Sat);
  REQUIRE(out.solutions.size() == 1);
  CHECK(out.solutions[0].values == std::vector<std::int8_t>{1, 0, 0, 0, -1, -1, -1, -1});
}

TEST_CASE("example 2: decomposition and two pure rounds") {
  const auto c = make_cnf(8, kExample2);
  CHECK(find_pure_literals(c).empty());
  CHECK_THROWS_AS(pure_literal_chain(c), Error);

  const OnSet t = term_chain({{0, false}, {1, false}});  // {x1, x1'x2, x1'x2'}
  const auto parts = decompose(c, t);
  REQUIRE(parts.size() == 3);
  REQUIRE(parts[0].has_value());
  REQUIRE(parts[1].has_value());
  REQUIRE(parts[2].has_value());
  CHECK(norm(*parts[0]) == norm(Rows{{3, -4, 7}, {-3, 4, 8}, {2, -5, 6, -7}, {5, -6, -7}}));
  CHECK(norm(*parts[1]) == norm(Rows{{5, -8}, {-3, 4, 8}, {5, -6, -7}}));
  CHECK(norm(*parts[2]) == norm(Rows{{-3, 4, 8}, {-5, 6, -7}, {5, -6, -7}}));

  const auto r1 = assign_pure_round(*parts[0]);
  REQUIRE(r1.cnf.has_value());
  CHECK(r1.assigned == PartialAssignment({{1, true}, {7, true}}));
  CHECK(norm(*r1.cnf) == norm(Rows{{3, -4, 7}, {5, -6, -7}}));

  const auto r2 = assign_pure_round(*r1.cnf);
  REQUIRE(r2.cnf.has_value());
  CHECK(r2.assigned == PartialAssignment({{2, true}, {4, true}}));
  CHECK(r2.cnf->clauses.empty());

  CHECK(solve_sat(c, cfg_for(SolveMode::Decide, 2, 2, 1)).status == SolveStatus::Sat);
}

TEST_CASE("unit propagation") {
  const auto c = make_cnf(3, {{-1}, {1, 2}, {-2, 3}});
  const auto r = propagate_units(c);
  REQUIRE(r.cnf.has_value());
  CHECK(r.cnf->clauses.empty());
  CHECK(r.assigned == PartialAssignment({{0, false}, {1, true}, {2, true}}));

  CHECK_FALSE(propagate_units(make_cnf(1, {{1}, {-1}})).cnf.has_value());
  CHECK_FALSE(propagate_units(make_cnf(2, {{1}, {-1, 2}, {-2}})).cnf.has_value());
}

TEST_CASE("assign_and_reduce matches a direct reduction") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 8);
    auto clauses = oracle::random_cnf(rng, n, 1 + static_cast<int>(rng() % 12), 4);
    const auto cnf = make_cnf(static_cast<std::size_t>(n), clauses);
    PartialAssignment p;
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) p.assign(static_cast<VarId>(v), rng() % 2 == 1);
    }
    const auto got = assign_and_reduce(cnf, p);
    const bool ok = oracle::reduce_cnf(clauses, signed_lits(p));
    CHECK(got.has_value() == ok);
    if (got && ok) CHECK(norm(*got) == norm(clauses));
  }
}

TEST_CASE("choose_split picks majority polarity") {
  const auto c = make_cnf(3, {{-1, 2}, {-1, 3}, {1, -2}, {-1, -3}});
  SolverConfig cfg;
  cfg.split_depth = 1;
  const OnSet t = choose_split(c, cfg);
  REQUIRE(t.order() == 2);
  CHECK(equivalent(t.member(1), ~BoolFunc::variable(0)));

  const auto tie = make_cnf(2, {{1, 2}, {-1, -2}});
  CHECK(equivalent(choose_split(tie, cfg).member(1), BoolFunc::variable(0)));
}

TEST_CASE("the clause encoding solves to the same set") {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto clauses = oracle::random_cnf(rng, n, 1 + static_cast<int>(rng() % 10), 3);
    const auto sys = to_bool_system(make_cnf(static_cast<std::size_t>(n), clauses));
    CHECK(bridge::points(brute_force(sys).solutions) == oracle::solve_cnf(clauses, n));
  }
}

TEST_CASE("solve_sat agrees with the oracle") {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int m = static_cast<int>(rng() % (4 * n + 1));
    const auto clauses = oracle::random_cnf(rng, n, m, 3);
    const auto cnf = make_cnf(static_cast<std::size_t>(n), clauses);
    const auto expected = oracle::solve_cnf(clauses, n);
    const std::size_t n0 = 1 + rng() % 6;
    const std::size_t depth = 1 + rng() % 3;
    for (std::size_t workers : {std::size_t{1}, std::size_t{3}}) {
      const auto out = solve_sat(cnf, cfg_for(SolveMode::Enumerate, n0, depth, workers));
      const auto got = bridge::points(out.solutions);
      CHECK(got == expected);
      CHECK(bridge::point_count(out.solutions) == got.size());
    }
    const auto d = solve_sat(cnf, cfg_for(SolveMode::Decide, n0, depth, 2));
    CHECK((d.status == SolveStatus::Sat) == !expected.empty());
    for (const auto& p : bridge::points(d.solutions)) CHECK(expected.count(p) == 1);
  }
}

TEST_CASE("assigning pure literals keeps satisfiability") {
  std::mt19937_64 rng(65);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    auto clauses = oracle::random_cnf(rng, n, 1 + static_cast<int>(rng() % (3 * n)), 3);
    const auto cnf = make_cnf(static_cast<std::size_t>(n), clauses);
    const auto pures = find_pure_literals(cnf);
    if (pures.empty()) continue;
    std::vector<int> lits;
    for (const auto& l : pures) lits.push_back(l.positive ? int(l.var) + 1 : -(int(l.var) + 1));
    const bool before = !oracle::solve_cnf(clauses, n).empty();
    REQUIRE(oracle::reduce_cnf(clauses, lits));
    CHECK(before == !oracle::solve_cnf(clauses, n).empty());
  }
}

TEST_CASE("a one-literal split is the DPLL branch") {
  std::mt19937_64 rng(66);
  SolverConfig cfg;
  cfg.split_depth = 1;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const auto clauses = oracle::random_cnf(rng, n, 2 + static_cast<int>(rng() % (3 * n)), 3);
    const auto cnf = make_cnf(static_cast<std::size_t>(n), clauses);
    const OnSet split = choose_split(cnf, cfg);
    REQUIRE(split.order() == 2);
    const auto lit = split.terms()[1].partial_assignment().entries()[0];
    const int x = static_cast<int>(lit.first) + 1;
    const int l = lit.second ? x : -x;
    const auto parts = decompose(cnf, split);
    int i = 0;
    for (int branch : {-l, l}) {
      auto expected = clauses;
      const bool ok = oracle::reduce_cnf(expected, {branch});
      CHECK(parts[i].has_value() == ok);
      if (ok && parts[i]) CHECK(norm(*parts[i]) == norm(expected));
      ++i;
    }
  }
}

TEST_CASE("satisfies") {
  const auto c = make_cnf(2, {{1, 2}, {-1}});
  CHECK(satisfies(c, PartialAssignment({{0, false}, {1, true}})));
  CHECK_FALSE(satisfies(c, PartialAssignment({{0, true}, {1, true}})));
  CHECK_FALSE(satisfies(c, PartialAssignment({{0, false}})));
}

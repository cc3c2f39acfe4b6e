#include <doctest.h>

#include <random>

#include "core/parser.hpp"
#include "support/bridge.hpp"
#include "support/oracle.hpp"

using namespace onsat;

TEST_CASE("precedence and postfix complement") {
  SymbolTable s;
  const BoolFunc f = parse_function("a | b ^ c & ~d", s);
  const BoolFunc a = BoolFunc::variable(*s.find("a"));
  const BoolFunc b = BoolFunc::variable(*s.find("b"));
  const BoolFunc c = BoolFunc::variable(*s.find("c"));
  const BoolFunc d = BoolFunc::variable(*s.find("d"));
  CHECK(equivalent(f, a | (b ^ (c & ~d))));
  CHECK(equivalent(parse_function("(a & b)'", s), ~(a & b)));
  CHECK(equivalent(parse_function("a'' & 1 | 0", s), a));
}

TEST_CASE("parse errors name the column") {
  SymbolTable s;
  try {
    parse_function("a & & b", s);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_function("(a | b", s), Error);
  CHECK_THROWS_AS(parse_function("a $ b", s), Error);
  CHECK_THROWS_AS(parse_function("", s), Error);
}

TEST_CASE("rendered random expressions parse back to the same function") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto e = oracle::random_expr(rng, n, 6);
    const BoolFunc f = bridge::func(e, n);
    std::vector<VarId> vars;
    for (int i = 0; i < n; ++i) vars.push_back(static_cast<VarId>(i));
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      CHECK(eval(f, Assignment::from_index(vars, i)) == oracle::eval(e, i, n));
    }
    // The library's own printer round-trips too.
    auto syms = bridge::symbols(n);
    CHECK(equivalent(parse_function(to_string(f, &syms), syms), f));
  }
}

TEST_CASE("system files") {
  const auto file = parse_system_file(
      "# header comment\n"
      "vars: z, y x\n"
      "x ^ y = 1   # trailing comment\n"
      "\n"
      "y & z = 0\n");
  CHECK(file.symbols.size() == 3);
  CHECK(file.symbols.name(0) == "z");
  CHECK(file.symbols.name(2) == "x");
  CHECK(file.equations.size() == 2);

  try {
    parse_system_file("x = 1\ny = \n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_system_file("x & y\n"), Error);
}

TEST_CASE("ON set specifications") {
  SymbolTable s;
  const OnSet chain = parse_onset_spec("chain: x1, ~x3", s);
  REQUIRE(chain.is_term_set());
  CHECK(chain.order() == 3);
  const BoolFunc x1 = BoolFunc::variable(*s.find("x1"));
  const BoolFunc x3 = BoolFunc::variable(*s.find("x3"));
  CHECK(equivalent(chain.member(0), ~x1));
  CHECK(equivalent(chain.member(1), x1 & x3));
  CHECK(equivalent(chain.member(2), x1 & ~x3));

  const OnSet listed = parse_onset_spec("x1; ~x1 & x3; ~x1 & ~x3", s);
  CHECK(listed.order() == 3);
  CHECK_THROWS_AS(parse_onset_spec("x1; x3", s), InvalidOnSet);
}

#pragma once

// Reference implementations used only by tests. Nothing here calls into the
// library: expressions have their own evaluator, and solution sets come from
// plain enumeration.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Expr {
  enum Kind { Const, Var, Not, And, Or, Xor } kind = Const;
  bool value = false;
  int var = 0;
  std::vector<Expr> kids;

  static Expr constant(bool v) { return {Const, v, 0, {}}; }
  static Expr variable(int v) { return {Var, false, v, {}}; }
  static Expr negation(Expr e) { return {Not, false, 0, {std::move(e)}}; }
  static Expr binary(Kind k, Expr a, Expr b) { return {k, false, 0, {std::move(a), std::move(b)}}; }
};

/// Variable i takes bit (n-1-i) of index, so variable 0 is most significant.
inline bool eval(const Expr& e, std::uint64_t index, int n) {
  switch (e.kind) {
    case Expr::Const: return e.value;
    case Expr::Var: return ((index >> (n - 1 - e.var)) & 1U) != 0;
    case Expr::Not: return !eval(e.kids[0], index, n);
    case Expr::And: return eval(e.kids[0], index, n) && eval(e.kids[1], index, n);
    case Expr::Or: return eval(e.kids[0], index, n) || eval(e.kids[1], index, n);
    case Expr::Xor: return eval(e.kids[0], index, n) != eval(e.kids[1], index, n);
  }
  return false;
}

inline std::string var_name(int v) { return "v" + std::to_string(v); }

/// Fully parenthesized text in the library's expression grammar.
inline std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Const: return e.value ? "1" : "0";
    case Expr::Var: return var_name(e.var);
    case Expr::Not: return "~(" + render(e.kids[0]) + ")";
    case Expr::And: return "(" + render(e.kids[0]) + " & " + render(e.kids[1]) + ")";
    case Expr::Or: return "(" + render(e.kids[0]) + " | " + render(e.kids[1]) + ")";
    case Expr::Xor: return "(" + render(e.kids[0]) + " ^ " + render(e.kids[1]) + ")";
  }
  return "";
}

inline Expr random_expr(std::mt19937_64& rng, int n, int depth) {
  auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
  if (depth == 0 || pick(5) == 0) {
    if (pick(12) == 0) return Expr::constant(pick(2) == 1);
    Expr v = Expr::variable(pick(n));
    return pick(2) == 0 ? v : Expr::negation(v);
  }
  const int k = pick(7);
  if (k == 0) return Expr::negation(random_expr(rng, n, depth - 1));
  const Expr::Kind kind = k <= 2 ? Expr::And : k <= 4 ? Expr::Or : Expr::Xor;
  return Expr::binary(kind, random_expr(rng, n, depth - 1), random_expr(rng, n, depth - 1));
}

using Point = std::vector<std::int8_t>;

inline Point point_of(std::uint64_t index, int n) {
  Point p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::int8_t>((index >> (n - 1 - i)) & 1U);
  return p;
}

inline std::set<Point> solve_system(const std::vector<std::pair<Expr, Expr>>& eqs, int n) {
  std::set<Point> out;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    bool ok = true;
    for (const auto& [l, r] : eqs) {
      if (eval(l, idx, n) != eval(r, idx, n)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(point_of(idx, n));
  }
  return out;
}

/// Clauses use signed 1-based literals.
inline bool clause_holds(const std::vector<int>& clause, const Point& p) {
  for (int lit : clause) {
    const int v = (lit < 0 ? -lit : lit) - 1;
    if ((p[v] == 1) == (lit > 0)) return true;
  }
  return false;
}

inline std::set<Point> solve_cnf(const std::vector<std::vector<int>>& clauses, int n) {
  std::set<Point> out;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    const Point p = point_of(idx, n);
    bool ok = true;
    for (const auto& c : clauses) ok = ok && clause_holds(c, p);
    if (ok) out.insert(p);
  }
  return out;
}

/// Sets the given signed literals true: drops satisfied clauses and removes
/// false literals. Returns false when a clause becomes empty.
inline bool reduce_cnf(std::vector<std::vector<int>>& clauses, const std::vector<int>& true_lits) {
  std::vector<std::vector<int>> out;
  for (const auto& c : clauses) {
    bool sat = false;
    std::vector<int> kept;
    for (int lit : c) {
      if (std::find(true_lits.begin(), true_lits.end(), lit) != true_lits.end()) sat = true;
      else if (std::find(true_lits.begin(), true_lits.end(), -lit) == true_lits.end()) kept.push_back(lit);
    }
    if (sat) continue;
    if (kept.empty()) return false;
    out.push_back(std::move(kept));
  }
  clauses = std::move(out);
  return true;
}

/// Clauses as sorted rows in sorted order, for order-insensitive comparison.
inline std::vector<std::vector<int>> normalized(std::vector<std::vector<int>> clauses) {
  for (auto& c : clauses) std::sort(c.begin(), c.end());
  std::sort(clauses.begin(), clauses.end());
  return clauses;
}

/// Random clauses of width 1..max_width over n variables, no repeated variable.
inline std::vector<std::vector<int>> random_cnf(std::mt19937_64& rng, int n, int clauses,
                                                int max_width) {
  std::vector<std::vector<int>> out;
  for (int c = 0; c < clauses; ++c) {
    const int width = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_width));
    std::vector<int> clause;
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    for (int i = 0; i < width && i < n; ++i) clause.push_back(rng() % 2 ? vars[i] : -vars[i]);
    out.push_back(clause);
  }
  return out;
}

/// Product in GF(2)[t] / (modulus), schoolbook with reduction after each shift.
inline std::uint32_t field_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  int k = 0;
  while ((modulus >> (k + 1)) != 0) ++k;
  std::uint32_t acc = 0;
  for (int i = k - 1; i >= 0; --i) {
    acc <<= 1;
    if ((acc >> k) & 1U) acc ^= modulus;
    if ((b >> i) & 1U) acc ^= a;
  }
  return acc;
}

}  // namespace oracle

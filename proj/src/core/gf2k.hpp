#pragma once

// GF(2^k) in a polynomial basis, small k. Elements are bit vectors with the
// constant coordinate in bit 0.

#include <cstdint>
#include <string>
#include <vector>

#include "boolalg.hpp"
#include "solver.hpp"

namespace onsat {

struct FieldElement {
  std::uint32_t bits = 0;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class Gf2k {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// modulus has degree k in 1..16 and must be irreducible.
  explicit Gf2k(std::uint32_t modulus);

  unsigned degree() const noexcept { return k_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << k_; }

  /// Throws InvalidArgument when bits has degree >= k.
  FieldElement element(std::uint32_t bits) const;
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept { return {a.bits ^ b.bits}; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  FieldElement square(FieldElement a) const noexcept { return mul(a, a); }
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;
  FieldElement sqrt(FieldElement a) const noexcept;
  FieldElement inverse(FieldElement a) const;  // DivisionByZero on 0
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inverse(b)); }
  bool trace(FieldElement a) const noexcept;

 private:
  std::uint32_t modulus_;
  unsigned k_;
};

bool is_irreducible(std::uint32_t poly);

/// Roots of pT^2 + qT + r = 0, ascending. Throws NotQuadratic if p = 0.
std::vector<FieldElement> solve_quadratic(const Gf2k& f, FieldElement p, FieldElement q,
                                          FieldElement r);

/// k coordinate functions; coords[i] multiplies theta^i.
struct SymbolicElement {
  std::vector<BoolFunc> coords;

  static SymbolicElement constant(const Gf2k& f, FieldElement c);
  /// Unknown whose coordinate i is the variable first_var + i.
  static SymbolicElement unknown(const Gf2k& f, VarId first_var);

  FieldElement evaluate(const Assignment& a) const;
};

SymbolicElement add(const SymbolicElement& a, const SymbolicElement& b);
SymbolicElement mul(const Gf2k& f, const SymbolicElement& a, const SymbolicElement& b);

/// One equation `coordinate = 0` per basis coordinate of e.
BoolSystem lower_to_boolean(const SymbolicElement& e, std::size_t var_count = 0);

/// y^2 + a1 xy + a3 y + x^3 + a2 x^2 + a4 x + a6 = 0
struct WeierstrassCurve {
  FieldElement a1, a2, a3, a4, a6;
};

struct CurvePoint {
  FieldElement x, y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

enum class CurveMethod { FieldDirect, BooleanSolver };

/// Curve as a Boolean system: x coordinates are variables 0..k-1, y
/// coordinates k..2k-1.
BoolSystem curve_system(const Gf2k& f, const WeierstrassCurve& e);
/// Names x0..x(k-1), y0..y(k-1) matching curve_system.
SymbolTable curve_symbols(const Gf2k& f);

/// Affine points with the given x, by solving the quadratic in y.
std::vector<CurvePoint> points_at(const Gf2k& f, const WeierstrassCurve& e, FieldElement x);

/// Affine points, sorted. The Boolean path splits on the chain
/// {x_{k-1}, x_{k-1}' x_{k-2}, ..., x_{k-1}'...x_0'} and enumerates each branch.
std::vector<CurvePoint> enumerate_curve(const Gf2k& f, const WeierstrassCurve& e,
                                        CurveMethod method, SolverConfig cfg = {});

std::string to_hex(FieldElement a);

}  // namespace onsat

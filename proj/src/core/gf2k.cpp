#include "gf2k.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace onsat {

namespace {

unsigned poly_degree(std::uint64_t p) { return static_cast<unsigned>(std::bit_width(p)) - 1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  if (poly < 2) return false;
  const unsigned d = poly_degree(poly);
  // Trial division by every polynomial of degree 1..d/2.
  for (std::uint64_t g = 2; poly_degree(g) <= d / 2; ++g) {
    if (poly_mod(poly, g) == 0) return false;
  }
  return true;
}

Gf2k::Gf2k(std::uint32_t modulus) : modulus_(modulus), k_(0) {
  if (modulus < 2 || poly_degree(modulus) > kMaxDegree) {
    throw Error(ErrorCode::InvalidArgument, "modulus degree must be between 1 and 16");
  }
  if (!is_irreducible(modulus)) {
    throw Error(ErrorCode::InvalidArgument, "modulus " + to_hex({modulus}) + " is reducible");
  }
  k_ = poly_degree(modulus);
}

FieldElement Gf2k::element(std::uint32_t bits) const {
  if (bits >= size()) {
    throw Error(ErrorCode::InvalidArgument,
                to_hex({bits}) + " is not an element of GF(2^" + std::to_string(k_) + ")");
  }
  return {bits};
}

std::vector<FieldElement> Gf2k::elements() const {
  std::vector<FieldElement> out(size());
  for (std::uint32_t i = 0; i < size(); ++i) out[i] = {i};
  return out;
}

FieldElement Gf2k::mul(FieldElement a, FieldElement b) const noexcept {
  std::uint64_t acc = 0;
  for (std::uint32_t x = b.bits; x != 0; x &= x - 1) {
    acc ^= std::uint64_t{a.bits} << std::countr_zero(x);
  }
  return {static_cast<std::uint32_t>(poly_mod(acc, modulus_))};
}

FieldElement Gf2k::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement result{1};
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement Gf2k::sqrt(FieldElement a) const noexcept {
  // Frobenius has order k, so a^(2^(k-1)) squares to a.
  for (unsigned i = 1; i < k_; ++i) a = square(a);
  return a;
}

FieldElement Gf2k::inverse(FieldElement a) const {
  if (a.bits == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(a, size() - 2);
}

bool Gf2k::trace(FieldElement a) const noexcept {
  FieldElement t{0};
  FieldElement p = a;
  for (unsigned i = 0; i < k_; ++i) {
    t = add(t, p);
    p = square(p);
  }
  return t.bits == 1;
}

std::vector<FieldElement> solve_quadratic(const Gf2k& f, FieldElement p, FieldElement q,
                                          FieldElement r) {
  if (p.bits == 0) throw Error(ErrorCode::NotQuadratic, "leading coefficient is zero");
  std::vector<FieldElement> roots;
  if (q.bits == 0) {
    roots.push_back(f.sqrt(f.div(r, p)));
  } else {
    // T = (q/p) u turns the equation into u^2 + u = pr/q^2.
    const FieldElement s = f.div(f.mul(p, r), f.square(q));
    if (f.trace(s)) return roots;
    const FieldElement scale = f.div(q, p);
    for (FieldElement u : f.elements()) {
      if (f.add(f.square(u), u) == s) {
        roots.push_back(f.mul(scale, u));
        roots.push_back(f.mul(scale, f.add(u, {1})));
        break;
      }
    }
    std::sort(roots.begin(), roots.end());
  }
  for (FieldElement t : roots) {
    const FieldElement v = f.add(f.add(f.mul(p, f.square(t)), f.mul(q, t)), r);
    if (v.bits != 0) throw Error(ErrorCode::Internal, "quadratic root fails substitution");
  }
  return roots;
}

SymbolicElement SymbolicElement::constant(const Gf2k& f, FieldElement c) {
  SymbolicElement out;
  for (unsigned i = 0; i < f.degree(); ++i) {
    out.coords.push_back(BoolFunc::constant(((c.bits >> i) & 1U) != 0));
  }
  return out;
}

SymbolicElement SymbolicElement::unknown(const Gf2k& f, VarId first_var) {
  SymbolicElement out;
  for (unsigned i = 0; i < f.degree(); ++i) out.coords.push_back(BoolFunc::variable(first_var + i));
  return out;
}

FieldElement SymbolicElement::evaluate(const Assignment& a) const {
  FieldElement out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (eval(coords[i], a)) out.bits |= std::uint32_t{1} << i;
  }
  return out;
}

SymbolicElement add(const SymbolicElement& a, const SymbolicElement& b) {
  if (a.coords.size() != b.coords.size()) {
    throw Error(ErrorCode::ArityMismatch, "elements of different fields");
  }
  SymbolicElement out;
  for (std::size_t i = 0; i < a.coords.size(); ++i) out.coords.push_back(a.coords[i] ^ b.coords[i]);
  return out;
}

SymbolicElement mul(const Gf2k& f, const SymbolicElement& a, const SymbolicElement& b) {
  const unsigned k = f.degree();
  if (a.coords.size() != k || b.coords.size() != k) {
    throw Error(ErrorCode::ArityMismatch, "elements of different fields");
  }
  std::vector<std::vector<BoolFunc>> terms(2 * k - 1);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) terms[i + j].push_back(a.coords[i] & b.coords[j]);
  }
  // Reduce from the top: theta^d = sum of theta^(d-k+j) over the low modulus bits j.
  for (unsigned d = 2 * k - 2; d >= k; --d) {
    const BoolFunc c = BoolFunc::exclusive(terms[d]);
    for (unsigned j = 0; j < k; ++j) {
      if ((f.modulus() >> j) & 1U) terms[d - k + j].push_back(c);
    }
  }
  SymbolicElement out;
  for (unsigned i = 0; i < k; ++i) out.coords.push_back(BoolFunc::exclusive(terms[i]));
  return out;
}

BoolSystem lower_to_boolean(const SymbolicElement& e, std::size_t var_count) {
  std::vector<Equation> eqs;
  for (const auto& c : e.coords) eqs.push_back({c, BoolFunc::constant(false)});
  return BoolSystem::make(std::move(eqs), var_count);
}

namespace {

FieldElement curve_rhs(const Gf2k& f, const WeierstrassCurve& e, FieldElement x) {
  const FieldElement x2 = f.square(x);
  FieldElement r = f.mul(x2, x);
  r = f.add(r, f.mul(e.a2, x2));
  r = f.add(r, f.mul(e.a4, x));
  return f.add(r, e.a6);
}

}  // namespace

BoolSystem curve_system(const Gf2k& f, const WeierstrassCurve& e) {
  const unsigned k = f.degree();
  const auto x = SymbolicElement::unknown(f, 0);
  const auto y = SymbolicElement::unknown(f, k);
  auto c = [&](FieldElement v) { return SymbolicElement::constant(f, v); };
  const auto x2 = mul(f, x, x);
  SymbolicElement lhs = mul(f, y, y);
  lhs = add(lhs, mul(f, c(e.a1), mul(f, x, y)));
  lhs = add(lhs, mul(f, c(e.a3), y));
  lhs = add(lhs, mul(f, x2, x));
  lhs = add(lhs, mul(f, c(e.a2), x2));
  lhs = add(lhs, mul(f, c(e.a4), x));
  lhs = add(lhs, c(e.a6));
  return lower_to_boolean(lhs, 2 * k);
}

SymbolTable curve_symbols(const Gf2k& f) {
  SymbolTable s;
  for (unsigned i = 0; i < f.degree(); ++i) s.intern("x" + std::to_string(i));
  for (unsigned i = 0; i < f.degree(); ++i) s.intern("y" + std::to_string(i));
  return s;
}

std::vector<CurvePoint> points_at(const Gf2k& f, const WeierstrassCurve& e, FieldElement x) {
  const FieldElement q = f.add(f.mul(e.a1, x), e.a3);
  std::vector<CurvePoint> out;
  for (FieldElement y : solve_quadratic(f, {1}, q, curve_rhs(f, e, x))) out.push_back({x, y});
  return out;
}

std::vector<CurvePoint> enumerate_curve(const Gf2k& f, const WeierstrassCurve& e,
                                        CurveMethod method, SolverConfig cfg) {
  std::vector<CurvePoint> out;
  if (method == CurveMethod::FieldDirect) {
    for (FieldElement x : f.elements()) {
      auto pts = points_at(f, e, x);
      out.insert(out.end(), pts.begin(), pts.end());
    }
    return out;
  }
  const unsigned k = f.degree();
  const BoolSystem system = curve_system(f, e);
  std::vector<Literal> chain;
  for (unsigned i = k; i-- > 0;) chain.push_back({static_cast<VarId>(i), false});
  cfg.mode = SolveMode::Enumerate;
  cfg.expand_dont_cares = true;
  for (const BoolSystem& branch : decompose(system, term_chain(chain))) {
    for (const SolutionCube& cube : bool_solve(branch, cfg).solutions) {
      CurvePoint pt;
      for (unsigned i = 0; i < k; ++i) {
        pt.x.bits |= static_cast<std::uint32_t>(cube.values[i] == 1) << i;
        pt.y.bits |= static_cast<std::uint32_t>(cube.values[k + i] == 1) << i;
      }
      out.push_back(pt);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_hex(FieldElement a) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", a.bits);
  return buf;
}

}  // namespace onsat

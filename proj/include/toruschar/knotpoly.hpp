#pragma once

// Alexander polynomial, twisted Alexander root counting, and the boundary
// curves where partially reducible components meet the totally reducible
// locus.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "toruschar/census.hpp"
#include "toruschar/errors.hpp"
#include "toruschar/knot.hpp"
#include "toruschar/kring.hpp"
#include "toruschar/oracle.hpp"
#include "toruschar/roots.hpp"

namespace toruschar {

using IntPoly = BasicPoly<AlexanderTag>;

/// Delta_{m,n} = (t^{mn} - 1)(t - 1) / ((t^m - 1)(t^n - 1)).
inline IntPoly alexander(const KnotParams& p) {
  const auto m = static_cast<std::size_t>(p.m()), n = static_cast<std::size_t>(p.n());
  const IntPoly one = IntPoly::constant(1);
  const IntPoly num = (IntPoly::monomial(m * n) - one) * (IntPoly::var() - one);
  const IntPoly den = (IntPoly::monomial(m) - one) * (IntPoly::monomial(n) - one);
  auto [q, rem] = num.divmod_monic(den);
  if (!rem.is_zero())
    throw InternalError("Alexander polynomial division left remainder " + rem.str());
  return q;
}

inline bool is_palindromic(const IntPoly& f) {
  auto c = f.coeffs();
  auto r = c;
  std::reverse(r.begin(), r.end());
  return c == r;
}

struct RootCount {
  /// Roots of unity z (as exponents at order 6mn) with positive net
  /// multiplicity in Delta_{eps,eps'}(z^3).
  std::vector<std::pair<RootExp, int>> roots;
  long total() const {
    long s = 0;
    for (const auto& [z, mult] : roots) s += mult;
    return s;
  }
  long simple() const {
    return static_cast<long>(std::count_if(roots.begin(), roots.end(),
                                           [](const auto& e) { return e.second == 1; }));
  }
  long doubled() const {
    return static_cast<long>(std::count_if(roots.begin(), roots.end(),
                                           [](const auto& e) { return e.second == 2; }));
  }
};

/// Net root multiplicities of
///   Delta_{eps,eps'}(z^3) = (z^{3mn} - eps^n)^2 /
///     ((z^{3m} - eps)(z^{3m} - 1/eps)(z^{3n} - eps')(z^{3n} - 1/eps'))
/// for an SL(2) label ({eps, 1/eps}, {eps', 1/eps'}). All roots lie in
/// mu_{6mn}, so they are enumerated exactly.
inline RootCount twisted_root_count(const EigenLabel& label, const KnotParams& p) {
  const Orientation o = Orientation::of(p);
  if (label.rank() != 2) throw InvalidLabel("twisted_root_count needs a rank 2 label");
  validate_label(label, o);
  if (!label.a_distinct() || !label.b_distinct())
    throw InvalidLabel("twisted_root_count needs distinct eigenvalues");
  const RootExp eps(label.a_exps[0], label.order);
  const RootExp epsp(label.b_exps[0], label.order);
  if (!(eps * RootExp(label.a_exps[1], label.order)).is_one() ||
      !(epsp * RootExp(label.b_exps[1], label.order)).is_one())
    throw InvalidLabel("rank 2 label sides must be {e, 1/e}");
  const RootExp varpi = eps.pow(o.n);

  const std::int64_t order = 6 * o.m * o.n;
  RootCount out;
  for (std::int64_t k = 0; k < order; ++k) {
    const RootExp z(k, order);
    const RootExp z3m = z.pow(3 * o.m), z3n = z.pow(3 * o.n);
    int mult = 0;
    if (z.pow(3 * o.m * o.n) == varpi) mult += 2;
    if (z3m == eps) --mult;
    if (z3m == eps.inverse()) --mult;
    if (z3n == epsp) --mult;
    if (z3n == epsp.inverse()) --mult;
    if (mult < 0)
      throw NegativeMultiplicity("root z = exp(2 pi i " + std::to_string(k) + "/" +
                                 std::to_string(order) + ") has net multiplicity " +
                                 std::to_string(mult));
    if (mult > 0) out.roots.emplace_back(z, mult);
  }
  return out;
}

struct LineCountIdentity {
  BigInt from_strata;   // 18 |F| + 3 |G|
  BigInt closed_form;   // (3/2)(n-1)(m-1)(mn-m-n)
  BigInt from_roots;    // half the net twisted root count over all SL(2) labels
  bool agree() const { return from_strata == closed_form && closed_form == from_roots; }
};

/// Counts lines in the boundary of the irreducible rank 3 locus three ways.
/// Every root z0 of Delta_{eps,eps'}(z^3) is counted once for each of the two
/// labels in the orbit {(eps, eps'), (-eps, -eps')} of the centre of SL(2),
/// hence the halving of the root total.
inline LineCountIdentity line_count_identity(const KnotParams& p,
                                             const OracleConfig& cfg = {}) {
  LineCountIdentity out;
  const auto counts = stratum_counts(Group::SL, 3, p);
  out.from_strata =
      18 * count_of(counts, {StratumTag::IrreducibleDim4, QuotientVariant::Plain}) +
      3 * count_of(counts, {StratumTag::IrreducibleDim2, QuotientVariant::Plain});
  const BigInt m = p.m(), n = p.n();
  out.closed_form = exact_div(3 * (n - 1) * (m - 1) * (m * n - m - n), 2);
  BigInt total = 0;
  for (const auto& l : enumerate_F(2, p, cfg).labels) total += twisted_root_count(l, p).total();
  out.from_roots = exact_div(total, 2);
  return out;
}

struct CurveSpec {
  long m = 0, n = 0, k = 0;
  double c = 0;
  /// Coefficients of x^2y^2, x^3 + y^3, xy and the constant term:
  /// x^2y^2 - (c+2)(x^3+y^3) + (c^2+5c+4)xy - (c+1)^3.
  double c_x2y2 = 1, c_cubes = 0, c_xy = 0, c_const = 0;
  /// k and k' give the same partially reducible component iff keys agree.
  std::pair<long, long> component_key;
  /// Curve lies in the closure of a type 2 (mu_2-fixed) component.
  bool type2 = false;
};

inline CurveSpec curve_for_c(double c) {
  CurveSpec s;
  s.c = c;
  s.c_cubes = -(c + 2);
  s.c_xy = c * c + 5 * c + 4;
  s.c_const = -(c + 1) * (c + 1) * (c + 1);
  return s;
}

inline CurveSpec boundary_curve(const KnotParams& p, long k) {
  const long m = p.m(), n = p.n();
  if (mod_floor(k, m) == 0 || mod_floor(k, n) == 0)
    throw InvalidK("k = " + std::to_string(k) + " is a multiple of m = " +
                   std::to_string(m) + " or n = " + std::to_string(n));
  CurveSpec s = curve_for_c(2 * std::cos(2 * std::numbers::pi * static_cast<double>(k) /
                                         static_cast<double>(m * n)));
  s.m = m;
  s.n = n;
  s.k = k;
  auto fold = [k](long q) {
    const long a = mod_floor(k, q);
    return std::min(a, q - a);
  };
  s.component_key = {fold(m), fold(n)};
  if (p.has_even()) s.type2 = mod_floor(k, m) == m / 2;
  return s;
}

/// All curves for k in [1, mn), one per k.
inline std::vector<CurveSpec> boundary_curves(const KnotParams& p) {
  std::vector<CurveSpec> out;
  for (long k = 1; k < p.m() * p.n(); ++k)
    if (k % p.m() != 0 && k % p.n() != 0) out.push_back(boundary_curve(p, k));
  return out;
}

using cplx = std::complex<double>;

/// x = (delta + 1/delta) t + t^-2, y = (delta + 1/delta) t^-1 + t^2.
inline std::pair<cplx, cplx> parametrize_curve(cplx delta, cplx t) {
  if (delta == cplx(0) || t == cplx(0))
    throw InternalError("parametrize_curve needs nonzero delta and t");
  const cplx s = delta + 1.0 / delta;
  return {s * t + 1.0 / (t * t), s / t + t * t};
}

struct Residual {
  double abs = 0;
  double scale = 0;
  double relative() const { return scale == 0 ? abs : abs / scale; }
};

/// Evaluates the quartic at (x, y) with c taken as complex (c = delta^2 +
/// delta^-2 need not be real). Scale is the largest monomial magnitude.
inline Residual curve_residual(cplx c, cplx x, cplx y) {
  const std::array<cplx, 5> terms = {x * x * y * y, -(c + 2.0) * x * x * x,
                                     -(c + 2.0) * y * y * y, (c * c + 5.0 * c + 4.0) * x * y,
                                     -(c + 1.0) * (c + 1.0) * (c + 1.0)};
  cplx sum = 0;
  double scale = 0;
  for (const auto& v : terms) {
    sum += v;
    scale = std::max(scale, std::abs(v));
  }
  return {std::abs(sum), scale};
}

inline Residual curve_residual(const CurveSpec& s, cplx x, cplx y) {
  return curve_residual(cplx(s.c), x, y);
}

}  // namespace toruschar

#pragma once

// Closed-form classes in K(Var_C) of the rank 2 and 3 character varieties,
// stratum summation, and recovery of (m, n) from the SL(3) class.

#include <limits>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/integer.hpp>

#include "toruschar/census.hpp"
#include "toruschar/errors.hpp"
#include "toruschar/knot.hpp"
#include "toruschar/kring.hpp"
#include "toruschar/named_classes.hpp"

namespace toruschar {

namespace detail {

inline KClass L() { return lefschetz(); }
inline KClass C(long long c) { return KClass::constant(c); }

/// Orientation with the even parameter (if any) in the "n" slot, which is
/// the convention the even-case formulas are written in.
inline std::pair<long, long> even_as_n(const KnotParams& p) {
  // returns (pn, pm)
  return p.has_even() ? std::pair{p.m(), p.n()} : std::pair{p.n(), p.m()};
}

}  // namespace detail

/// [X(Gamma_{m,n}, SL(r))] for r = 2, 3.
inline KClass kclass_sl(int r, const KnotParams& p) {
  require_rank_2_or_3(r);
  using detail::C;
  using detail::L;
  using P = NamedClassTable;
  const auto [n, m] = detail::even_as_n(p);
  const BigInt n1 = n - 1, n2 = n - 2, m1 = m - 1, m2 = m - 2;
  if (r == 2) return L() + exact_div(n1 * m1, 2) * (L() - C(2));

  KClass out = exact_div(n1 * n2 * m1 * m2, 12) * P::P1() + P::P0() +
               exact_div(n1 * m1 * BigInt(n + m - 4), 2) * P::P3();
  if (n % 2 == 1) {
    out += exact_div(n1 * m1, 4) * P::P5();
  } else {
    out += exact_div(n2 * m1, 4) * P::P5() + exact_div(m1, 2) * P::P6();
  }
  return out;
}

/// Which of the five residue cases (mod 6) of the PGL(3) class formula
/// applies to the orientation (n, m); 0 if none.
inline int pgl3_case(long n, long m) {
  const long a = n % 6, b = m % 6;
  const bool b15 = (b == 1 || b == 5);
  int hits = 0, which = 0;
  auto hit = [&](bool cond, int id) {
    if (cond) {
      ++hits;
      which = id;
    }
  };
  hit((a == 1 || a == 5) && b15, 1);
  hit((a == 2 || a == 4) && b15, 2);
  hit(a == 3 && b15, 3);
  hit(a == 0 && b15, 4);
  hit((a == 2 || a == 4) && b == 3, 5);
  if (hits > 1) throw InternalError("PGL(3) residue cases overlap");
  return which;
}

/// [X(Gamma_{m,n}, PGL(r))] for r = 2, 3.
inline KClass kclass_pgl(int r, const KnotParams& p) {
  require_rank_2_or_3(r);
  using detail::C;
  using detail::L;
  using P = NamedClassTable;
  if (r == 2) {
    const auto [n, m] = detail::even_as_n(p);
    const BigInt n1 = n - 1, n2 = n - 2, m1 = m - 1;
    if (n % 2 == 1) return L() + exact_div(n1 * m1, 4) * (L() - C(2));
    return L() + exact_div(n2 * m1, 4) * (L() - C(2)) +
           exact_div(m1, 2) * (L() - C(1));
  }

  long n = p.n(), m = p.m();
  int which = pgl3_case(n, m);
  if (which == 0) {
    std::swap(n, m);
    which = pgl3_case(n, m);
  }
  if (which == 0)
    throw InternalError("no PGL(3) residue case matches (" + std::to_string(m) +
                        "," + std::to_string(n) + ")");
  const BigInt n1 = n - 1, n2 = n - 2, n3 = n - 3, m1 = m - 1, m2 = m - 2,
               m3 = m - 3;
  const BigInt N = n, M = m;
  switch (which) {
    case 1:
      return P::P0() + exact_div(m1 * m2 * n1 * n2, 36) * P::P1() +
             exact_div(n1 * m1 * BigInt(n + m - 4), 6) * P::P3() +
             exact_div(n1 * m1, 4) * P::P5();
    case 2:
      return P::P0() + exact_div(m1 * m2 * n1 * n2, 36) * P::P1() +
             exact_div(n1 * m1 * BigInt(n + m - 4), 6) * P::P3() +
             exact_div(n2 * m1, 4) * P::P5() + exact_div(m1, 2) * P::P6();
    case 3:
      return P::P0() + exact_div(m1 * m2 * N * n3, 36) * P::P1() +
             exact_div(m1 * m2, 6) * P::P2() +
             exact_div(m1 * (M * N + N * N - 5 * N - M + 2), 6) * P::P3() +
             m1 * P::P4() + exact_div(n1 * m1, 4) * P::P5();
    case 4:
      return P::P0() + exact_div(m1 * m2 * N * n3, 36) * P::P1() +
             exact_div(m1 * m2, 6) * P::P2() +
             exact_div(m1 * (M * N + N * N - 5 * N - M + 2), 6) * P::P3() +
             m1 * P::P4() + exact_div(n2 * m1, 4) * P::P5() +
             exact_div(m1, 2) * P::P6();
    case 5:
      return P::P0() + exact_div(M * m3 * n1 * n2, 36) * P::P1() +
             exact_div(n1 * n2, 6) * P::P2() +
             exact_div(n1 * (M * N + M * M - N - 5 * M + 2), 6) * P::P3() +
             n1 * P::P4() + exact_div(n2 * m1, 4) * P::P5() +
             exact_div(m1, 2) * P::P6();
    default:
      throw InternalError("unreachable PGL(3) case");
  }
}

/// [X(Gamma_{m,n}, GL(r))] = (L - 1) [X(Gamma_{m,n}, PGL(r))].
inline KClass kclass_gl(int r, const KnotParams& p) {
  return kmul(detail::L() - detail::C(1), kclass_pgl(r, p));
}

inline KClass kclass(Group g, int r, const KnotParams& p) {
  switch (g) {
    case Group::SL: return kclass_sl(r, p);
    case Group::PGL: return kclass_pgl(r, p);
    case Group::GL: return kclass_gl(r, p);
  }
  throw InternalError("unknown group");
}

/// Sum of the K-classes of the listed strata.
inline KClass stratum_sum(const std::vector<ComponentDescriptor>& ds) {
  KClass out;
  for (const auto& d : ds) out += d.kclass;
  return out;
}

/// Stratum sum using closed-form counts only (no label construction), so
/// it stays cheap for large m, n.
inline KClass stratum_sum_from_counts(Group g, int r, const KnotParams& p) {
  KClass out;
  for (const auto& c : stratum_counts(g, r, p))
    out += c.count * stratum_geometry(g, r, c.kind).kclass;
  return out;
}

struct RecoveredPair {
  long small;
  long large;
  friend bool operator==(const RecoveredPair&, const RecoveredPair&) = default;
};

/// Recovers {m, n} from c = [X(Gamma_{m,n}, SL(3))].
///
/// The L^4 coefficient gives (n-1)(n-2)(m-1)(m-2)/12. After removing that
/// multiple of P1, evaluation at L = 0 and L = 1 gives p and q with
/// 2p - 6q + 6 = (n-1)(m-1). When (n-2)(m-2) = 0 one parameter is 2 and the
/// other follows from (n-1)(m-1) directly.
inline RecoveredPair recover_mn(const KClass& c) {
  using P = NamedClassTable;
  if (c.degree() > 4)
    throw NoValidFactorization("degree " + std::to_string(c.degree()) +
                               " exceeds 4: not an SL(3) torus knot class");
  const BigInt c4 = kcoeff(c, 4);
  const BigInt a = 12 * c4;  // (n-1)(n-2)(m-1)(m-2)
  const KClass rest = c - c4 * P::P1();
  const BigInt p = keval(rest, 0);
  const BigInt q = keval(rest, 1);
  const BigInt prod1 = 2 * p - 6 * q + 6;  // (n-1)(m-1)
  if (prod1 <= 0)
    throw NoValidFactorization("(n-1)(m-1) = " + prod1.str() +
                               " is not positive");

  BigInt sum, prod;  // n + m and n m
  if (a == 0) {
    sum = prod1 + 3;  // {2, prod1 + 1}
    prod = 2 * (prod1 + 1);
  } else {
    BigInt prod2, rem;  // (n-2)(m-2)
    boost::multiprecision::divide_qr(a, prod1, prod2, rem);
    if (rem != 0)
      throw NonIntegralSolution("(n-2)(m-2) = " + a.str() + " / " +
                                prod1.str() + " is not an integer");
    sum = prod1 - prod2 + 3;
    prod = prod1 + sum - 1;
  }
  const BigInt disc = sum * sum - 4 * prod;
  if (disc < 0)
    throw NonIntegralSolution("negative discriminant for n + m = " + sum.str());
  const BigInt root = boost::multiprecision::sqrt(disc);
  if (root * root != disc)
    throw NonIntegralSolution("discriminant " + disc.str() +
                              " is not a perfect square");
  if ((sum - root) % 2 != 0)
    throw NonIntegralSolution("roots of the recovered quadratic are half-integers");
  const BigInt lo = (sum - root) / 2, hi = (sum + root) / 2;
  if (lo < 2 || hi > BigInt(std::numeric_limits<long>::max()))
    throw NoValidFactorization("recovered pair (" + lo.str() + "," + hi.str() +
                               ") is not a torus knot type");
  const long s = lo.convert_to<long>(), l = hi.convert_to<long>();
  std::optional<KnotParams> params;
  try {
    params = KnotParams::make(s, l);
  } catch (const Error&) {
    throw NoValidFactorization("recovered pair (" + lo.str() + "," + hi.str() +
                               ") is not coprime");
  }
  if (kclass_sl(3, *params) != c)
    throw NoValidFactorization("class of recovered pair (" + lo.str() + "," +
                               hi.str() + ") does not reproduce the input");
  return {s, l};
}

}  // namespace toruschar

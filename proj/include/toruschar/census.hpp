#pragma once

// Stratification of the SL/GL/PGL character varieties of torus knot groups
// in ranks 2 and 3: stratum counts, per-stratum K-classes and charts, and
// the eigenvalue labels carried by the irreducible strata.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toruschar/errors.hpp"
#include "toruschar/knot.hpp"
#include "toruschar/kring.hpp"
#include "toruschar/named_classes.hpp"
#include "toruschar/roots.hpp"

namespace toruschar {

enum class StratumTag {
  TotallyReducible,
  PartialType1,
  PartialType2,
  IrreducibleDim4,
  IrreducibleDim2,
  IrreducibleDim1,
};

enum class QuotientVariant { Plain, Mu3FixedSurface, Mu3FixedMaxDim, Mu2Fixed };

inline std::string to_string(StratumTag t) {
  switch (t) {
    case StratumTag::TotallyReducible: return "TotallyReducible";
    case StratumTag::PartialType1: return "PartialType1";
    case StratumTag::PartialType2: return "PartialType2";
    case StratumTag::IrreducibleDim4: return "IrreducibleDim4";
    case StratumTag::IrreducibleDim2: return "IrreducibleDim2";
    case StratumTag::IrreducibleDim1: return "IrreducibleDim1";
  }
  return "?";
}

inline std::string to_string(QuotientVariant v) {
  switch (v) {
    case QuotientVariant::Plain: return "Plain";
    case QuotientVariant::Mu3FixedSurface: return "Mu3FixedSurface";
    case QuotientVariant::Mu3FixedMaxDim: return "Mu3FixedMaxDim";
    case QuotientVariant::Mu2Fixed: return "Mu2Fixed";
  }
  return "?";
}

struct StratumKind {
  StratumTag tag = StratumTag::TotallyReducible;
  QuotientVariant variant = QuotientVariant::Plain;
  friend bool operator==(const StratumKind&, const StratumKind&) = default;
  friend auto operator<=>(const StratumKind&, const StratumKind&) = default;
};

struct ComponentDescriptor {
  StratumKind kind;
  Group group = Group::SL;
  int rank = 3;
  std::optional<EigenLabel> eigen_label;
  int dimension = 0;
  KClass kclass;
  std::string chart;
};

inline void require_rank_2_or_3(int r) {
  if (r != 2 && r != 3)
    throw UnsupportedRank("closed-form strata exist only for rank 2 and 3, got " +
                          std::to_string(r));
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Number of (r-1)^2-dimensional components of the SL(r) character variety:
/// (1/r) C(n-1, r-1) C(m-1, r-1).
inline BigInt max_dim_component_count(int r, const KnotParams& p) {
  if (r < 2) throw UnsupportedRank("max_dim_component_count needs r >= 2");
  return exact_div(binomial(p.n() - 1, r - 1) * binomial(p.m() - 1, r - 1), r);
}

// ---------------------------------------------------------------------------
// Stratum counts from the closed formulas.

struct StratumCount {
  StratumKind kind;
  BigInt count;
};

namespace detail {

inline BigInt B(long v) { return BigInt(v); }

}  // namespace detail

/// Closed-form count of every stratum kind for the given group and rank.
/// Kinds with count zero are still listed.
inline std::vector<StratumCount> stratum_counts(Group g, int r,
                                                const KnotParams& p) {
  require_rank_2_or_3(r);
  using detail::B;
  using QV = QuotientVariant;
  using ST = StratumTag;
  const long m = p.m(), n = p.n();  // n odd
  std::vector<StratumCount> out;
  out.push_back({{ST::TotallyReducible, QV::Plain}, 1});

  const BigInt free2 = B((n - 1) / 2) * B((m - 1) / 2);
  const BigInt fixed2 = p.has_even() ? B((n - 1) / 2) : B(0);

  if (r == 2) {
    if (g == Group::SL) {
      out.push_back({{ST::IrreducibleDim1, QV::Plain},
                     exact_div(B(n - 1) * B(m - 1), 2)});
    } else {
      out.push_back({{ST::IrreducibleDim1, QV::Plain}, free2});
      out.push_back({{ST::IrreducibleDim1, QV::Mu2Fixed}, fixed2});
    }
    return out;
  }

  out.push_back({{ST::PartialType1, QV::Plain}, free2});
  out.push_back({{ST::PartialType2, QV::Plain}, fixed2});

  const BigInt dim4 = exact_div(B(n - 1) * B(n - 2) * B(m - 1) * B(m - 2), 12);
  const BigInt dim2 = exact_div(B(n - 1) * B(m - 1) * B(n + m - 4), 2);
  if (g == Group::SL) {
    out.push_back({{ST::IrreducibleDim4, QV::Plain}, dim4});
    out.push_back({{ST::IrreducibleDim2, QV::Plain}, dim2});
    return out;
  }

  if (n % 3 != 0 && m % 3 != 0) {
    out.push_back({{ST::IrreducibleDim4, QV::Plain},
                   exact_div(B(m - 1) * B(m - 2) * B(n - 1) * B(n - 2), 36)});
    out.push_back({{ST::IrreducibleDim4, QV::Mu3FixedMaxDim}, 0});
    out.push_back({{ST::IrreducibleDim2, QV::Plain},
                   exact_div(B(n - 1) * B(m - 1) * B(n + m - 4), 6)});
    out.push_back({{ST::IrreducibleDim2, QV::Mu3FixedSurface}, 0});
    return out;
  }
  // t is the parameter divisible by 3, s the other one.
  const long t = (n % 3 == 0) ? n : m;
  const long s = (n % 3 == 0) ? m : n;
  out.push_back({{ST::IrreducibleDim4, QV::Plain},
                 exact_div(B(s - 1) * B(s - 2) * B(t) * B(t - 3), 36)});
  out.push_back({{ST::IrreducibleDim4, QV::Mu3FixedMaxDim},
                 exact_div(B(s - 1) * B(s - 2), 6)});
  out.push_back({{ST::IrreducibleDim2, QV::Plain},
                 exact_div(B(s - 1) * (B(s) * t + B(t) * t - 5 * t - s + 2), 6)});
  out.push_back({{ST::IrreducibleDim2, QV::Mu3FixedSurface}, B(s - 1)});
  return out;
}

inline BigInt count_of(const std::vector<StratumCount>& counts, StratumKind k) {
  for (const auto& c : counts)
    if (c.kind == k) return c.count;
  return 0;
}

// ---------------------------------------------------------------------------
// Per-stratum geometry: dimension, K-class and chart.

struct StratumGeometry {
  int dimension;
  KClass kclass;
  std::string chart;
};

inline StratumGeometry stratum_geometry(Group g, int r, StratumKind k) {
  using QV = QuotientVariant;
  using ST = StratumTag;
  using P = NamedClassTable;
  const KClass L = lefschetz();
  const KClass one = KClass::constant(1);
  const KClass Lm1 = L - one;
  StratumGeometry base{0, {}, ""};  // SL / PGL geometry
  if (r == 2) {
    if (k.tag == ST::TotallyReducible)
      base = {1, L, "C"};
    else if (k.variant == QV::Mu2Fixed)
      base = {1, Lm1, "C*  ((C - {0,1}) / mu_2)"};
    else
      base = {1, L - 2 * one, "C - {0,1}"};
    if (g != Group::GL) return base;
    if (k.tag == ST::TotallyReducible) return {2, L * Lm1, "C x C*"};
    if (k.variant == QV::Mu2Fixed)
      return {2, Lm1 * Lm1, "{(u,v) : v != 0, v != u^2}"};
    return {2, (L - 2 * one) * Lm1, "(C - {0,1}) x C*"};
  }

  switch (k.tag) {
    case ST::TotallyReducible:
      base = {2, P::P0(),
              g == Group::SL ? "C^2 (sigma_1, sigma_2 of the diagonal entries)"
                             : "C^2 / mu_3 = {(x,y,z) : x y = z^3}"};
      break;
    case ST::PartialType1:
      base = {2, P::P5(), "(C - {0,1}) x C*"};
      break;
    case ST::PartialType2:
      // Also stated as v != u^3 in one place; the rank-2 form is recorded.
      base = {2, P::P6(), "{(u,v) : v != 0, v != u^2}"};
      break;
    case ST::IrreducibleDim4:
      if (k.variant == QV::Mu3FixedMaxDim)
        base = {4, P::P2(), "M / (T x_D T x| mu_3), mu_3 permuting columns"};
      else
        base = {4, P::P1(), "M / (T x_D T), M stable in GL(3)"};
      break;
    case ST::IrreducibleDim2:
      if (k.variant == QV::Mu3FixedSurface)
        base = {2, P::P4(), "{(x,y,z) : x y = z^3, x + y + 3z != 1}"};
      else
        base = {2, P::P3(), "(C*)^2 - {x+y=1}"};
      break;
    case ST::IrreducibleDim1:
      throw InternalError("rank-3 census has no 1-dimensional strata");
  }
  if (g != Group::GL) return base;

  std::string chart;
  switch (k.tag) {
    case ST::TotallyReducible: chart = "C^2 x C*"; break;
    case ST::PartialType1: chart = "(C - {0,1}) x (C*)^2"; break;
    case ST::PartialType2: chart = "{(x,y,z) : y,z != 0, y != x^2}"; break;
    case ST::IrreducibleDim4:
      chart = k.variant == QV::Mu3FixedMaxDim
                  ? "(M / (T x_D T) x C*) / mu_3"
                  : "M / (T x_D T) x C*";
      break;
    case ST::IrreducibleDim2:
      chart = k.variant == QV::Mu3FixedSurface
                  ? "{(u,v,w) : u^3 + v^3 + 3uv - w != 0, w != 0}"
                  : "((C*)^2 - {x+y=1}) x C*";
      break;
    default: break;
  }
  return {base.dimension + 1, base.kclass * Lm1, chart};
}

// ---------------------------------------------------------------------------
// Eigenvalue labels, generated by solving the defining congruences directly.
//
// For varpi = e^{2 pi i k / r}, the roots eps with eps^n = varpi are
// exp(2 pi i (k m + r m j) / N), j in Z_n, N = r m n, and prod eps = 1 becomes
// k + sum j = 0 (mod n). The B side is the same with m, n exchanged.

namespace detail {

/// All strictly increasing r-tuples in [0, modulus) with sum = target mod modulus.
inline void distinct_tuples_with_sum(long modulus, int r, long target,
                                     std::vector<std::vector<long>>& out) {
  std::vector<long> cur;
  auto rec = [&](auto&& self, long start, long sum) -> void {
    if (static_cast<int>(cur.size()) == r) {
      if (mod_floor(sum - target, modulus) == 0) out.push_back(cur);
      return;
    }
    for (long j = start; j < modulus; ++j) {
      cur.push_back(j);
      self(self, j + 1, sum + j);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
}

/// (j, j, j') with j != j' and 2j + j' = target mod modulus.
inline std::vector<std::vector<long>> repeated_triples_with_sum(long modulus,
                                                                long target) {
  std::vector<std::vector<long>> out;
  for (long j = 0; j < modulus; ++j) {
    long jp = mod_floor(target - 2 * j, modulus);
    if (jp != j) out.push_back({j, j, jp});
  }
  return out;
}

/// Exponents at N = r*own*other of exp(2 pi i (k + r j) / (r * own)).
inline std::vector<std::int64_t> to_exps(const std::vector<long>& js, long k,
                                         long other, long r) {
  std::vector<std::int64_t> e;
  for (long j : js) e.push_back((k + r * j) * other);
  return e;
}

}  // namespace detail

/// Labels of the (r-1)^2-dimensional SL(r) strata: both eigenvalue
/// sets distinct. Sorted.
inline std::vector<EigenLabel> sl_tau_labels(int r, const Orientation& o) {
  const long N = r * o.m * o.n;
  std::vector<EigenLabel> out;
  for (long k = 0; k < r; ++k) {
    std::vector<std::vector<long>> as, bs;
    detail::distinct_tuples_with_sum(o.n, r, -k, as);
    detail::distinct_tuples_with_sum(o.m, r, -k, bs);
    for (const auto& a : as)
      for (const auto& b : bs)
        out.emplace_back(N, detail::to_exps(a, k, o.m, r),
                         detail::to_exps(b, k, o.n, r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Labels of the 2-dimensional irreducible SL(3) strata: one side has an
/// eigenvalue of multiplicity two, the other side is distinct. Sorted.
inline std::vector<EigenLabel> sl_kappa_labels(const Orientation& o) {
  constexpr int r = 3;
  const long N = r * o.m * o.n;
  std::vector<EigenLabel> out;
  for (long k = 0; k < r; ++k) {
    std::vector<std::vector<long>> a_dist, b_dist;
    detail::distinct_tuples_with_sum(o.n, r, -k, a_dist);
    detail::distinct_tuples_with_sum(o.m, r, -k, b_dist);
    auto a_rep = detail::repeated_triples_with_sum(o.n, -k);
    auto b_rep = detail::repeated_triples_with_sum(o.m, -k);
    for (const auto& a : a_rep)
      for (const auto& b : b_dist)
        out.emplace_back(N, detail::to_exps(a, k, o.m, r),
                         detail::to_exps(b, k, o.n, r));
    for (const auto& a : a_dist)
      for (const auto& b : b_rep)
        out.emplace_back(N, detail::to_exps(a, k, o.m, r),
                         detail::to_exps(b, k, o.n, r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Partition of labels into mu_r orbits (r = label rank). Each orbit is
/// sorted; its front() is the representative. Orbits are sorted by
/// representative.
inline std::vector<std::vector<EigenLabel>> mu_orbits(
    const std::vector<EigenLabel>& labels, const Orientation& o) {
  std::map<EigenLabel, std::size_t> seen;
  std::vector<std::vector<EigenLabel>> orbits;
  for (const auto& l : labels) {
    if (seen.count(l)) continue;
    std::vector<EigenLabel> orb;
    const auto r = static_cast<std::int64_t>(l.rank());
    for (std::int64_t j = 0; j < r; ++j) {
      EigenLabel t = act_mu(l, o, j);
      if (std::find(orb.begin(), orb.end(), t) == orb.end()) orb.push_back(t);
    }
    std::sort(orb.begin(), orb.end());
    for (const auto& t : orb) seen.emplace(t, orbits.size());
    orbits.push_back(std::move(orb));
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

// ---------------------------------------------------------------------------
// Census.

namespace detail {

inline void emit(std::vector<ComponentDescriptor>& out, Group g, int r,
                 StratumKind k, std::optional<EigenLabel> label) {
  StratumGeometry geo = stratum_geometry(g, r, k);
  out.push_back({k, g, r, std::move(label), geo.dimension, geo.kclass, geo.chart});
}

inline void check_count(const std::vector<StratumCount>& counts, StratumKind k,
                        std::size_t produced, Group g, int r) {
  BigInt expected = count_of(counts, k);
  if (expected != produced)
    throw InternalError("census " + to_string(g) + "(" + std::to_string(r) +
                        "): " + to_string(k.tag) + "/" + to_string(k.variant) +
                        " formula gives " + expected.str() +
                        " but label construction gives " +
                        std::to_string(produced));
}

/// Emits one stratum per mu_r orbit: free orbits as `free_kind`, fixed
/// labels as `fixed_kind`.
inline void emit_orbits(std::vector<ComponentDescriptor>& out,
                        const std::vector<StratumCount>& counts, Group g, int r,
                        const std::vector<EigenLabel>& labels,
                        const Orientation& o, StratumKind free_kind,
                        StratumKind fixed_kind) {
  std::size_t n_free = 0, n_fixed = 0;
  for (const auto& orb : mu_orbits(labels, o)) {
    if (orb.size() == 1) {
      emit(out, g, r, fixed_kind, orb.front());
      ++n_fixed;
    } else if (orb.size() == orb.front().rank()) {
      emit(out, g, r, free_kind, orb.front());
      ++n_free;
    } else {
      throw InternalError("mu_r orbit of unexpected size " +
                          std::to_string(orb.size()));
    }
  }
  check_count(counts, free_kind, n_free, g, r);
  check_count(counts, fixed_kind, n_fixed, g, r);
}

}  // namespace detail

/// Strata of the character variety X(Gamma_{m,n}, G) for G = SL/GL/PGL of
/// rank 2 or 3. Counts are the closed formulas; labels come from the
/// congruence construction and must agree with the counts.
inline std::vector<ComponentDescriptor> census(Group g, int r,
                                               const KnotParams& p) {
  require_rank_2_or_3(r);
  using QV = QuotientVariant;
  using ST = StratumTag;
  const Orientation o = Orientation::of(p);
  const auto counts = stratum_counts(g, r, p);
  std::vector<ComponentDescriptor> out;
  detail::emit(out, g, r, {ST::TotallyReducible, QV::Plain}, std::nullopt);

  const auto rank2 = sl_tau_labels(2, o);
  if (r == 2) {
    if (g == Group::SL) {
      for (const auto& l : rank2)
        detail::emit(out, g, r, {ST::IrreducibleDim1, QV::Plain}, l);
      detail::check_count(counts, {ST::IrreducibleDim1, QV::Plain},
                          rank2.size(), g, r);
    } else {
      detail::emit_orbits(out, counts, g, r, rank2, o,
                          {ST::IrreducibleDim1, QV::Plain},
                          {ST::IrreducibleDim1, QV::Mu2Fixed});
    }
    return out;
  }

  // Partially reducible strata are the components of the GL(2) irreducible
  // locus, i.e. mu_2 orbits of SL(2) labels.
  detail::emit_orbits(out, counts, g, r, rank2, o,
                      {ST::PartialType1, QV::Plain},
                      {ST::PartialType2, QV::Plain});

  const auto tau = sl_tau_labels(3, o);
  const auto kappa = sl_kappa_labels(o);
  if (g == Group::SL) {
    for (const auto& l : tau)
      detail::emit(out, g, r, {ST::IrreducibleDim4, QV::Plain}, l);
    for (const auto& l : kappa)
      detail::emit(out, g, r, {ST::IrreducibleDim2, QV::Plain}, l);
    detail::check_count(counts, {ST::IrreducibleDim4, QV::Plain}, tau.size(), g, r);
    detail::check_count(counts, {ST::IrreducibleDim2, QV::Plain}, kappa.size(), g, r);
    return out;
  }
  detail::emit_orbits(out, counts, g, r, tau, o, {ST::IrreducibleDim4, QV::Plain},
                      {ST::IrreducibleDim4, QV::Mu3FixedMaxDim});
  detail::emit_orbits(out, counts, g, r, kappa, o,
                      {ST::IrreducibleDim2, QV::Plain},
                      {ST::IrreducibleDim2, QV::Mu3FixedSurface});
  return out;
}

inline std::vector<ComponentDescriptor> census_sl(int r, const KnotParams& p) {
  return census(Group::SL, r, p);
}
inline std::vector<ComponentDescriptor> census_pgl(int r, const KnotParams& p) {
  return census(Group::PGL, r, p);
}
inline std::vector<ComponentDescriptor> census_gl(int r, const KnotParams& p) {
  return census(Group::GL, r, p);
}

/// Number of descriptors of the given kind.
inline std::size_t count_kind(const std::vector<ComponentDescriptor>& ds,
                              StratumKind k) {
  std::size_t c = 0;
  for (const auto& d : ds)
    if (d.kind == k) ++c;
  return c;
}

// ---------------------------------------------------------------------------
// Boundary of a 4-dimensional stratum: totally reducible points are the
// supports of 3x3 permutation matrices, partially reducible lines are the
// nine matrix entries.

struct IncidenceGraph {
  std::vector<std::array<int, 3>> points;           // permutation: row -> column
  std::vector<std::pair<int, int>> lines;           // (row, column)
  std::vector<std::pair<std::size_t, std::size_t>> incidences;  // (point, line)

  std::vector<std::size_t> points_on_line(std::size_t line) const {
    std::vector<std::size_t> out;
    for (auto [pt, ln] : incidences)
      if (ln == line) out.push_back(pt);
    return out;
  }
  std::vector<std::size_t> lines_through_point(std::size_t point) const {
    std::vector<std::size_t> out;
    for (auto [pt, ln] : incidences)
      if (pt == point) out.push_back(ln);
    return out;
  }
};

inline int permutation_sign(const std::array<int, 3>& p) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

inline IncidenceGraph boundary_incidence_type1() {
  IncidenceGraph g;
  std::array<int, 3> perm{0, 1, 2};
  do {
    g.points.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.lines.emplace_back(i, j);
  for (std::size_t pt = 0; pt < g.points.size(); ++pt)
    for (std::size_t ln = 0; ln < g.lines.size(); ++ln)
      if (g.points[pt][g.lines[ln].first] == g.lines[ln].second)
        g.incidences.emplace_back(pt, ln);
  return g;
}

/// True iff every line has 2 points, every point 3 lines, and the lines are
/// exactly the 9 edges between two classes of 3 points (K_{3,3}).
inline bool is_complete_bipartite_3_3(const IncidenceGraph& g) {
  if (g.points.size() != 6 || g.lines.size() != 9) return false;
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < g.points.size(); ++i)
    (permutation_sign(g.points[i]) > 0 ? even : odd).push_back(i);
  if (even.size() != 3 || odd.size() != 3) return false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t ln = 0; ln < g.lines.size(); ++ln) {
    auto pts = g.points_on_line(ln);
    if (pts.size() != 2) return false;
    bool a_even = permutation_sign(g.points[pts[0]]) > 0;
    bool b_even = permutation_sign(g.points[pts[1]]) > 0;
    if (a_even == b_even) return false;
    edges.emplace_back(a_even ? pts[0] : pts[1], a_even ? pts[1] : pts[0]);
  }
  for (std::size_t i = 0; i < g.points.size(); ++i)
    if (g.lines_through_point(i).size() != 3) return false;
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

}  // namespace toruschar

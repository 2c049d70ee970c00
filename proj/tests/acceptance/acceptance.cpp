// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "toruschar/census.hpp"
#include "toruschar/kclass.hpp"
#include "toruschar/knotpoly.hpp"
#include "toruschar/latquot.hpp"
#include "toruschar/oracle.hpp"
#include "toruschar/repnum.hpp"
#include "toruschar/verify.hpp"

using namespace toruschar;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

BigInt falling(long n, int r) {
  BigInt out = 1;
  for (int i = 0; i < r; ++i) out *= n - i;
  return out;
}

std::string pair_str(long m, long n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

Outcome oracle_formula() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [m, n] : coprime_pairs(10))
    for (int r : {2, 3}) {
      const BigInt want = exact_div(binomial(n - 1, r - 1) * binomial(m - 1, r - 1), r);
      if (BigInt(enumerate_F(r, KnotParams::make(m, n)).size()) != want)
        o.fail("|F| mismatch at r=" + std::to_string(r) + " " + pair_str(m, n));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 10) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.note = std::to_string(secs) + " s";
  return o;
}

Outcome dim2_census() {
  Outcome o;
  for (auto [m, n] : coprime_pairs(10)) {
    const BigInt want = exact_div(BigInt(n - 1) * (m - 1) * (n + m - 4), 2);
    if (BigInt(enumerate_G(KnotParams::make(m, n)).size()) != want) o.fail("|G| mismatch at " + pair_str(m, n));
  }
  return o;
}

Outcome proof_identities() {
  Outcome o;
  for (int r : {2, 3})
    for (long n = 2; n <= 8; ++n) {
      BigInt s = 0;
      for (long k = 0; k < n; ++k) s += n_side(r, n, k);
      if (s != falling(n, r)) o.fail("side sum at r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
  for (int r : {2, 3})
    for (auto [m, n] : coprime_pairs(8)) {
      for (const Orientation ori : {Orientation{m, n}, Orientation{n, m}}) {
        BigInt s = 0;
        for (long k = 0; k < m * n; ++k) s += n_table(r, ori, k, k);
        if (s != falling(m, r) * falling(n, r)) o.fail("N(k,k) sum at " + pair_str(ori.m, ori.n));
      }
    }
  return o;
}

Outcome stratum_sums() {
  Outcome o;
  bool seen_case[6] = {};
  bool parity[2] = {};
  for (auto [m, n] : coprime_pairs(13)) {
    const auto p = KnotParams::make(m, n);
    parity[p.has_even() ? 1 : 0] = true;
    for (int r : {2, 3})
      for (Group g : {Group::SL, Group::PGL})
        if (stratum_sum(census(g, r, p)) != kclass(g, r, p))
          o.fail(to_string(g) + std::to_string(r) + " stratum sum at " + pair_str(m, n));
    const int c1 = pgl3_case(p.n(), p.m()), c2 = pgl3_case(p.m(), p.n());
    if (c1 > 0) seen_case[c1] = true;
    if (c2 > 0) seen_case[c2] = true;
  }
  for (int c = 1; c <= 5; ++c)
    if (!seen_case[c]) o.fail("PGL3 case " + std::to_string(c) + " not exercised");
  if (!parity[0] || !parity[1]) o.fail("parity case not exercised");
  return o;
}

Outcome gl_relation() {
  Outcome o;
  for (auto [m, n] : coprime_pairs(13))
    for (int r : {2, 3}) {
      const auto p = KnotParams::make(m, n);
      const KClass want = (lefschetz() - KClass::constant(1)) * kclass_pgl(r, p);
      if (stratum_sum(census_gl(r, p)) != want || kclass_gl(r, p) != want)
        o.fail("GL relation at r=" + std::to_string(r) + " " + pair_str(m, n));
    }
  return o;
}

Outcome recovery() {
  Outcome o;
  int degenerate = 0;
  for (auto [m, n] : coprime_pairs(12)) {
    const auto got = recover_mn(kclass_sl(3, KnotParams::make(m, n)));
    if (got.small != m || got.large != n) o.fail("recover at " + pair_str(m, n));
    degenerate += m == 2;
  }
  if (degenerate != 5) o.fail("expected 5 pairs (2,n)");
  return o;
}

Outcome mu3_orbits() {
  Outcome o;
  using QV = QuotientVariant;
  using ST = StratumTag;
  for (auto [m, n] : coprime_pairs(13)) {
    const auto p = KnotParams::make(m, n);
    const auto counts = stratum_counts(Group::PGL, 3, p);
    const auto f = mu_action_on_labels(enumerate_F(3, p), 3);
    const auto g = mu_action_on_labels(enumerate_G(p), 3);
    const BigInt ff = f.fixed_labels, gf = g.fixed_labels;
    if (BigInt(f.orbits) - ff != count_of(counts, {ST::IrreducibleDim4, QV::Plain}) ||
        ff != count_of(counts, {ST::IrreducibleDim4, QV::Mu3FixedMaxDim}) ||
        BigInt(g.orbits) - gf != count_of(counts, {ST::IrreducibleDim2, QV::Plain}) ||
        gf != count_of(counts, {ST::IrreducibleDim2, QV::Mu3FixedSurface}))
      o.fail("orbit counts at " + pair_str(m, n));
    // Explicit fixed-component counts.
    BigInt want_g = 0, want_f = 0;
    if (n % 3 == 0) {
      want_g = m - 1;
      want_f = exact_div(BigInt(m - 1) * (m - 2), 6);
    } else if (m % 3 == 0) {
      want_g = n - 1;
      want_f = exact_div(BigInt(n - 1) * (n - 2), 6);
    }
    if (gf != want_g || ff != want_f) o.fail("fixed counts at " + pair_str(m, n));
  }
  return o;
}

Outcome alexander_props() {
  Outcome o;
  if (alexander(KnotParams::make(2, 3)).str() != "t^2-t+1") o.fail("trefoil");
  for (auto [m, n] : coprime_pairs(12)) {
    const auto a = alexander(KnotParams::make(m, n));
    if (a.degree() != (m - 1) * (n - 1) || a.eval(1) != 1 || !is_palindromic(a))
      o.fail("properties at " + pair_str(m, n));
  }
  return o;
}

Outcome line_counts() {
  Outcome o;
  for (auto [m, n] : coprime_pairs(8))
    if (!line_count_identity(KnotParams::make(m, n)).agree()) o.fail("at " + pair_str(m, n));
  const auto l = line_count_identity(KnotParams::make(3, 4));
  if (l.closed_form != 45) o.fail("(3,4) gives " + l.closed_form.str());
  return o;
}

Outcome curves() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rad(0.3, 3), ang(0, 2 * std::numbers::pi);
  std::uniform_int_distribution<int> pick(0, 3);
  double worst = 0;
  for (auto [m, n] : coprime_pairs(6)) {
    const auto cs = boundary_curves(KnotParams::make(m, n));
    for (int s = 0; s < 1000; ++s) {
      const auto& c = cs[static_cast<std::size_t>(s) % cs.size()];
      // delta^2 + delta^-2 = c: delta = +-e^{+-i pi k / mn}.
      const double th = std::numbers::pi * static_cast<double>(c.k) / static_cast<double>(m * n);
      const int w = pick(rng);
      const cplx delta = std::polar(w & 1 ? -1.0 : 1.0, w & 2 ? -th : th);
      const cplx t = std::polar(rad(rng), ang(rng));
      const auto [x, y] = parametrize_curve(delta, t);
      worst = std::max(worst, curve_residual(c, x, y).relative());
    }
  }
  if (worst >= 1e-9) o.fail("worst relative residual " + std::to_string(worst));
  return o;
}

Outcome lattice() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> rd(2, 12), kd(1, 5), wd(-40, 40);
  for (int i = 0; i < 500; ++i) {
    const long r = rd(rng);
    std::vector<long> w(static_cast<std::size_t>(kd(rng)));
    for (auto& x : w) x = wd(rng);
    try {
      const auto q = quotient_basis(w, r);
      if (!verify_quotient_basis(q.matrix, q.weights, q.r)) o.fail("verification failed");
    } catch (const std::exception& e) {
      o.fail(std::string("quotient_basis threw: ") + e.what());
    }
  }
  std::uniform_int_distribution<int> dim(1, 5), ent(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const auto R = static_cast<std::size_t>(dim(rng)), C = static_cast<std::size_t>(dim(rng));
    IntMatrix M(R, C);
    for (std::size_t a = 0; a < R; ++a)
      for (std::size_t b = 0; b < C; ++b) M(a, b) = ent(rng);
    const auto s = smith_normal_form(M);
    if (!(s.U * M * s.V == s.D)) o.fail("U M V != D");
    const auto ad = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };
    if (ad(determinant(s.U)) != 1 || ad(determinant(s.V)) != 1) o.fail("non-unimodular transform");
    for (std::size_t a = 0; a < R; ++a)
      for (std::size_t b = 0; b < C; ++b)
        if (a != b && s.D(a, b) != 0) o.fail("D not diagonal");
    for (std::size_t a = 0; a + 1 < std::min(R, C); ++a) {
      const BigInt d0 = s.D(a, a), d1 = s.D(a + 1, a + 1);
      if (d0 < 0 || d1 < 0) o.fail("negative invariant factor");
      if (d0 == 0 ? d1 != 0 : d1 % d0 != 0) o.fail("divisibility chain broken");
    }
  }
  return o;
}

Outcome numerics() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto p34 = KnotParams::make(3, 4), p23 = KnotParams::make(2, 3);
  const auto o34 = Orientation::of(p34), o23 = Orientation::of(p23);
  const auto F = enumerate_F(3, p34);
  if (F.size() != 1) o.fail("expected a unique tau at (3,4)");
  const auto tau = *F.labels.begin();
  std::mt19937_64 rng(0x5EED);
  for (int i = 0; i < 10; ++i) {
    const CMatrix M = random_annulus_matrix(3, rng);
    if (build_representation(tau, o34, M).relation_residual >= 1e-9) o.fail("relation residual");
    if (!is_irreducible(M)) o.fail("generic M reducible");
  }
  if (is_irreducible(CMatrix::Identity(3, 3))) o.fail("identity M irreducible");
  if (component_dimension_estimate(tau, o34) != 4) o.fail("tau dimension != 4");
  if (component_dimension_estimate(*enumerate_G(p23).labels.begin(), o23) != 2)
    o.fail("kappa dimension != 2");
  if (component_dimension_estimate(*enumerate_F(2, p23).labels.begin(), o23) != 1)
    o.fail("rank 2 dimension != 1");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 30) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.note = std::to_string(secs) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle equals max-dim count formula", oracle_formula},
      {"dim-2 census count", dim2_census},
      {"N-table sum identities", proof_identities},
      {"stratum sums equal closed classes", stratum_sums},
      {"GL relation", gl_relation},
      {"recovery round trip", recovery},
      {"mu3 orbit counts", mu3_orbits},
      {"Alexander polynomial properties", alexander_props},
      {"line-count identity", line_counts},
      {"boundary curve implicitization", curves},
      {"lattice quotient and SNF", lattice},
      {"numeric representation checks", numerics},
  };
  int failures = 0;
  int idx = 0;
  for (const auto& [name, fn] : criteria) {
    ++idx;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.ok;
    std::printf("%s %2d %s%s%s\n", o.ok ? "PASS" : "FAIL", idx, name, o.note.empty() ? "" : "  ",
                o.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", idx - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

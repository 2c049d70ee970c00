#pragma once

// Grid verification: oracle vs closed formulas, stratum sums vs closed
// classes, class recovery, line counts and Alexander polynomial properties,
// over all coprime pairs 2 <= m < n <= max.

#include <numeric>
#include <string>
#include <vector>

#include "toruschar/census.hpp"
#include "toruschar/kclass.hpp"
#include "toruschar/knotpoly.hpp"
#include "toruschar/oracle.hpp"
#include "toruschar/serialize.hpp"

namespace toruschar {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct PairReport {
  long m = 0, n = 0;
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

struct GridReport {
  long max = 0;
  std::vector<int> ranks;
  std::vector<PairReport> pairs;
  bool ok() const {
    for (const auto& p : pairs)
      if (!p.ok()) return false;
    return true;
  }
};

inline std::vector<std::pair<long, long>> coprime_pairs(long max) {
  std::vector<std::pair<long, long>> out;
  for (long m = 2; m <= max; ++m)
    for (long n = m + 1; n <= max; ++n)
      if (std::gcd(m, n) == 1) out.emplace_back(m, n);
  return out;
}

namespace verify_detail {

template <class F>
CheckResult run_check(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

inline CheckResult equal_check(const std::string& name, const BigInt& got, const BigInt& want) {
  return {name, got == want, "got " + got.str() + ", expected " + want.str()};
}

inline CheckResult poly_check(const std::string& name, const KClass& got, const KClass& want) {
  return {name, got == want, "got " + got.str() + ", expected " + want.str()};
}

}  // namespace verify_detail

inline PairReport verify_pair(long m, long n, const std::vector<int>& ranks,
                              const OracleConfig& cfg) {
  using namespace verify_detail;
  const auto p = KnotParams::make(m, n);
  PairReport rep{m, n, {}};
  auto add = [&](const std::string& name, auto&& f) { rep.checks.push_back(run_check(name, f)); };

  for (int r : ranks) {
    const std::string rs = std::to_string(r);
    add("oracle_F_r" + rs, [&] {
      return equal_check("oracle_F_r" + rs, enumerate_F(r, p, cfg).size(),
                         max_dim_component_count(r, p));
    });
    for (Group g : {Group::SL, Group::PGL, Group::GL}) {
      const std::string name = "stratum_sum_" + to_string(g) + rs;
      add(name, [&] { return poly_check(name, stratum_sum(census(g, r, p)), kclass(g, r, p)); });
    }
    add("gl_relation_r" + rs, [&] {
      return poly_check("gl_relation_r" + rs, stratum_sum(census_gl(r, p)),
                        (lefschetz() - KClass::constant(1)) * kclass_pgl(r, p));
    });
  }
  if (std::find(ranks.begin(), ranks.end(), 3) != ranks.end()) {
    add("oracle_G", [&] {
      const BigInt want = exact_div(BigInt(n - 1) * (m - 1) * (n + m - 4), 2);
      return equal_check("oracle_G", enumerate_G(p, cfg).size(), want);
    });
    add("mu3_orbits", [&] {
      const auto counts = stratum_counts(Group::PGL, 3, p);
      const auto f = mu_action_on_labels(enumerate_F(3, p, cfg), 3);
      const auto g = mu_action_on_labels(enumerate_G(p, cfg), 3);
      using QV = QuotientVariant;
      using ST = StratumTag;
      const bool ok =
          f.orbits - f.fixed_labels == count_of(counts, {ST::IrreducibleDim4, QV::Plain}) &&
          f.fixed_labels == count_of(counts, {ST::IrreducibleDim4, QV::Mu3FixedMaxDim}) &&
          g.orbits - g.fixed_labels == count_of(counts, {ST::IrreducibleDim2, QV::Plain}) &&
          g.fixed_labels == count_of(counts, {ST::IrreducibleDim2, QV::Mu3FixedSurface});
      return CheckResult{"mu3_orbits", ok,
                         "F orbits " + std::to_string(f.orbits) + " (fixed " +
                             std::to_string(f.fixed_labels) + "), G orbits " +
                             std::to_string(g.orbits) + " (fixed " +
                             std::to_string(g.fixed_labels) + ")"};
    });
    add("recover_mn", [&] {
      const auto got = recover_mn(kclass_sl(3, p));
      return CheckResult{"recover_mn", got.small == m && got.large == n,
                         "got (" + std::to_string(got.small) + "," + std::to_string(got.large) + ")"};
    });
    add("line_count", [&] {
      const auto l = line_count_identity(p, cfg);
      return CheckResult{"line_count", l.agree(),
                         l.from_strata.str() + " / " + l.closed_form.str() + " / " +
                             l.from_roots.str()};
    });
  }
  add("alexander", [&] {
    const auto a = alexander(p);
    const bool ok = a.degree() == (m - 1) * (n - 1) && a.eval(1) == 1 && is_palindromic(a);
    return CheckResult{"alexander", ok, a.str()};
  });
  return rep;
}

inline GridReport verify_grid(long max, const std::vector<int>& ranks, const OracleConfig& cfg) {
  GridReport g{max, ranks, {}};
  for (auto [m, n] : coprime_pairs(max)) g.pairs.push_back(verify_pair(m, n, ranks, cfg));
  return g;
}

inline json grid_report_to_json(const GridReport& g) {
  json pairs = json::array();
  for (const auto& p : g.pairs) {
    json checks = json::array();
    for (const auto& c : p.checks)
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    pairs.push_back({{"m", p.m}, {"n", p.n}, {"ok", p.ok()}, {"checks", checks}});
  }
  return {{"grid", g.max}, {"ranks", g.ranks}, {"ok", g.ok()}, {"pairs", pairs}};
}

}  // namespace toruschar

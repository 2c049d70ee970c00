#pragma once

// Brute-force ground truth over roots of unity. Everything here works with
// RootExp arithmetic (powers and products checked as roots), independent of
// the congruence-solving label construction used by the census.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "toruschar/errors.hpp"
#include "toruschar/knot.hpp"
#include "toruschar/roots.hpp"

namespace toruschar {

struct OracleConfig {
  /// Upper bound on candidate subsets examined plus labels produced.
  std::uint64_t budget = 1'000'000;
};

struct LabelSet {
  int r = 0;
  long m = 0;
  long n = 0;
  std::set<EigenLabel> labels;
  std::size_t size() const { return labels.size(); }
};

namespace oracle_detail {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void spend(std::uint64_t units) {
    used_ += units;
    if (used_ > limit_)
      throw BudgetExceeded("oracle enumeration exceeded its budget of " +
                           std::to_string(limit_) + " candidate units");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Roots z of order dividing `pool_order` with z^power == target.
inline std::vector<RootExp> roots_with_power(std::int64_t pool_order,
                                             std::int64_t power,
                                             const RootExp& target) {
  std::vector<RootExp> out;
  for (std::int64_t k = 0; k < pool_order; ++k) {
    RootExp z(k, pool_order);
    if (z.pow(power) == target) out.push_back(z);
  }
  return out;
}

/// Calls f on every strictly increasing index r-subset of [0, size).
inline void for_each_subset(std::size_t size, int r,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(idx.size()) == r) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < size; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

inline RootExp product(const std::vector<RootExp>& zs) {
  RootExp acc = RootExp::one();
  for (const auto& z : zs) acc = acc * z;
  return acc;
}

inline std::vector<std::int64_t> exps_at(const std::vector<RootExp>& zs,
                                         std::int64_t order) {
  std::vector<std::int64_t> out;
  for (const auto& z : zs) out.push_back(z.at_order(order).k());
  return out;
}

/// r-element sets of distinct roots z with z^power = varpi and prod z = 1.
inline std::vector<std::vector<RootExp>> distinct_sets(
    std::int64_t pool_order, std::int64_t power, const RootExp& varpi, int r,
    Budget& budget) {
  auto cand = roots_with_power(pool_order, power, varpi);
  std::vector<std::vector<RootExp>> out;
  for_each_subset(cand.size(), r, [&](const std::vector<std::size_t>& idx) {
    budget.spend(1);
    std::vector<RootExp> zs;
    for (auto i : idx) zs.push_back(cand[i]);
    if (product(zs).is_one()) out.push_back(std::move(zs));
  });
  return out;
}

/// Multisets {z, z, z'} with z != z', z^power = z'^power = varpi and z^2 z' = 1.
inline std::vector<std::vector<RootExp>> repeated_sets(std::int64_t pool_order,
                                                       std::int64_t power,
                                                       const RootExp& varpi,
                                                       Budget& budget) {
  auto cand = roots_with_power(pool_order, power, varpi);
  std::vector<std::vector<RootExp>> out;
  for (const auto& z : cand)
    for (const auto& zp : cand) {
      budget.spend(1);
      if (z == zp) continue;
      if ((z * z * zp).is_one()) out.push_back({z, z, zp});
    }
  return out;
}

}  // namespace oracle_detail

/// F for the orientation o: pairs of distinct r-sets of eigenvalues with
/// eps_i^n = eps'_j^m = varpi, varpi^r = 1, both products 1.
inline LabelSet enumerate_F(int r, const Orientation& o,
                            const OracleConfig& cfg = {}) {
  using namespace oracle_detail;
  Budget budget(cfg.budget);
  LabelSet out{r, o.m, o.n, {}};
  const std::int64_t N = static_cast<std::int64_t>(r) * o.m * o.n;
  for (std::int64_t k = 0; k < r; ++k) {
    const RootExp varpi(k, r);
    auto as = distinct_sets(static_cast<std::int64_t>(r) * o.n, o.n, varpi, r, budget);
    auto bs = distinct_sets(static_cast<std::int64_t>(r) * o.m, o.m, varpi, r, budget);
    budget.spend(as.size() * bs.size());
    for (const auto& a : as)
      for (const auto& b : bs)
        out.labels.insert(EigenLabel(N, exps_at(a, N), exps_at(b, N)));
  }
  return out;
}

inline LabelSet enumerate_F(int r, const KnotParams& p,
                            const OracleConfig& cfg = {}) {
  return enumerate_F(r, Orientation::of(p), cfg);
}

/// G for rank 3: one side has a repeated eigenvalue, the other is distinct.
inline LabelSet enumerate_G(const Orientation& o, const OracleConfig& cfg = {}) {
  using namespace oracle_detail;
  constexpr int r = 3;
  Budget budget(cfg.budget);
  LabelSet out{r, o.m, o.n, {}};
  const std::int64_t N = r * o.m * o.n;
  for (std::int64_t k = 0; k < r; ++k) {
    const RootExp varpi(k, r);
    auto a_dist = distinct_sets(r * o.n, o.n, varpi, r, budget);
    auto b_dist = distinct_sets(r * o.m, o.m, varpi, r, budget);
    auto a_rep = repeated_sets(r * o.n, o.n, varpi, budget);
    auto b_rep = repeated_sets(r * o.m, o.m, varpi, budget);
    budget.spend(a_rep.size() * b_dist.size() + a_dist.size() * b_rep.size());
    for (const auto& a : a_rep)
      for (const auto& b : b_dist)
        out.labels.insert(EigenLabel(N, exps_at(a, N), exps_at(b, N)));
    for (const auto& a : a_dist)
      for (const auto& b : b_rep)
        out.labels.insert(EigenLabel(N, exps_at(a, N), exps_at(b, N)));
  }
  return out;
}

inline LabelSet enumerate_G(const KnotParams& p, const OracleConfig& cfg = {}) {
  return enumerate_G(Orientation::of(p), cfg);
}

/// Number of ordered tuples of r distinct roots z with z^power = e^{2 pi i k/r}
/// and product 1.
inline std::uint64_t n_side(int r, long power, long k,
                            const OracleConfig& cfg = {}) {
  using namespace oracle_detail;
  Budget budget(cfg.budget);
  const RootExp target(k, r);
  auto cand = roots_with_power(static_cast<std::int64_t>(r) * power, power, target);
  std::uint64_t count = 0;
  std::vector<std::size_t> idx;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(idx.size()) == r) {
      budget.spend(1);
      std::vector<RootExp> zs;
      for (auto i : idx) zs.push_back(cand[i]);
      if (product(zs).is_one()) ++count;
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
      idx.push_back(i);
      rec();
      idx.pop_back();
    }
  };
  rec();
  return count;
}

/// N(k1, k2): ordered distinct tuples (eps_i) with eps_i^n = e^{2 pi i k1/r}
/// and (eps'_j) with eps'_j^m = e^{2 pi i k2/r}, both with product 1.
inline std::uint64_t n_table(int r, const Orientation& o, long k1, long k2,
                             const OracleConfig& cfg = {}) {
  return n_side(r, o.n, k1, cfg) * n_side(r, o.m, k2, cfg);
}

struct OrbitReport {
  std::size_t orbits = 0;
  std::size_t fixed_labels = 0;
  /// Stabilizer order of each orbit, sorted.
  std::vector<std::size_t> stabilizer_sizes;
  /// Number of labels fixed by t = e^{2 pi i j / r}, indexed by j.
  std::vector<std::size_t> fixed_by_element;
  /// Canonical representative (smallest label) of each orbit.
  std::vector<EigenLabel> representatives;
};

/// Orbits of mu_r acting by t.(A, B) = (t^m A, t^n B). The action is
/// computed by multiplying each eigenvalue by t^m (resp. t^n) as RootExp.
inline OrbitReport mu_action_on_labels(const LabelSet& ls, int r) {
  const Orientation o{ls.m, ls.n};
  auto act = [&](const EigenLabel& l, std::int64_t j) {
    const RootExp t(j, r);
    std::vector<std::int64_t> a, b;
    for (auto e : l.a_exps) a.push_back((RootExp(e, l.order) * t.pow(o.m)).at_order(l.order).k());
    for (auto e : l.b_exps) b.push_back((RootExp(e, l.order) * t.pow(o.n)).at_order(l.order).k());
    return EigenLabel(l.order, a, b);
  };
  OrbitReport rep;
  rep.fixed_by_element.assign(r, 0);
  std::set<EigenLabel> done;
  for (const auto& l : ls.labels) {
    for (int j = 0; j < r; ++j)
      if (act(l, j) == l) ++rep.fixed_by_element[j];
    if (done.count(l)) continue;
    std::set<EigenLabel> orb;
    for (int j = 0; j < r; ++j) orb.insert(act(l, j));
    for (const auto& x : orb) {
      if (!ls.labels.count(x))
        throw InternalError("label set is not closed under the mu_r action");
      done.insert(x);
    }
    ++rep.orbits;
    rep.stabilizer_sizes.push_back(static_cast<std::size_t>(r) / orb.size());
    if (orb.size() == 1) ++rep.fixed_labels;
    rep.representatives.push_back(*orb.begin());
  }
  std::sort(rep.stabilizer_sizes.begin(), rep.stabilizer_sizes.end());
  return rep;
}

}  // namespace toruschar

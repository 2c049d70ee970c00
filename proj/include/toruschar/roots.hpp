#pragma once

// Exact roots of unity as exponents, and the eigenvalue labels (tau, kappa)
// that index components of the irreducible locus.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "toruschar/errors.hpp"
#include "toruschar/knot.hpp"

namespace toruschar {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// e^{2 pi i k / order}, k reduced mod order.
class RootExp {
 public:
  RootExp(std::int64_t k, std::int64_t order) : order_(order) {
    if (order < 1) throw InternalError("RootExp order must be >= 1");
    k_ = mod_floor(k, order);
  }
  static RootExp one() { return {0, 1}; }

  std::int64_t k() const { return k_; }
  std::int64_t order() const { return order_; }

  /// Same root expressed at a multiple of the current order.
  RootExp at_order(std::int64_t order) const {
    if (order % order_ != 0)
      throw InternalError("RootExp::at_order: " + std::to_string(order) +
                          " is not a multiple of " + std::to_string(order_));
    return {k_ * (order / order_), order};
  }

  RootExp pow(std::int64_t e) const { return {mod_floor(k_ * mod_floor(e, order_), order_), order_}; }
  RootExp inverse() const { return {-k_, order_}; }

  friend RootExp operator*(const RootExp& a, const RootExp& b) {
    std::int64_t l = std::lcm(a.order_, b.order_);
    return {a.at_order(l).k_ + b.at_order(l).k_, l};
  }
  friend bool operator==(const RootExp& a, const RootExp& b) {
    std::int64_t l = std::lcm(a.order_, b.order_);
    return a.at_order(l).k_ == b.at_order(l).k_;
  }
  friend bool operator!=(const RootExp& a, const RootExp& b) { return !(a == b); }

  bool is_one() const { return k_ == 0; }

 private:
  std::int64_t k_ = 0;
  std::int64_t order_ = 1;
};

enum class Group { SL, GL, PGL };

inline std::string to_string(Group g) {
  switch (g) {
    case Group::SL: return "SL";
    case Group::GL: return "GL";
    case Group::PGL: return "PGL";
  }
  return "?";
}

/// A component label: eigenvalue multisets of A (a_exps) and B (b_exps),
/// as exponents at the common order N = r*m*n. Both lists are kept sorted,
/// which is the canonical representative modulo S_r x S_r.
struct EigenLabel {
  std::int64_t order = 1;
  std::vector<std::int64_t> a_exps;
  std::vector<std::int64_t> b_exps;

  EigenLabel() = default;
  EigenLabel(std::int64_t order_, std::vector<std::int64_t> a,
             std::vector<std::int64_t> b)
      : order(order_), a_exps(std::move(a)), b_exps(std::move(b)) {
    canonicalize();
  }

  std::size_t rank() const { return a_exps.size(); }

  void canonicalize() {
    for (auto& e : a_exps) e = mod_floor(e, order);
    for (auto& e : b_exps) e = mod_floor(e, order);
    std::sort(a_exps.begin(), a_exps.end());
    std::sort(b_exps.begin(), b_exps.end());
  }

  bool a_distinct() const {
    return std::adjacent_find(a_exps.begin(), a_exps.end()) == a_exps.end();
  }
  bool b_distinct() const {
    return std::adjacent_find(b_exps.begin(), b_exps.end()) == b_exps.end();
  }

  friend bool operator==(const EigenLabel& x, const EigenLabel& y) {
    return x.order == y.order && x.a_exps == y.a_exps && x.b_exps == y.b_exps;
  }
  friend bool operator!=(const EigenLabel& x, const EigenLabel& y) {
    return !(x == y);
  }
  friend bool operator<(const EigenLabel& x, const EigenLabel& y) {
    return std::tie(x.order, x.a_exps, x.b_exps) <
           std::tie(y.order, y.a_exps, y.b_exps);
  }
};

/// Common scalar varpi with A^n = varpi Id, as an exponent at label.order.
inline std::int64_t label_varpi(const EigenLabel& l, const Orientation& o) {
  if (l.a_exps.empty()) throw InvalidLabel("empty label");
  return mod_floor(l.a_exps.front() * o.n, l.order);
}

/// Checks the label invariants for the given orientation: common varpi on
/// both sides (eps_i^n = eps'_j^m = varpi), varpi^r = 1, equal products
/// (and product 1 when `sl`). Throws InvalidLabel with the first violation.
inline void validate_label(const EigenLabel& l, const Orientation& o,
                           bool sl = true) {
  const std::int64_t r = static_cast<std::int64_t>(l.a_exps.size());
  if (r < 1 || l.b_exps.size() != l.a_exps.size())
    throw InvalidLabel("label sides must be nonempty and of equal size");
  if (l.order < 1) throw InvalidLabel("label order must be >= 1");
  for (auto e : l.a_exps)
    if (e < 0 || e >= l.order) throw InvalidLabel("exponent not reduced");
  for (auto e : l.b_exps)
    if (e < 0 || e >= l.order) throw InvalidLabel("exponent not reduced");
  if (!std::is_sorted(l.a_exps.begin(), l.a_exps.end()) ||
      !std::is_sorted(l.b_exps.begin(), l.b_exps.end()))
    throw InvalidLabel("label is not in canonical (sorted) form");
  const std::int64_t w = label_varpi(l, o);
  for (auto e : l.a_exps)
    if (mod_floor(e * o.n, l.order) != w)
      throw InvalidLabel("eigenvalues of A do not share a common n-th power");
  for (auto e : l.b_exps)
    if (mod_floor(e * o.m, l.order) != w)
      throw InvalidLabel("B eigenvalues' m-th power differs from varpi");
  if (mod_floor(w * r, l.order) != 0) throw InvalidLabel("varpi^r != 1");
  std::int64_t sa = 0, sb = 0;
  for (auto e : l.a_exps) sa = mod_floor(sa + e, l.order);
  for (auto e : l.b_exps) sb = mod_floor(sb + e, l.order);
  if (sa != sb) throw InvalidLabel("det A != det B");
  if (sl && sa != 0) throw InvalidLabel("determinant is not 1");
}

inline bool is_valid_label(const EigenLabel& l, const Orientation& o,
                           bool sl = true) {
  try {
    validate_label(l, o, sl);
    return true;
  } catch (const InvalidLabel&) {
    return false;
  }
}

/// The action of t = e^{2 pi i j / r} in mu_r: (A, B) -> (t^m A, t^n B).
inline EigenLabel act_mu(const EigenLabel& l, const Orientation& o,
                         std::int64_t j) {
  const std::int64_t r = static_cast<std::int64_t>(l.rank());
  const std::int64_t step = l.order / r;  // exponent of e^{2 pi i / r}
  EigenLabel out = l;
  for (auto& e : out.a_exps) e += j * o.m % r * step;
  for (auto& e : out.b_exps) e += j * o.n % r * step;
  out.canonicalize();
  return out;
}

/// Exchanges the roles of A and B; together with swapping (m,n) this maps
/// labels of K_{m,n} to labels of K_{n,m}.
inline EigenLabel swap_sides(const EigenLabel& l) {
  return EigenLabel(l.order, l.b_exps, l.a_exps);
}

inline std::string to_string(const EigenLabel& l) {
  auto side = [&](const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  return "[" + side(l.a_exps) + "," + side(l.b_exps) + "]/" +
         std::to_string(l.order);
}

}  // namespace toruschar

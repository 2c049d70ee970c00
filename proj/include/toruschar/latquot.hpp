#pragma once

// Quotients of (C*)^k by a cyclic group mu_r acting through integer weights:
// an explicit unimodular monomial change of coordinates under which the
// action only touches the last coordinate.

#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "toruschar/errors.hpp"
#include "toruschar/kring.hpp"

namespace toruschar {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InternalError("IntMatrix: ragged initializer");
      for (long long v : r) a_.emplace_back(v);
    }
  }
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  /// row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& c) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
  }
  /// col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& c) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }
  void negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw InternalError("IntMatrix: dimension mismatch");
    IntMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InternalError("determinant of a non-square matrix");
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix U, D, V;
};

namespace latquot_detail {

struct FullSmith {
  IntMatrix U, Uinv, D, V, Vinv;
};

inline BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline FullSmith smith_full(const IntMatrix& M) {
  const std::size_t R = M.rows(), C = M.cols();
  FullSmith f{IntMatrix::identity(R), IntMatrix::identity(R), M, IntMatrix::identity(C),
              IntMatrix::identity(C)};
  IntMatrix& D = f.D;
  auto row_add = [&](std::size_t i, std::size_t j, const BigInt& c) {
    D.add_row(i, j, c);
    f.U.add_row(i, j, c);
    f.Uinv.add_col(j, i, -c);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const BigInt& c) {
    D.add_col(i, j, c);
    f.V.add_col(i, j, c);
    f.Vinv.add_row(j, i, -c);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    D.swap_rows(i, j);
    f.U.swap_rows(i, j);
    f.Uinv.swap_cols(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    D.swap_cols(i, j);
    f.V.swap_cols(i, j);
    f.Vinv.swap_rows(i, j);
  };

  const std::size_t steps = std::min(R, C);
  for (std::size_t t = 0; t < steps; ++t) {
    bool empty = false;
    while (true) {
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (D(i, j) != 0 && (pi == R || abs_big(D(i, j)) < abs_big(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == R) {
        empty = true;
        break;
      }
      row_swap(t, pi);
      col_swap(t, pj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        row_add(i, t, -BigInt(D(i, t) / D(t, t)));
        dirty = dirty || D(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        col_add(j, t, -BigInt(D(t, j) / D(t, t)));
        dirty = dirty || D(t, j) != 0;
      }
      if (dirty) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < R && !fixed; ++i)
        for (std::size_t j = t + 1; j < C && !fixed; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (empty) break;
    if (D(t, t) < 0) {
      D.negate_row(t);
      f.U.negate_row(t);
      f.Uinv.negate_col(t);
    }
  }
  return f;
}

inline BigInt mod_pos(const BigInt& a, const BigInt& r) {
  BigInt x = a % r;
  return x < 0 ? BigInt(x + r) : x;
}

/// Inverse of a modulo r (gcd(a, r) = 1 assumed), in [0, r).
inline BigInt inverse_mod(const BigInt& a, const BigInt& r) {
  BigInt old_r = mod_pos(a, r), cur_r = r, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    BigInt q = old_r / cur_r;
    BigInt t = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  if (old_r != 1) throw InternalError("inverse_mod: not a unit");
  return mod_pos(old_s, r);
}

}  // namespace latquot_detail

/// U M V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
inline SmithForm smith_normal_form(const IntMatrix& M) {
  auto f = latquot_detail::smith_full(M);
  return {std::move(f.U), std::move(f.D), std::move(f.V)};
}

struct QuotientBasis {
  /// The effective action the matrix is built for: mu_r acting with these
  /// weights (the input action divided by its kernel).
  std::vector<long> weights;
  long r = 1;
  IntMatrix matrix;
  /// Input action was trivial; the matrix is the identity.
  bool trivial = false;
  /// Order of the kernel of the input action.
  long kernel = 1;
};

/// True iff det M = 1, rows 1..k-1 pair to 0 and row k pairs to 1 mod r.
inline bool verify_quotient_basis(const IntMatrix& M, const std::vector<long>& weights, long r) {
  const std::size_t k = weights.size();
  if (k == 0 || M.rows() != k || M.cols() != k || r < 1) return false;
  if (determinant(M) != 1) return false;
  for (std::size_t j = 0; j < k; ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < k; ++i) s += M(j, i) * weights[i];
    if (latquot_detail::mod_pos(s, r) != (j + 1 == k ? 1 % r : 0)) return false;
  }
  return true;
}

/// Unimodular M such that in u_j = prod_i t_i^{M_ji} the generator of the
/// (effective) mu_r acts as (u_1, ..., u_{k-1}, xi u_k).
inline QuotientBasis quotient_basis(const std::vector<long>& weights, long r) {
  using namespace latquot_detail;
  const std::size_t k = weights.size();
  if (k == 0) throw InternalError("quotient_basis needs at least one weight");
  if (r < 1) throw InternalError("quotient_basis needs r >= 1");

  long g = r;
  for (long a : weights) g = std::gcd(g, a);
  QuotientBasis out;
  out.kernel = g;
  out.r = r / g;
  for (long a : weights) out.weights.push_back(static_cast<long>(mod_pos(a / g, out.r)));
  if (out.r == 1) {
    out.trivial = true;
    out.matrix = IntMatrix::identity(k);
    return out;
  }
  const BigInt rr = out.r;
  if (k == 1) {
    // mu_r acting on C* by a unit weight: take the generator that acts by xi.
    out.weights = {1};
    out.matrix = IntMatrix::identity(1);
    return out;
  }

  // U a = g0 e_1 with U unimodular.
  IntMatrix a(k, 1);
  for (std::size_t i = 0; i < k; ++i) a(i, 0) = out.weights[i];
  auto col = smith_full(a);
  IntMatrix U = col.U;
  if (col.V(0, 0) < 0) U.negate_row(0);
  const BigInt g0 = col.D(0, 0);
  const BigInt x = inverse_mod(g0, rr);

  IntMatrix M(k, k);
  for (std::size_t j = 0; j + 1 < k; ++j)
    for (std::size_t i = 0; i < k; ++i) M(j, i) = U(j + 1, i);
  for (std::size_t i = 0; i < k; ++i) M(k - 1, i) = x * U(0, i);
  const BigInt y = inverse_mod(mod_pos(determinant(M), rr), rr);
  for (std::size_t i = 0; i < k; ++i) M(0, i) *= y;

  // Make det exactly 1 by changing elementary divisors by multiples of r.
  const std::size_t cap = 4 * k;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > cap) throw InternalError("quotient_basis: repair loop did not converge");
    auto f = smith_full(M);
    std::size_t j = 0;
    while (j + 1 < k && f.D(j, j) == 1) ++j;
    IntMatrix D = f.D;
    if (j + 1 == k) {
      const BigInt sigma = determinant(f.Uinv) * determinant(f.Vinv);
      if (mod_pos(D(k - 1, k - 1) - sigma, rr) != 0)
        throw InternalError("quotient_basis: last elementary divisor is not det-compatible");
      D(k - 1, k - 1) = sigma;
      out.matrix = f.Uinv * D * f.Vinv;
      break;
    }
    BigInt others = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) others *= D(i, i);
    const BigInt dj = D(j, j);
    BigInt chosen = 0;
    bool found = false;
    for (long s = 1; s < 100000 && !found; ++s)
      for (long sign : {1L, -1L}) {
        const BigInt cand = dj + sign * s * rr;
        if (cand != 0 && gcd(cand, others) == 1) {
          chosen = cand;
          found = true;
          break;
        }
      }
    if (!found) throw InternalError("quotient_basis: no coprime shift of an elementary divisor");
    D(j, j) = chosen;
    M = f.Uinv * D * f.Vinv;
  }
  if (!verify_quotient_basis(out.matrix, out.weights, out.r))
    throw InternalError("quotient_basis produced an invalid matrix " + out.matrix.str());
  return out;
}

}  // namespace toruschar

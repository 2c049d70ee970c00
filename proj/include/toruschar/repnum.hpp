#pragma once

// Numerical representations built from component labels: (A, B) with
// A = diag(a_eigs), B = M diag(b_eigs) M^-1; irreducibility by the
// zero-block test on M; dimension by Jacobian rank of the character map.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "toruschar/errors.hpp"
#include "toruschar/knot.hpp"
#include "toruschar/roots.hpp"

namespace toruschar {

using CMatrix = Eigen::MatrixXcd;
using cdouble = std::complex<double>;

struct RepConfig {
  double fd_step = 1e-5;
  double rank_rel_tol = 1e-6;
  double zero_tol = 1e-9;
  std::uint64_t seed = 0x5EED;
  int samples = 5;
};

struct RepPair {
  CMatrix A, B, M;
  EigenLabel label;
  Orientation orientation{0, 0};
  double relation_residual = 0;  // |A^n - B^m| / (|A|^n + |B|^m)
  double varpi_residual = 0;     // |A^n - varpi I|
};

inline cdouble root_value(std::int64_t k, std::int64_t order) {
  const double th = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
  return {std::cos(th), std::sin(th)};
}

inline CMatrix diag_of(const std::vector<std::int64_t>& exps, std::int64_t order) {
  CMatrix d = CMatrix::Zero(static_cast<Eigen::Index>(exps.size()),
                            static_cast<Eigen::Index>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i)
    d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = root_value(exps[i], order);
  return d;
}

inline CMatrix matrix_power(const CMatrix& X, long e) {
  CMatrix out = CMatrix::Identity(X.rows(), X.cols());
  CMatrix base = X;
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

inline RepPair build_representation(const EigenLabel& label, const Orientation& o,
                                    const CMatrix& M) {
  validate_label(label, o);
  const auto r = static_cast<Eigen::Index>(label.rank());
  if (M.rows() != r || M.cols() != r) throw SingularM("M must be " + std::to_string(r) + "x" + std::to_string(r));
  const double norm = M.norm();
  if (std::abs(M.determinant()) <= 1e-8 * std::pow(norm, static_cast<double>(r)))
    throw SingularM("eigenvector matrix M is numerically singular");
  RepPair rep;
  rep.label = label;
  rep.orientation = o;
  rep.M = M;
  rep.A = diag_of(label.a_exps, label.order);
  rep.B = M * diag_of(label.b_exps, label.order) * M.inverse();
  const CMatrix An = matrix_power(rep.A, o.n), Bm = matrix_power(rep.B, o.m);
  rep.relation_residual =
      (An - Bm).norm() / (std::pow(rep.A.norm(), static_cast<double>(o.n)) +
                          std::pow(rep.B.norm(), static_cast<double>(o.m)));
  const cdouble varpi = root_value(label_varpi(label, o), label.order);
  rep.varpi_residual = (An - varpi * CMatrix::Identity(r, r)).norm();
  return rep;
}

struct IrreducibilityReport {
  bool irreducible = true;
  /// Some block is small but above tolerance, so the verdict may depend on
  /// the tolerance.
  bool borderline = false;
  double smallest_block = 0;
};

/// Zero-block test: the pair is reducible iff for some 0 < p < r there are
/// p columns of M supported on p rows (a common invariant subspace spanned by
/// eigenvectors of both A and B). M is first balanced so each row and column
/// has max modulus 1, which makes the test invariant under row/column scaling.
inline IrreducibilityReport irreducibility_report(const CMatrix& M, double tol = 1e-9) {
  const Eigen::Index r = M.rows();
  Eigen::MatrixXd W = M.cwiseAbs();
  for (int it = 0; it < 50; ++it) {
    for (Eigen::Index i = 0; i < r; ++i) {
      const double mx = W.row(i).maxCoeff();
      if (mx > 0) W.row(i) /= mx;
    }
    for (Eigen::Index j = 0; j < r; ++j) {
      const double mx = W.col(j).maxCoeff();
      if (mx > 0) W.col(j) /= mx;
    }
  }
  IrreducibilityReport rep;
  rep.smallest_block = std::numeric_limits<double>::infinity();
  const unsigned full = (1u << r) - 1;
  for (unsigned rows = 1; rows < full; ++rows)
    for (unsigned cols = 1; cols < full; ++cols) {
      if (std::popcount(rows) != std::popcount(cols)) continue;
      double mx = 0;
      for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j)
          if (!(rows >> i & 1u) && (cols >> j & 1u)) mx = std::max(mx, W(i, j));
      rep.smallest_block = std::min(rep.smallest_block, mx);
      if (mx <= tol) rep.irreducible = false;
      else if (mx <= 1e3 * tol) rep.borderline = true;
    }
  return rep;
}

inline bool is_irreducible(const CMatrix& M, double tol = 1e-9) {
  return irreducibility_report(M, tol).irreducible;
}

/// Words over x, y (X, Y are the inverses), with optional integer exponents:
/// "xy", "xY", "x^2y", "x^-1y^3".
inline std::vector<std::pair<char, long>> parse_word(const std::string& w) {
  std::vector<std::pair<char, long>> out;
  std::size_t i = 0;
  while (i < w.size()) {
    const char c = w[i];
    if (c != 'x' && c != 'y' && c != 'X' && c != 'Y')
      throw InvalidWord("unexpected character '" + std::string(1, c) + "' in word \"" + w + "\"");
    ++i;
    long e = 1;
    if (i < w.size() && w[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < w.size() && w[j] == '-') ++j;
      const std::size_t digits = j;
      while (j < w.size() && std::isdigit(static_cast<unsigned char>(w[j]))) ++j;
      if (j == digits) throw InvalidWord("missing exponent in word \"" + w + "\"");
      e = std::stol(w.substr(i, j - i));
      i = j;
    }
    if (c == 'X' || c == 'Y') e = -e;
    out.emplace_back(static_cast<char>(std::tolower(c)), e);
  }
  return out;
}

inline CMatrix evaluate_word(const CMatrix& A, const CMatrix& B, const std::string& w) {
  CMatrix out = CMatrix::Identity(A.rows(), A.cols());
  const CMatrix Ai = A.inverse(), Bi = B.inverse();
  for (const auto& [g, e] : parse_word(w)) {
    const CMatrix& base = g == 'x' ? (e >= 0 ? A : Ai) : (e >= 0 ? B : Bi);
    out = out * matrix_power(base, std::abs(e));
  }
  return out;
}

inline std::vector<cdouble> character_vector(const CMatrix& A, const CMatrix& B,
                                             const std::vector<std::string>& words) {
  std::vector<cdouble> out;
  for (const auto& w : words) out.push_back(evaluate_word(A, B, w).trace());
  return out;
}

inline std::vector<cdouble> character_vector(const RepPair& rep,
                                             const std::vector<std::string>& words) {
  return character_vector(rep.A, rep.B, words);
}

/// Trace functions used for the dimension estimate.
inline const std::vector<std::string>& default_words() {
  static const std::vector<std::string> w = {
      "x",    "y",    "x^2",  "y^2",  "xy",   "xY",   "x^2y", "xy^2",
      "x^2Y", "xY^2", "xyxy", "xYxY", "x^2y^2", "x^2Y^2", "xyXY", "xyxY"};
  return w;
}

/// Uniform on the annulus 0.5 <= |z| <= 2.
inline CMatrix random_annulus_matrix(Eigen::Index r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rad(0.5, 2.0), ang(0, 2 * std::numbers::pi);
  CMatrix M(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) M(i, j) = std::polar(rad(rng), ang(rng));
  return M;
}

inline int numerical_rank(const CMatrix& J, double rel_tol) {
  Eigen::JacobiSVD<CMatrix> svd(J);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++rank;
  return rank;
}

/// Complex rank of d(traces)/d(entries of M) at one M.
inline int character_jacobian_rank(const EigenLabel& label, const Orientation& o,
                                   const CMatrix& M, const RepConfig& cfg) {
  const auto& words = default_words();
  const Eigen::Index r = M.rows();
  CMatrix J(static_cast<Eigen::Index>(words.size()), r * r);
  const double h = cfg.fd_step;
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) {
      CMatrix Mp = M, Mm = M;
      Mp(i, j) += h;
      Mm(i, j) -= h;
      const auto fp = character_vector(build_representation(label, o, Mp), words);
      const auto fm = character_vector(build_representation(label, o, Mm), words);
      for (std::size_t w = 0; w < words.size(); ++w)
        J(static_cast<Eigen::Index>(w), i * r + j) = (fp[w] - fm[w]) / (2 * h);
    }
  return numerical_rank(J, cfg.rank_rel_tol);
}

/// Median Jacobian rank over random generic M. The T x_D T scaling (and, for
/// a repeated eigenvalue, the larger centralizer) acts trivially on
/// characters, so the rank is the dimension of the component.
inline int component_dimension_estimate(const EigenLabel& label, const Orientation& o,
                                        const RepConfig& cfg = {}) {
  std::mt19937_64 rng(cfg.seed);
  const auto r = static_cast<Eigen::Index>(label.rank());
  std::vector<int> ranks;
  int attempts = 0;
  while (static_cast<int>(ranks.size()) < cfg.samples) {
    if (++attempts > 10 * cfg.samples + 10)
      throw DegenerateSample("no generic sample found for the dimension estimate");
    const CMatrix M = random_annulus_matrix(r, rng);
    try {
      const auto rep = build_representation(label, o, M);
      if (rep.relation_residual > 1e-9 || !is_irreducible(M, 1e-6)) continue;
      ranks.push_back(character_jacobian_rank(label, o, M, cfg));
    } catch (const SingularM&) {
      continue;
    }
  }
  std::sort(ranks.begin(), ranks.end());
  return ranks[ranks.size() / 2];
}

}  // namespace toruschar

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "toruschar/errors.hpp"

namespace toruschar {

/// Torus knot type (m, n) with group <x, y | x^n = y^m>.
///
/// The pair is normalized so that n is odd (at most one of m, n is even);
/// `swapped` records whether the caller's pair was exchanged to get there.
/// K_{m,n} and K_{n,m} are the same knot, so every count is symmetric.
class KnotParams {
 public:
  static KnotParams make(long m, long n) {
    if (m == 1 || n == 1)
      throw UnknotRejected("(m,n) = (" + std::to_string(m) + "," +
                           std::to_string(n) +
                           ") is the unknot; torus knot types need m,n >= 2");
    if (m < 2 || n < 2)
      throw InvalidKnotParams("torus knot type needs m,n >= 2, got (" +
                              std::to_string(m) + "," + std::to_string(n) + ")");
    if (std::gcd(m, n) != 1)
      throw InvalidKnotParams("m and n must be coprime, got (" +
                              std::to_string(m) + "," + std::to_string(n) + ")");
    KnotParams p;
    if (n % 2 == 0) {
      p.m_ = n;
      p.n_ = m;
      p.swapped_ = true;
    } else {
      p.m_ = m;
      p.n_ = n;
    }
    return p;
  }

  long m() const { return m_; }
  long n() const { return n_; }
  bool swapped() const { return swapped_; }
  bool has_even() const { return m_ % 2 == 0; }
  long min() const { return std::min(m_, n_); }
  long max() const { return std::max(m_, n_); }

  friend bool operator==(const KnotParams& a, const KnotParams& b) {
    return a.m_ == b.m_ && a.n_ == b.n_;
  }

 private:
  KnotParams() = default;
  long m_ = 0;
  long n_ = 0;
  bool swapped_ = false;
};

/// A raw (m, n) orientation without normalization. The exponent n belongs
/// to the generator x (A^n), m to y (B^m). Used by code that must be
/// checked under the m <-> n swap.
struct Orientation {
  long m;
  long n;
  static Orientation of(const KnotParams& p) { return {p.m(), p.n()}; }
  Orientation swapped() const { return {n, m}; }
};

}  // namespace toruschar

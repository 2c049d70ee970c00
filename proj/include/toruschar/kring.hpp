#pragma once

// Exact univariate integer polynomials. KClass (polynomials in the Lefschetz
// class L) and IntPoly (polynomials in t) share this implementation but are
// distinct types.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toruschar/errors.hpp"

namespace toruschar {

using BigInt = boost::multiprecision::cpp_int;

/// Exact quotient a / b; a nonzero remainder is a formula transcription bug.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw InternalError("exact_div: division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0)
    throw InternalError("exact_div: " + a.str() + " is not divisible by " +
                        b.str());
  return q;
}

struct LefschetzTag {
  static constexpr const char* symbol = "L";
};
struct AlexanderTag {
  static constexpr const char* symbol = "t";
};

template <class Tag>
class BasicPoly {
 public:
  BasicPoly() = default;
  BasicPoly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }
  explicit BasicPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static BasicPoly constant(const BigInt& c) {
    return BasicPoly(std::vector<BigInt>{c});
  }
  /// The monomial c * X^power.
  static BasicPoly monomial(std::size_t power, const BigInt& c = 1) {
    std::vector<BigInt> v(power + 1);
    v[power] = c;
    return BasicPoly(std::move(v));
  }
  /// The generator X itself (L or t).
  static BasicPoly var() { return monomial(1); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 stands in for minus infinity (the zero polynomial).
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  BigInt coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const BigInt& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) { return a *= BigInt(-1); }
  friend BasicPoly operator*(BasicPoly a, const BigInt& c) { return a *= c; }
  friend BasicPoly operator*(const BigInt& c, BasicPoly a) { return a *= c; }
  friend BasicPoly operator*(BasicPoly a, long long c) { return a *= BigInt(c); }
  friend BasicPoly operator*(long long c, BasicPoly a) { return a *= BigInt(c); }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BasicPoly(std::move(out));
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  BasicPoly pow(unsigned e) const {
    BasicPoly out = constant(1), base = *this;
    while (e) {
      if (e & 1U) out *= base;
      base *= base;
      e >>= 1U;
    }
    return out;
  }

  /// Quotient and remainder by a divisor with leading coefficient +-1.
  std::pair<BasicPoly, BasicPoly> divmod_monic(const BasicPoly& d) const {
    if (d.is_zero()) throw InternalError("polynomial division by zero");
    const BigInt& lead = d.coeffs_.back();
    if (lead != 1 && lead != -1)
      throw InternalError("divmod_monic: divisor is not monic");
    std::vector<BigInt> rem = coeffs_;
    if (rem.size() < d.coeffs_.size()) return {BasicPoly{}, *this};
    std::vector<BigInt> quot(rem.size() - d.coeffs_.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
      BigInt q = rem[i + d.coeffs_.size() - 1] * lead;  // lead^-1 == lead
      quot[i] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
        rem[i + j] -= q * d.coeffs_[j];
    }
    return {BasicPoly(std::move(quot)), BasicPoly(std::move(rem))};
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) {
    return !(a == b);
  }

  /// Descending powers with explicit signs, e.g. "L^4+4L^3-3L^2-15L+12".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (c < 0)
        out += '-';
      else if (!out.empty())
        out += '+';
      if (i == 0 || mag != 1) out += mag.str();
      if (i >= 1) out += Tag::symbol;
      if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

using KClass = BasicPoly<LefschetzTag>;

inline KClass kadd(const KClass& a, const KClass& b) { return a + b; }
inline KClass ksub(const KClass& a, const KClass& b) { return a - b; }
inline KClass kmul(const KClass& a, const KClass& b) { return a * b; }
inline KClass kscale(const KClass& a, const BigInt& c) { return a * c; }
inline BigInt keval(const KClass& a, const BigInt& x) { return a.eval(x); }
inline BigInt kcoeff(const KClass& a, std::size_t i) { return a.coeff(i); }

/// The Lefschetz class L = [C].
inline KClass lefschetz() { return KClass::var(); }

}  // namespace toruschar

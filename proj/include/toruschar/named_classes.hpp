#pragma once

#include "toruschar/kring.hpp"

namespace toruschar {

/// Named K-classes of the strata of the rank-3 character varieties.
struct NamedClassTable {
  /// C^2 (totally reducible locus, also its mu_3 quotient).
  static KClass P0() { return {0, 0, 1}; }
  /// M / (T x_D T), the 4-dimensional irreducible strata.
  static KClass P1() { return {12, -15, -3, 4, 1}; }
  /// M / (T x_D T x| mu_3).
  static KClass P2() { return {4, -1, -3, 2, 1}; }
  /// (C*)^2 - {x+y=1}.
  static KClass P3() { return {3, -3, 1}; }
  /// ((C*)^2 - {x+y=1}) / mu_3.
  static KClass P4() { return {1, -1, 1}; }
  /// (C - {0,1}) x C*.
  static KClass P5() { return {2, -3, 1}; }
  /// {(u,v) : v != 0, v != u^2}.
  static KClass P6() { return {1, -2, 1}; }
};

/// [M / (T x_D T)] for M the stable locus in GL(3).
inline KClass class_M_quotient() { return NamedClassTable::P1(); }
/// [M / (T x_D T x| mu_3)], mu_3 cyclically permuting the columns of M.
inline KClass class_M_quotient_mu3() { return NamedClassTable::P2(); }

}  // namespace toruschar

#pragma once

#include <cstddef>
#include <vector>

#include "heatcoeff/polynomial.hpp"

namespace heatcoeff {

// Piecewise polynomial on [0,1].  breakpoints = 0 = x_0 < ... < x_M = 1,
// pieces[m] is the polynomial (in the global variable x) on [x_m, x_{m+1}].
// Values at interior breakpoints follow the right-limit convention.
struct PiecewisePoly {
  std::vector<double> breakpoints;
  std::vector<Polynomial> pieces;

  std::size_t piece_count() const { return pieces.size(); }
  // Index of the piece owning x under the right-limit convention (x=1 maps
  // to the last piece).
  std::size_t piece_index(double x) const;
  double eval(double x) const; // throws DomainError if x outside [0,1]

  // max |value| over [0,1], exact per piece.
  double sup_norm() const;
  // Exact integral of |value| over [0,1] (splits pieces at their roots).
  double l1_norm() const;
  // Exact integral of the (signed) value over [lo, hi].
  double integral(double lo, double hi) const;

  // Throws DomainError unless breakpoints are strictly increasing from 0 to 1
  // and piece count matches.
  void validate_partition() const;
};

// Member of the admissible class: piecewise polynomial with declared positive
// bounds c0 <= value <= c1 on all of [0,1].
struct CoefficientM : PiecewisePoly {
  double c0 = 0.0;
  double c1 = 0.0;

  CoefficientM() = default;
  CoefficientM(std::vector<double> bp, std::vector<Polynomial> pc, double lo, double hi);
  static CoefficientM constant(double c);

  // Full invariant check: partition, 0 < c0 <= c1, and per-piece exact range
  // bounding within [c0, c1] (tiny floating-point slack).
  void validate() const;
};

struct SignInterval {
  double lo = 0.0;
  double hi = 0.0;
  int sign = 0; // +1, -1, or 0 (identically zero piece)
};

// Difference of two class members: may take both signs, carries the exact
// sign partition of [0,1] computed from piece roots.
struct SignedDifference : PiecewisePoly {
  std::vector<SignInterval> sign_intervals;
};

// p = q2 - q1 on the merged breakpoint set, with sign intervals from exact
// per-piece root finding.
SignedDifference difference(const CoefficientM& q2, const CoefficientM& q1);

// Wrap an arbitrary piecewise polynomial (e.g. read from file) as a
// SignedDifference, computing its sign partition.
SignedDifference make_signed(PiecewisePoly p);

// Number of +/- transitions; intervals whose sup-norm is below tol are
// absorbed into their neighbours.  tol must be > 0.
int count_sign_changes(const SignedDifference& p, double tol);

// Position of the last sign change (left edge of the final constant-sign
// block); 0 when p never changes sign.
double last_sign_change(const SignedDifference& p, double tol);

// Merge two breakpoint lists, deduplicating points closer than 1e-12.
std::vector<double> merge_breakpoints(const std::vector<double>& a, const std::vector<double>& b);

} // namespace heatcoeff

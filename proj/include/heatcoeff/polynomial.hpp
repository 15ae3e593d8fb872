#pragma once

#include <vector>

namespace heatcoeff {

// Dense univariate polynomial, coefficients in ascending powers of the
// global variable x.  Kept deliberately small: the coefficient class only
// ever needs evaluation, arithmetic, calculus and real roots on an interval.
struct Polynomial {
  std::vector<double> coeffs; // coeffs[j] multiplies x^j; empty means 0

  Polynomial() = default;
  explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) { trim(); }
  static Polynomial constant(double c) { return Polynomial({c}); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }

  double eval(double x) const;

  Polynomial derivative() const;
  // Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  // Exact integral over [lo, hi].
  double integral(double lo, double hi) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(double s) const;

  // Drop trailing exact zeros.
  void trim();
};

// All real roots of p in [lo, hi], ascending, deduplicated.
// Splits [lo, hi] into monotone segments at the roots of p' (recursively)
// and bisects each segment; exact for the degrees used here.
std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi);

// Exact range {min, max} of p over [lo, hi] via endpoint and critical values.
std::pair<double, double> range_on(const Polynomial& p, double lo, double hi);

} // namespace heatcoeff

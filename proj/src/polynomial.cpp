#include "heatcoeff/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace heatcoeff {

void Polynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
}

double Polynomial::eval(double x) const {
  double r = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 0;) r = r * x + coeffs[j];
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs.size() <= 1) return {};
  std::vector<double> d(coeffs.size() - 1);
  for (std::size_t j = 1; j < coeffs.size(); ++j) d[j - 1] = coeffs[j] * static_cast<double>(j);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs.empty()) return {};
  std::vector<double> a(coeffs.size() + 1, 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) a[j + 1] = coeffs[j] / static_cast<double>(j + 1);
  return Polynomial(std::move(a));
}

double Polynomial::integral(double lo, double hi) const {
  const Polynomial a = antiderivative();
  return a.eval(hi) - a.eval(lo);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<double> c(std::max(coeffs.size(), o.coeffs.size()), 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) c[j] += coeffs[j];
  for (std::size_t j = 0; j < o.coeffs.size(); ++j) c[j] += o.coeffs[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<double> c(std::max(coeffs.size(), o.coeffs.size()), 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) c[j] += coeffs[j];
  for (std::size_t j = 0; j < o.coeffs.size(); ++j) c[j] -= o.coeffs[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(double s) const {
  std::vector<double> c(coeffs);
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

namespace {

// Bisection on [lo, hi] where p is monotone and changes sign.
double bisect_root(const Polynomial& p, double lo, double hi, double flo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break; // interval exhausted in double precision
    const double fm = p.eval(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi) {
  std::vector<double> roots;
  if (p.is_zero() || lo >= hi) return roots;
  const int deg = p.degree();
  if (deg == 0) return roots;
  if (deg == 1) {
    const double r = -p.coeffs[0] / p.coeffs[1];
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }

  // Monotone segments between critical points of p.
  std::vector<double> crit = real_roots_in(p.derivative(), lo, hi);
  std::vector<double> nodes;
  nodes.push_back(lo);
  for (double c : crit)
    if (c > nodes.back()) nodes.push_back(c);
  if (hi > nodes.back()) nodes.push_back(hi);

  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double a = nodes[i], b = nodes[i + 1];
    const double fa = p.eval(a), fb = p.eval(b);
    if (fa == 0.0) {
      if (roots.empty() || std::abs(roots.back() - a) > 1e-14) roots.push_back(a);
      continue;
    }
    if (fb == 0.0) {
      if (i + 2 == nodes.size()) roots.push_back(b); // left endpoints of later segments catch interior zeros
      continue;
    }
    if ((fa > 0) != (fb > 0)) {
      const double r = bisect_root(p, a, b, fa);
      if (roots.empty() || std::abs(roots.back() - r) > 1e-14) roots.push_back(r);
    }
  }
  return roots;
}

std::pair<double, double> range_on(const Polynomial& p, double lo, double hi) {
  double mn = p.eval(lo), mx = mn;
  auto take = [&](double v) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  };
  take(p.eval(hi));
  for (double c : real_roots_in(p.derivative(), lo, hi)) take(p.eval(c));
  return {mn, mx};
}

} // namespace heatcoeff

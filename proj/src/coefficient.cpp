#include "heatcoeff/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heatcoeff/errors.hpp"

namespace heatcoeff {

std::size_t PiecewisePoly::piece_index(double x) const {
  // First breakpoint strictly greater than x; x = 1 falls into the last piece.
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  std::size_t i = static_cast<std::size_t>(it - breakpoints.begin());
  if (i == 0) return 0;
  if (i >= breakpoints.size()) return pieces.size() - 1;
  return i - 1;
}

double PiecewisePoly::eval(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("eval: x outside [0,1]: " + std::to_string(x));
  return pieces[piece_index(x)].eval(x);
}

double PiecewisePoly::sup_norm() const {
  double s = 0.0;
  for (std::size_t m = 0; m < pieces.size(); ++m) {
    const auto [lo, hi] = range_on(pieces[m], breakpoints[m], breakpoints[m + 1]);
    s = std::max({s, std::abs(lo), std::abs(hi)});
  }
  return s;
}

double PiecewisePoly::l1_norm() const {
  double total = 0.0;
  for (std::size_t m = 0; m < pieces.size(); ++m) {
    const double a = breakpoints[m], b = breakpoints[m + 1];
    std::vector<double> cuts{a};
    for (double r : real_roots_in(pieces[m], a, b))
      if (r > cuts.back() && r < b) cuts.push_back(r);
    cuts.push_back(b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      total += std::abs(pieces[m].integral(cuts[i], cuts[i + 1]));
  }
  return total;
}

double PiecewisePoly::integral(double lo, double hi) const {
  if (lo > hi) throw DomainError("integral: lo > hi");
  double total = 0.0;
  for (std::size_t m = 0; m < pieces.size(); ++m) {
    const double a = std::max(lo, breakpoints[m]);
    const double b = std::min(hi, breakpoints[m + 1]);
    if (a < b) total += pieces[m].integral(a, b);
  }
  return total;
}

void PiecewisePoly::validate_partition() const {
  if (breakpoints.size() < 2) throw DomainError("piecewise: need at least two breakpoints");
  if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0)
    throw DomainError("piecewise: breakpoints must start at 0 and end at 1");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw DomainError("piecewise: breakpoints must be strictly increasing");
  if (pieces.size() + 1 != breakpoints.size())
    throw DomainError("piecewise: piece count must be breakpoints-1");
}

CoefficientM::CoefficientM(std::vector<double> bp, std::vector<Polynomial> pc, double lo, double hi) {
  breakpoints = std::move(bp);
  pieces = std::move(pc);
  c0 = lo;
  c1 = hi;
  validate();
}

CoefficientM CoefficientM::constant(double c) { return CoefficientM({0.0, 1.0}, {Polynomial::constant(c)}, c, c); }

void CoefficientM::validate() const {
  validate_partition();
  if (!(c0 > 0.0)) throw DomainError("coefficient: lower bound c0 must be positive");
  if (!(c1 >= c0)) throw DomainError("coefficient: bounds must satisfy c0 <= c1");
  const double slack = 1e-9 * std::max(1.0, c1);
  for (std::size_t m = 0; m < pieces.size(); ++m) {
    const auto [mn, mx] = range_on(pieces[m], breakpoints[m], breakpoints[m + 1]);
    if (mn < c0 - slack || mx > c1 + slack)
      throw DomainError("coefficient: piece " + std::to_string(m) + " range [" + std::to_string(mn) + ", " +
                        std::to_string(mx) + "] violates bounds [" + std::to_string(c0) + ", " + std::to_string(c1) +
                        "]");
  }
}

std::vector<double> merge_breakpoints(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double x : all)
    if (out.empty() || x - out.back() > 1e-12) out.push_back(x);
  // Endpoints must survive dedup exactly.
  out.front() = 0.0;
  out.back() = 1.0;
  return out;
}

namespace {

// Sign partition of a piecewise polynomial from exact piece roots.
std::vector<SignInterval> sign_partition(const PiecewisePoly& p) {
  std::vector<SignInterval> raw;
  for (std::size_t m = 0; m < p.pieces.size(); ++m) {
    const double a = p.breakpoints[m], b = p.breakpoints[m + 1];
    if (p.pieces[m].is_zero()) {
      raw.push_back({a, b, 0});
      continue;
    }
    std::vector<double> cuts{a};
    for (double r : real_roots_in(p.pieces[m], a, b))
      if (r > cuts.back() + 1e-15 && r < b - 1e-15) cuts.push_back(r);
    cuts.push_back(b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
      const double v = p.pieces[m].eval(mid);
      raw.push_back({cuts[i], cuts[i + 1], v > 0 ? 1 : (v < 0 ? -1 : 0)});
    }
  }
  // Merge adjacent intervals with equal sign (touching roots, breakpoints).
  std::vector<SignInterval> merged;
  for (const auto& s : raw) {
    if (!merged.empty() && merged.back().sign == s.sign)
      merged.back().hi = s.hi;
    else
      merged.push_back(s);
  }
  return merged;
}

} // namespace

SignedDifference difference(const CoefficientM& q2, const CoefficientM& q1) {
  q2.validate();
  q1.validate();
  SignedDifference p;
  p.breakpoints = merge_breakpoints(q2.breakpoints, q1.breakpoints);
  p.pieces.reserve(p.breakpoints.size() - 1);
  for (std::size_t m = 0; m + 1 < p.breakpoints.size(); ++m) {
    const double mid = 0.5 * (p.breakpoints[m] + p.breakpoints[m + 1]);
    p.pieces.push_back(q2.pieces[q2.piece_index(mid)] - q1.pieces[q1.piece_index(mid)]);
  }
  p.sign_intervals = sign_partition(p);
  return p;
}

SignedDifference make_signed(PiecewisePoly p) {
  p.validate_partition();
  SignedDifference s;
  s.breakpoints = std::move(p.breakpoints);
  s.pieces = std::move(p.pieces);
  s.sign_intervals = sign_partition(s);
  return s;
}

namespace {

// Signs of the intervals that survive the |p| < tol absorption, in order.
std::vector<int> significant_signs(const SignedDifference& p, double tol) {
  std::vector<int> signs;
  for (const auto& s : p.sign_intervals) {
    if (s.sign == 0) continue;
    // Magnitude of the interval: exact sup of |p| over it.
    double mag = 0.0;
    for (std::size_t m = 0; m < p.pieces.size(); ++m) {
      const double a = std::max(s.lo, p.breakpoints[m]);
      const double b = std::min(s.hi, p.breakpoints[m + 1]);
      if (a >= b) continue;
      const auto [mn, mx] = range_on(p.pieces[m], a, b);
      mag = std::max({mag, std::abs(mn), std::abs(mx)});
    }
    if (mag < tol) continue; // noise pocket, absorbed into neighbours
    signs.push_back(s.sign);
  }
  return signs;
}

} // namespace

int count_sign_changes(const SignedDifference& p, double tol) {
  if (!(tol > 0.0)) throw DomainError("count_sign_changes: tol must be > 0");
  const auto signs = significant_signs(p, tol);
  int changes = 0;
  for (std::size_t i = 0; i + 1 < signs.size(); ++i)
    if (signs[i] != signs[i + 1]) ++changes;
  return changes;
}

double last_sign_change(const SignedDifference& p, double tol) {
  if (!(tol > 0.0)) throw DomainError("last_sign_change: tol must be > 0");
  // Walk significant intervals, remember the left edge of the last block
  // whose sign differs from its predecessor.
  double z = 0.0;
  int prev = 0;
  for (const auto& s : p.sign_intervals) {
    if (s.sign == 0) continue;
    double mag = 0.0;
    for (std::size_t m = 0; m < p.pieces.size(); ++m) {
      const double a = std::max(s.lo, p.breakpoints[m]);
      const double b = std::min(s.hi, p.breakpoints[m + 1]);
      if (a >= b) continue;
      const auto [mn, mx] = range_on(p.pieces[m], a, b);
      mag = std::max({mag, std::abs(mn), std::abs(mx)});
    }
    if (mag < tol) continue;
    if (prev != 0 && s.sign != prev) z = s.lo;
    prev = s.sign;
  }
  return z;
}

} // namespace heatcoeff

#pragma once

#include <cstddef>
#include <vector>

namespace heatcoeff::kernels {

// Runtime-dispatched arithmetic kernels for the data-parallel inner loops:
// exponentially weighted quadrature sums, batched polynomial evaluation and
// the multi-k Volterra boundary march.  Scalar reference implementations are
// always available; the AVX2 variants are selected at startup when the CPU
// supports them (override with HEATCOEFF_KERNELS=scalar|avx2).

enum class Isa { scalar, avx2 };

Isa active_isa();
// Force a backend (throws ConfigError if unsupported on this CPU).
void force_isa(Isa isa);

// sum_i w[i] * exp(s[i])
double exp_dot(const double* w, const double* s, std::size_t n);

// out[i] = c[0] + c[1]*x[i] + ... + c[nc-1]*x[i]^(nc-1)
void horner_batch(const double* c, std::size_t nc, const double* x, double* out, std::size_t n);

// Breakpoint-aligned march grid: x has n+1 nodes; qa[i]/qb[i] are the
// coefficient values at the left/right end of interval i taken from the
// piece owning that interval (one-sided limits at discontinuities).
struct MarchGrid {
  std::vector<double> x;
  std::vector<double> qa;
  std::vector<double> qb;

  std::size_t intervals() const { return qa.size(); }
};

struct MarchBoundary {
  double log_u;  // log u(1, k)
  double log_du; // log u'(1, k)
};

// Trapezoid product-integration march of u = 1 + k^2 * int_0^x (x-s) q u ds
// for nk spectral parameters on one shared grid, overflow-safe via running
// rescaling.  Returns boundary values only; the full-profile solver lives in
// sl_solver and uses the same recurrence.
void march_boundary_batch(const MarchGrid& g, const double* k2, MarchBoundary* out, std::size_t nk);

} // namespace heatcoeff::kernels

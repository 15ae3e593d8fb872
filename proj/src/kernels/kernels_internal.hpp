#pragma once

#include <cmath>
#include <cstddef>

#include "heatcoeff/kernels.hpp"

namespace heatcoeff::kernels::detail {

double exp_dot_scalar(const double* w, const double* s, std::size_t n);
void horner_batch_scalar(const double* c, std::size_t nc, const double* x, double* out, std::size_t n);
void march_boundary_scalar(const MarchGrid& g, const double* k2, MarchBoundary* out, std::size_t nk);

#if defined(__x86_64__) || defined(_M_X64)
#define HEATCOEFF_HAVE_AVX2_KERNELS 1
double exp_dot_avx2(const double* w, const double* s, std::size_t n);
void horner_batch_avx2(const double* c, std::size_t nc, const double* x, double* out, std::size_t n);
void march_boundary_avx2(const MarchGrid& g, const double* k2, MarchBoundary* out, std::size_t nk);
#endif

// Single-lane march state shared with sl_solver: u = scaled solution value,
// A = scaled int_0^x q*u, C = scaled int_0^x (x-s) q*u, L = log of the
// peeled-off scale (the true value is u * e^L), inh = e^-L cached.
struct MarchState {
  double u = 1.0;
  double A = 0.0;
  double C = 0.0;
  double L = 0.0;
  double inh = 1.0;
};

// Advance across one interval [x0, x1] with one-sided coefficient values
// qa = q(x0+), qb = q(x1-).  The (x-s) kernel vanishes at s = x, so the
// trapezoid update is explicit.
inline void march_step(MarchState& st, double k2, double x0, double x1, double qa, double qb) {
  const double h = x1 - x0;
  st.C += h * st.A + 0.5 * h * h * qa * st.u;
  const double unew = st.inh + k2 * st.C;
  st.A += 0.5 * h * (qa * st.u + qb * unew);
  st.u = unew;
}

constexpr double kRescaleThreshold = 1e250;

inline void maybe_rescale(MarchState& st) {
  if (st.u > kRescaleThreshold) {
    const double s = st.u;
    st.u = 1.0;
    st.A /= s;
    st.C /= s;
    st.L += std::log(s);
    st.inh = st.L > 745.0 ? 0.0 : std::exp(-st.L);
  }
}

} // namespace heatcoeff::kernels::detail

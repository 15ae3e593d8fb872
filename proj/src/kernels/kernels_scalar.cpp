#include <cmath>

#include "kernels_internal.hpp"

namespace heatcoeff::kernels::detail {

double exp_dot_scalar(const double* w, const double* s, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::exp(s[i]);
  return acc;
}

void horner_batch_scalar(const double* c, std::size_t nc, const double* x, double* out, std::size_t n) {
  if (nc == 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double r = c[nc - 1];
    for (std::size_t j = nc - 1; j-- > 0;) r = r * x[i] + c[j];
    out[i] = r;
  }
}

void march_boundary_scalar(const MarchGrid& g, const double* k2, MarchBoundary* out, std::size_t nk) {
  const std::size_t n = g.intervals();
  for (std::size_t lane = 0; lane < nk; ++lane) {
    MarchState st;
    for (std::size_t i = 0; i < n; ++i) {
      march_step(st, k2[lane], g.x[i], g.x[i + 1], g.qa[i], g.qb[i]);
      maybe_rescale(st);
    }
    out[lane].log_u = std::log(st.u) + st.L;
    out[lane].log_du = std::log(k2[lane] * st.A) + st.L;
  }
}

} // namespace heatcoeff::kernels::detail

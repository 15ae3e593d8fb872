#include <cstdlib>
#include <mutex>
#include <string>

#include "heatcoeff/errors.hpp"
#include "kernels_internal.hpp"

namespace heatcoeff::kernels {

namespace {

struct Table {
  Isa isa;
  double (*exp_dot)(const double*, const double*, std::size_t);
  void (*horner_batch)(const double*, std::size_t, const double*, double*, std::size_t);
  void (*march_boundary)(const MarchGrid&, const double*, MarchBoundary*, std::size_t);
};

constexpr Table kScalarTable{Isa::scalar, detail::exp_dot_scalar, detail::horner_batch_scalar,
                             detail::march_boundary_scalar};

#ifdef HEATCOEFF_HAVE_AVX2_KERNELS
constexpr Table kAvx2Table{Isa::avx2, detail::exp_dot_avx2, detail::horner_batch_avx2, detail::march_boundary_avx2};
#endif

bool cpu_has_avx2() {
#ifdef HEATCOEFF_HAVE_AVX2_KERNELS
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Table g_table = kScalarTable;
std::once_flag g_init_once;

void init_from_env() {
  const char* env = std::getenv("HEATCOEFF_KERNELS");
  const std::string want = env ? env : "auto";
  if (want == "scalar") {
    g_table = kScalarTable;
    return;
  }
#ifdef HEATCOEFF_HAVE_AVX2_KERNELS
  if (want == "avx2") {
    if (!cpu_has_avx2()) throw ConfigError("HEATCOEFF_KERNELS=avx2 requested but CPU lacks AVX2/FMA");
    g_table = kAvx2Table;
    return;
  }
#endif
  if (want != "auto" && want != "avx2")
    throw ConfigError("HEATCOEFF_KERNELS must be scalar, avx2 or auto (got '" + want + "')");
#ifdef HEATCOEFF_HAVE_AVX2_KERNELS
  if (cpu_has_avx2()) {
    g_table = kAvx2Table;
    return;
  }
#endif
  g_table = kScalarTable;
}

const Table& table() {
  std::call_once(g_init_once, init_from_env);
  return g_table;
}

} // namespace

Isa active_isa() { return table().isa; }

void force_isa(Isa isa) {
  table(); // ensure one-time init ran
  if (isa == Isa::scalar) {
    g_table = kScalarTable;
    return;
  }
#ifdef HEATCOEFF_HAVE_AVX2_KERNELS
  if (isa == Isa::avx2 && cpu_has_avx2()) {
    g_table = kAvx2Table;
    return;
  }
#endif
  throw ConfigError("requested kernel ISA not supported on this CPU");
}

double exp_dot(const double* w, const double* s, std::size_t n) { return table().exp_dot(w, s, n); }

void horner_batch(const double* c, std::size_t nc, const double* x, double* out, std::size_t n) {
  table().horner_batch(c, nc, x, out, n);
}

void march_boundary_batch(const MarchGrid& g, const double* k2, MarchBoundary* out, std::size_t nk) {
  table().march_boundary(g, k2, out, nk);
}

} // namespace heatcoeff::kernels

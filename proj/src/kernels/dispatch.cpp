#include <cstdlib>
#include <string>
#include <string_view>

#include "flattorus/errors.hpp"
#include "flattorus/kernels.hpp"
#include "kernels_impl.hpp"

namespace flattorus::kernels {

namespace {

Isa resolve(Isa isa) { return isa_supported(isa) ? isa : Isa::kScalar; }

Isa pick_isa() {
  if (const char* env = std::getenv("FLATTORUS_ISA")) {
    const std::string_view want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2") return resolve(Isa::kAvx2);
  }
  return resolve(Isa::kAvx2);
}

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw InvalidArgument(std::string("kernel span size mismatch: ") + what);
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::kScalar) return true;
#if defined(FLATTORUS_AVX2_TU)
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  return has_avx2;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = pick_isa();
  return isa;
}

void torus_distances(Isa isa, double side, std::span<const double> au, std::span<const double> av,
                     std::span<const double> bu, std::span<const double> bv, std::span<double> out) {
  const std::size_t n = out.size();
  require_same(au.size(), n, "au");
  require_same(av.size(), n, "av");
  require_same(bu.size(), n, "bu");
  require_same(bv.size(), n, "bv");
#if defined(FLATTORUS_AVX2_TU)
  if (resolve(isa) == Isa::kAvx2) {
    detail::avx2::torus_distances(side, au.data(), av.data(), bu.data(), bv.data(), out.data(), n);
    return;
  }
#endif
  (void)isa;
  detail::scalar::torus_distances(side, au.data(), av.data(), bu.data(), bv.data(), out.data(), n);
}

void sincos(Isa isa, std::span<const double> x, std::span<double> sin_out, std::span<double> cos_out) {
  require_same(sin_out.size(), x.size(), "sin_out");
  require_same(cos_out.size(), x.size(), "cos_out");
#if defined(FLATTORUS_AVX2_TU)
  if (resolve(isa) == Isa::kAvx2) {
    detail::avx2::sincos(x.data(), sin_out.data(), cos_out.data(), x.size());
    return;
  }
#endif
  (void)isa;
  detail::scalar::sincos(x.data(), sin_out.data(), cos_out.data(), x.size());
}

void chord_lengths(Isa isa, int dim, const std::array<std::span<const double>, 4>& coords, std::span<double> out) {
  if (dim < 1 || dim > 4) throw InvalidArgument("chord_lengths supports 1 to 4 coordinates");
  const std::size_t n_points = coords[0].size();
  if (n_points == 0) {
    require_same(out.size(), 0, "out");
    return;
  }
  require_same(out.size(), n_points - 1, "out");
  const double* ptrs[4] = {nullptr, nullptr, nullptr, nullptr};
  for (int d = 0; d < dim; ++d) {
    require_same(coords[d].size(), n_points, "coords");
    ptrs[d] = coords[d].data();
  }
#if defined(FLATTORUS_AVX2_TU)
  if (resolve(isa) == Isa::kAvx2) {
    detail::avx2::chord_lengths(dim, ptrs, out.data(), n_points);
    return;
  }
#endif
  (void)isa;
  detail::scalar::chord_lengths(dim, ptrs, out.data(), n_points);
}

}  // namespace flattorus::kernels

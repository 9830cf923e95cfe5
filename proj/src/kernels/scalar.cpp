#include "kernels_impl.hpp"

namespace flattorus::kernels::detail::scalar {

void torus_distances(double side, const double* au, const double* av, const double* bu, const double* bv,
                     double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = torus_distance_one(side, au[i], av[i], bu[i], bv[i]);
}

void sincos(const double* x, double* s, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) sincos_one(x[i], s[i], c[i]);
}

void chord_lengths(int dim, const double* const* coords, double* out, std::size_t n_points) {
  for (std::size_t i = 0; i + 1 < n_points; ++i) {
    double acc = 0.0;
    for (int d = 0; d < dim; ++d) {
      const double delta = coords[d][i + 1] - coords[d][i];
      acc = acc + delta * delta;
    }
    out[i] = std::sqrt(acc);
  }
}

}  // namespace flattorus::kernels::detail::scalar

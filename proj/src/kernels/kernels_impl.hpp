#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace flattorus::kernels::detail {

// Cephes sin/cos: reduction by pi/4 in three parts, degree-13/12 minimax polynomials.
inline constexpr double kFourOverPi = 1.27323954473516268615;
inline constexpr double kDp1 = 7.85398125648498535156E-1;
inline constexpr double kDp2 = 3.77489470793079817668E-8;
inline constexpr double kDp3 = 2.69515142907905952645E-15;
inline constexpr double kSinCoef[6] = {1.58962301576546568060E-10, -2.50507477628578072866E-8,
                                       2.75573136213857245213E-6,  -1.98412698295895385996E-4,
                                       8.33333333332211858878E-3,  -1.66666666666666307295E-1};
inline constexpr double kCosCoef[6] = {-1.13585365213876817300E-11, 2.08757008419747316778E-9,
                                       -2.75573141792967388112E-7,  2.48015872888517045348E-5,
                                       -1.38888888888730564116E-3,  4.16666666666665929218E-2};
inline constexpr double kMaxReducedArg = 1e8;

inline void sincos_one(double x, double& s, double& c) {
  const double ax = std::fabs(x);
  if (!(ax <= kMaxReducedArg)) {
    s = std::sin(x);
    c = std::cos(x);
    return;
  }
  double y = std::floor(ax * kFourOverPi);
  auto j = static_cast<std::int32_t>(y);
  const std::int32_t odd = j & 1;
  j += odd;
  y += static_cast<double>(odd);
  j &= 7;
  const double z = ((ax - y * kDp1) - y * kDp2) - y * kDp3;
  const double zz = z * z;
  double ps = kSinCoef[0];
  double pc = kCosCoef[0];
  for (int k = 1; k < 6; ++k) {
    ps = ps * zz + kSinCoef[k];
    pc = pc * zz + kCosCoef[k];
  }
  const double sin_poly = z + z * (zz * ps);
  const double cos_poly = (1.0 - 0.5 * zz) + (zz * zz) * pc;
  const bool swap = ((j + 1) & 2) != 0;
  double sv = swap ? cos_poly : sin_poly;
  double cv = swap ? sin_poly : cos_poly;
  const bool sin_neg = (((j >> 2) & 1) != 0) != std::signbit(x);
  const bool cos_neg = ((j >> 2) & 1) != ((j >> 1) & 1);
  s = sin_neg ? -sv : sv;
  c = cos_neg ? -cv : cv;
}

inline double torus_distance_one(double side, double au, double av, double bu, double bv) {
  double du = std::fabs(bu - au);
  double dv = std::fabs(bv - av);
  const double wu = side - du;
  const double wv = side - dv;
  du = wu < du ? wu : du;
  dv = wv < dv ? wv : dv;
  return std::sqrt(du * du + dv * dv);
}

namespace scalar {
void torus_distances(double side, const double* au, const double* av, const double* bu, const double* bv,
                     double* out, std::size_t n);
void sincos(const double* x, double* s, double* c, std::size_t n);
void chord_lengths(int dim, const double* const* coords, double* out, std::size_t n_points);
}  // namespace scalar

namespace avx2 {
void torus_distances(double side, const double* au, const double* av, const double* bu, const double* bv,
                     double* out, std::size_t n);
void sincos(const double* x, double* s, double* c, std::size_t n);
void chord_lengths(int dim, const double* const* coords, double* out, std::size_t n_points);
}  // namespace avx2

}  // namespace flattorus::kernels::detail

// Compiled with -mavx2. Only reached through dispatch after a CPU check.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace flattorus::kernels::detail::avx2 {

namespace {

inline __m256d widen_mask(__m128i m32) { return _mm256_castsi256_pd(_mm256_cvtepi32_epi64(m32)); }

inline void sincos4(__m256d x, __m256d& s_out, __m256d& c_out) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d ax = _mm256_andnot_pd(sign_bit, x);
  const __m256d x_sign = _mm256_and_pd(sign_bit, x);

  __m256d y = _mm256_round_pd(_mm256_mul_pd(ax, _mm256_set1_pd(kFourOverPi)), _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC);
  __m128i j = _mm256_cvttpd_epi32(y);
  const __m128i odd = _mm_and_si128(j, _mm_set1_epi32(1));
  j = _mm_add_epi32(j, odd);
  y = _mm256_add_pd(y, _mm256_cvtepi32_pd(odd));
  j = _mm_and_si128(j, _mm_set1_epi32(7));

  const __m256d z = _mm256_sub_pd(
      _mm256_sub_pd(_mm256_sub_pd(ax, _mm256_mul_pd(y, _mm256_set1_pd(kDp1))), _mm256_mul_pd(y, _mm256_set1_pd(kDp2))),
      _mm256_mul_pd(y, _mm256_set1_pd(kDp3)));
  const __m256d zz = _mm256_mul_pd(z, z);

  __m256d ps = _mm256_set1_pd(kSinCoef[0]);
  __m256d pc = _mm256_set1_pd(kCosCoef[0]);
  for (int k = 1; k < 6; ++k) {
    ps = _mm256_add_pd(_mm256_mul_pd(ps, zz), _mm256_set1_pd(kSinCoef[k]));
    pc = _mm256_add_pd(_mm256_mul_pd(pc, zz), _mm256_set1_pd(kCosCoef[k]));
  }
  const __m256d sin_poly = _mm256_add_pd(z, _mm256_mul_pd(z, _mm256_mul_pd(zz, ps)));
  const __m256d cos_poly = _mm256_add_pd(_mm256_sub_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(_mm256_set1_pd(0.5), zz)),
                                         _mm256_mul_pd(_mm256_mul_pd(zz, zz), pc));

  const __m128i two = _mm_set1_epi32(2);
  const __m128i four = _mm_set1_epi32(4);
  const __m256d swap = widen_mask(_mm_cmpeq_epi32(_mm_and_si128(_mm_add_epi32(j, _mm_set1_epi32(1)), two), two));
  const __m256d bit2 = widen_mask(_mm_cmpeq_epi32(_mm_and_si128(j, four), four));
  const __m256d bit1 = widen_mask(_mm_cmpeq_epi32(_mm_and_si128(j, two), two));

  const __m256d sv = _mm256_blendv_pd(sin_poly, cos_poly, swap);
  const __m256d cv = _mm256_blendv_pd(cos_poly, sin_poly, swap);
  const __m256d sin_sign = _mm256_xor_pd(_mm256_and_pd(bit2, sign_bit), x_sign);
  const __m256d cos_sign = _mm256_and_pd(_mm256_xor_pd(bit2, bit1), sign_bit);
  s_out = _mm256_xor_pd(sv, sin_sign);
  c_out = _mm256_xor_pd(cv, cos_sign);
}

}  // namespace

void torus_distances(double side, const double* au, const double* av, const double* bu, const double* bv,
                     double* out, std::size_t n) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d s = _mm256_set1_pd(side);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d du = _mm256_andnot_pd(sign_bit, _mm256_sub_pd(_mm256_loadu_pd(bu + i), _mm256_loadu_pd(au + i)));
    __m256d dv = _mm256_andnot_pd(sign_bit, _mm256_sub_pd(_mm256_loadu_pd(bv + i), _mm256_loadu_pd(av + i)));
    du = _mm256_min_pd(_mm256_sub_pd(s, du), du);
    dv = _mm256_min_pd(_mm256_sub_pd(s, dv), dv);
    const __m256d sq = _mm256_add_pd(_mm256_mul_pd(du, du), _mm256_mul_pd(dv, dv));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sq));
  }
  for (; i < n; ++i) out[i] = torus_distance_one(side, au[i], av[i], bu[i], bv[i]);
}

void sincos(const double* x, double* s, double* c, std::size_t n) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d limit = _mm256_set1_pd(kMaxReducedArg);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d out_of_range = _mm256_cmp_pd(_mm256_andnot_pd(sign_bit, v), limit, _CMP_NLE_UQ);
    if (_mm256_movemask_pd(out_of_range) != 0) {
      for (std::size_t k = i; k < i + 4; ++k) sincos_one(x[k], s[k], c[k]);
      continue;
    }
    __m256d sv;
    __m256d cv;
    sincos4(v, sv, cv);
    _mm256_storeu_pd(s + i, sv);
    _mm256_storeu_pd(c + i, cv);
  }
  for (; i < n; ++i) sincos_one(x[i], s[i], c[i]);
}

void chord_lengths(int dim, const double* const* coords, double* out, std::size_t n_points) {
  if (n_points < 2) return;
  const std::size_t n = n_points - 1;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (int d = 0; d < dim; ++d) {
      const __m256d delta = _mm256_sub_pd(_mm256_loadu_pd(coords[d] + i + 1), _mm256_loadu_pd(coords[d] + i));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(delta, delta));
    }
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(acc));
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (int d = 0; d < dim; ++d) {
      const double delta = coords[d][i + 1] - coords[d][i];
      acc = acc + delta * delta;
    }
    out[i] = std::sqrt(acc);
  }
}

}  // namespace flattorus::kernels::detail::avx2

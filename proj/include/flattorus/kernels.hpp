#pragma once

// Data-parallel inner loops of the verification code. Every kernel has a
// scalar reference and an AVX2 variant that produce bit-identical results; the
// variant is picked once at runtime from CPU support (override with the
// environment variable FLATTORUS_ISA=scalar|avx2).

#include <array>
#include <span>

namespace flattorus::kernels {

enum class Isa { kScalar, kAvx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();

/// out[i] = flat torus distance between (au[i], av[i]) and (bu[i], bv[i]).
/// Inputs must be canonical, i.e. inside [0, side).
void torus_distances(Isa isa, double side, std::span<const double> au, std::span<const double> av,
                     std::span<const double> bu, std::span<const double> bv, std::span<double> out);

/// Element-wise sin and cos. Polynomial evaluation with three-term Cody-Waite
/// reduction; |x| above 1e8 falls back to libm.
void sincos(Isa isa, std::span<const double> x, std::span<double> sin_out, std::span<double> cos_out);

/// Lengths of the n-1 chords of a polyline stored as `dim` coordinate arrays of length n.
void chord_lengths(Isa isa, int dim, const std::array<std::span<const double>, 4>& coords,
                   std::span<double> out);

inline void torus_distances(double side, std::span<const double> au, std::span<const double> av,
                            std::span<const double> bu, std::span<const double> bv, std::span<double> out) {
  torus_distances(active_isa(), side, au, av, bu, bv, out);
}
inline void sincos(std::span<const double> x, std::span<double> sin_out, std::span<double> cos_out) {
  sincos(active_isa(), x, sin_out, cos_out);
}
inline void chord_lengths(int dim, const std::array<std::span<const double>, 4>& coords, std::span<double> out) {
  chord_lengths(active_isa(), dim, coords, out);
}

}  // namespace flattorus::kernels

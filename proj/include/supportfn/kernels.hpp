#pragma once

#include <cstddef>

#include "supportfn/common.hpp"

namespace supportfn::kern {

/// True when the AVX2+FMA variants are safe to execute on this CPU.
bool has_avx2();

// Batch kernels used by the 2D sampling paths (Monte-Carlo and tensor-grid
// region integrals, Gram assembly). Scalar reference implementations and
// AVX2 variants are both always compiled; the unsuffixed entry points
// dispatch once at startup. The two implementations agree to a few ulp and
// are equivalence-tested against each other.

/// out[i] = |p(z_i - center)|^2 for the polynomial with the given
/// coefficients (Horner evaluation).
void abs2_poly(const C* coeffs, std::size_t ncoeff, C center, const double* xs,
               const double* ys, std::size_t n, double* out);

/// acc[i] += alpha * log((xs[i]-px)^2 + (ys[i]-py)^2)
/// (= 2*alpha*log|z_i - p|); log(0) contributes -inf.
void accum_alpha_log_dist2(double alpha, double px, double py, const double* xs,
                           const double* ys, std::size_t n, double* acc);

/// acc[i] += alpha * log(|1 - conj(p) z_i|^2); the Blaschke denominator term.
void accum_alpha_log_one_minus_pbar_z2(double alpha, double px, double py,
                                       const double* xs, const double* ys,
                                       std::size_t n, double* acc);

// Named variants (for equivalence tests and the dispatcher).
void abs2_poly_scalar(const C*, std::size_t, C, const double*, const double*,
                      std::size_t, double*);
void abs2_poly_avx2(const C*, std::size_t, C, const double*, const double*,
                    std::size_t, double*);
void accum_alpha_log_dist2_scalar(double, double, double, const double*,
                                  const double*, std::size_t, double*);
void accum_alpha_log_dist2_avx2(double, double, double, const double*,
                                const double*, std::size_t, double*);
void accum_alpha_log_one_minus_pbar_z2_scalar(double, double, double,
                                              const double*, const double*,
                                              std::size_t, double*);
void accum_alpha_log_one_minus_pbar_z2_avx2(double, double, double,
                                            const double*, const double*,
                                            std::size_t, double*);

} // namespace supportfn::kern

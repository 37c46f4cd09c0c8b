#include "supportfn/kernels.hpp"

namespace supportfn::kern {

bool has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

struct Dispatch {
    decltype(&abs2_poly_scalar) abs2;
    decltype(&accum_alpha_log_dist2_scalar) log_dist2;
    decltype(&accum_alpha_log_one_minus_pbar_z2_scalar) log_blaschke;

    Dispatch() {
        if (has_avx2()) {
            abs2 = &abs2_poly_avx2;
            log_dist2 = &accum_alpha_log_dist2_avx2;
            log_blaschke = &accum_alpha_log_one_minus_pbar_z2_avx2;
        } else {
            abs2 = &abs2_poly_scalar;
            log_dist2 = &accum_alpha_log_dist2_scalar;
            log_blaschke = &accum_alpha_log_one_minus_pbar_z2_scalar;
        }
    }
};

const Dispatch& dispatch() {
    static const Dispatch d;
    return d;
}

} // namespace

void abs2_poly(const C* coeffs, std::size_t ncoeff, C center, const double* xs,
               const double* ys, std::size_t n, double* out) {
    dispatch().abs2(coeffs, ncoeff, center, xs, ys, n, out);
}

void accum_alpha_log_dist2(double alpha, double px, double py, const double* xs,
                           const double* ys, std::size_t n, double* acc) {
    dispatch().log_dist2(alpha, px, py, xs, ys, n, acc);
}

void accum_alpha_log_one_minus_pbar_z2(double alpha, double px, double py,
                                       const double* xs, const double* ys,
                                       std::size_t n, double* acc) {
    dispatch().log_blaschke(alpha, px, py, xs, ys, n, acc);
}

} // namespace supportfn::kern

#include "supportfn/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace supportfn::kern {
namespace {

// log(x) for 4 doubles: reduce to m in [sqrt(1/2), sqrt(2)) times 2^e, then
// the odd series log(m) = 2*atanh(s) with s = (m-1)/(m+1). z = s^2 stays
// below 0.0295, so 12 series terms reach full double precision.
inline __m256d log4(__m256d x) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();

    // scale denormals up by 2^54 so the exponent field is usable
    const __m256d tiny = _mm256_set1_pd(0x1.0p-1022);
    const __m256d denorm_mask = _mm256_cmp_pd(x, tiny, _CMP_LT_OQ);
    const __m256d scaled = _mm256_mul_pd(x, _mm256_set1_pd(0x1.0p54));
    x = _mm256_blendv_pd(x, scaled, denorm_mask);
    const __m256d exp_bias_extra =
        _mm256_and_pd(denorm_mask, _mm256_set1_pd(54.0));

    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i exp_bits = _mm256_srli_epi64(bits, 52);
    // exponent as double (values fit in 32 bits)
    const __m256i biased = _mm256_and_si256(exp_bits, _mm256_set1_epi64x(0x7FF));
    alignas(32) long long eraw[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(eraw), biased);
    __m256d e = _mm256_set_pd(double(eraw[3] - 1023), double(eraw[2] - 1023),
                              double(eraw[1] - 1023), double(eraw[0] - 1023));
    e = _mm256_sub_pd(e, exp_bias_extra);

    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll);
    const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000ll);
    __m256d m = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

    // shift m in [sqrt(2), 2) down one octave
    const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);
    const __m256d hi_mask = _mm256_cmp_pd(m, sqrt2, _CMP_GE_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), hi_mask);
    e = _mm256_add_pd(e, _mm256_and_pd(hi_mask, one));

    const __m256d s =
        _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d z = _mm256_mul_pd(s, s);

    __m256d p = _mm256_set1_pd(1.0 / 23.0);
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 21.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 19.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 17.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 15.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 13.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 11.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 9.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 7.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 5.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 3.0));
    p = _mm256_fmadd_pd(p, z, one);
    const __m256d log_m = _mm256_mul_pd(_mm256_add_pd(s, s), p);

    const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
    const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
    __m256d r = _mm256_fmadd_pd(e, ln2_lo, log_m);
    r = _mm256_fmadd_pd(e, ln2_hi, r);

    // x == 0 -> -inf, x < 0 -> NaN, x == +inf -> +inf
    const __m256d orig = _mm256_castsi256_pd(bits);
    const __m256d neg_inf = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    const __m256d pos_inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    const __m256d qnan = _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN());
    r = _mm256_blendv_pd(r, neg_inf, _mm256_cmp_pd(orig, zero, _CMP_EQ_OQ));
    r = _mm256_blendv_pd(r, qnan, _mm256_cmp_pd(orig, zero, _CMP_LT_OQ));
    r = _mm256_blendv_pd(r, pos_inf, _mm256_cmp_pd(orig, pos_inf, _CMP_EQ_OQ));
    return r;
}

} // namespace

void abs2_poly_avx2(const C* coeffs, std::size_t ncoeff, C center,
                    const double* xs, const double* ys, std::size_t n,
                    double* out) {
    const __m256d cx = _mm256_set1_pd(center.real());
    const __m256d cy = _mm256_set1_pd(center.imag());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d zx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), cx);
        const __m256d zy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), cy);
        __m256d br = _mm256_setzero_pd();
        __m256d bi = _mm256_setzero_pd();
        for (std::size_t k = ncoeff; k-- > 0;) {
            const __m256d ar = _mm256_set1_pd(coeffs[k].real());
            const __m256d ai = _mm256_set1_pd(coeffs[k].imag());
            const __m256d tr = _mm256_add_pd(
                _mm256_fmsub_pd(br, zx, _mm256_mul_pd(bi, zy)), ar);
            bi = _mm256_add_pd(_mm256_fmadd_pd(br, zy, _mm256_mul_pd(bi, zx)), ai);
            br = tr;
        }
        const __m256d mag =
            _mm256_fmadd_pd(br, br, _mm256_mul_pd(bi, bi));
        _mm256_storeu_pd(out + i, mag);
    }
    if (i < n) abs2_poly_scalar(coeffs, ncoeff, center, xs + i, ys + i, n - i, out + i);
}

void accum_alpha_log_dist2_avx2(double alpha, double px, double py,
                                const double* xs, const double* ys,
                                std::size_t n, double* acc) {
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vpx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vpy);
        const __m256d d2 = _mm256_fmadd_pd(dx, dx, _mm256_mul_pd(dy, dy));
        const __m256d r =
            _mm256_fmadd_pd(va, log4(d2), _mm256_loadu_pd(acc + i));
        _mm256_storeu_pd(acc + i, r);
    }
    if (i < n)
        accum_alpha_log_dist2_scalar(alpha, px, py, xs + i, ys + i, n - i, acc + i);
}

void accum_alpha_log_one_minus_pbar_z2_avx2(double alpha, double px, double py,
                                            const double* xs, const double* ys,
                                            std::size_t n, double* acc) {
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs + i);
        const __m256d y = _mm256_loadu_pd(ys + i);
        const __m256d wr = _mm256_sub_pd(
            one, _mm256_fmadd_pd(vpx, x, _mm256_mul_pd(vpy, y)));
        const __m256d wi = _mm256_sub_pd(_mm256_mul_pd(vpy, x),
                                         _mm256_mul_pd(vpx, y));
        const __m256d w2 = _mm256_fmadd_pd(wr, wr, _mm256_mul_pd(wi, wi));
        const __m256d r =
            _mm256_fmadd_pd(va, log4(w2), _mm256_loadu_pd(acc + i));
        _mm256_storeu_pd(acc + i, r);
    }
    if (i < n)
        accum_alpha_log_one_minus_pbar_z2_scalar(alpha, px, py, xs + i, ys + i,
                                                 n - i, acc + i);
}

} // namespace supportfn::kern

#else // no AVX2 at compile time: keep the symbols, fall back to scalar

namespace supportfn::kern {

void abs2_poly_avx2(const C* coeffs, std::size_t ncoeff, C center,
                    const double* xs, const double* ys, std::size_t n,
                    double* out) {
    abs2_poly_scalar(coeffs, ncoeff, center, xs, ys, n, out);
}
void accum_alpha_log_dist2_avx2(double alpha, double px, double py,
                                const double* xs, const double* ys,
                                std::size_t n, double* acc) {
    accum_alpha_log_dist2_scalar(alpha, px, py, xs, ys, n, acc);
}
void accum_alpha_log_one_minus_pbar_z2_avx2(double alpha, double px, double py,
                                            const double* xs, const double* ys,
                                            std::size_t n, double* acc) {
    accum_alpha_log_one_minus_pbar_z2_scalar(alpha, px, py, xs, ys, n, acc);
}

} // namespace supportfn::kern

#endif

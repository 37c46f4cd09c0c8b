#include <cmath>

#include "supportfn/kernels.hpp"

namespace supportfn::kern {

void abs2_poly_scalar(const C* coeffs, std::size_t ncoeff, C center,
                      const double* xs, const double* ys, std::size_t n,
                      double* out) {
    const double cx = center.real(), cy = center.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double zx = xs[i] - cx, zy = ys[i] - cy;
        double br = 0.0, bi = 0.0;
        for (std::size_t k = ncoeff; k-- > 0;) {
            const double tr = br * zx - bi * zy + coeffs[k].real();
            bi = br * zy + bi * zx + coeffs[k].imag();
            br = tr;
        }
        out[i] = br * br + bi * bi;
    }
}

void accum_alpha_log_dist2_scalar(double alpha, double px, double py,
                                  const double* xs, const double* ys,
                                  std::size_t n, double* acc) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px, dy = ys[i] - py;
        acc[i] += alpha * std::log(dx * dx + dy * dy);
    }
}

void accum_alpha_log_one_minus_pbar_z2_scalar(double alpha, double px, double py,
                                              const double* xs, const double* ys,
                                              std::size_t n, double* acc) {
    for (std::size_t i = 0; i < n; ++i) {
        const double wr = 1.0 - (px * xs[i] + py * ys[i]);
        const double wi = -(px * ys[i] - py * xs[i]);
        acc[i] += alpha * std::log(wr * wr + wi * wi);
    }
}

} // namespace supportfn::kern

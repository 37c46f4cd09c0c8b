#include "supportfn/quadrature.hpp"

#include <cmath>
#include <vector>

#include "supportfn/kernels.hpp"
#include "supportfn/quad1d.hpp"
#include "supportfn/rng.hpp"

namespace supportfn {

namespace {

double weight_factor(RadialWeightKind wk, const ClassPFunction* c, double s) {
    switch (wk) {
        case RadialWeightKind::One: return 1.0;
        case RadialWeightKind::ExpNegPsi: return std::exp(s);
        case RadialWeightKind::ClassP: return (*c)(s);
    }
    return 0.0;
}

enum class TailVerdict { Converges, Diverges, Unknown };

// Net exponential rate rho and polynomial power of the substituted
// integrand e^{-gamma s} w~(s); the tail integral converges iff rho < 0, or
// rho == 0 with power < -1.
TailVerdict analytic_tail(int k, double alpha, RadialWeightKind wk,
                          const ClassPFunction* c) {
    const double gamma = double(k + 1) / alpha;
    double rho = -gamma;
    double pow = 0.0;
    switch (wk) {
        case RadialWeightKind::One: break;
        case RadialWeightKind::ExpNegPsi: rho += 1.0; break;
        case RadialWeightKind::ClassP: {
            const auto tail = c->tail();
            if (!tail.known) {
                // class-P growth bound c(s) <= c(s0) e^{s-s0}
                return gamma > 1.0 ? TailVerdict::Converges : TailVerdict::Unknown;
            }
            rho += tail.exp_rate;
            pow += tail.poly_pow;
            break;
        }
    }
    if (rho < 0.0) return TailVerdict::Converges;
    if (rho > 0.0) return TailVerdict::Diverges;
    return pow < -1.0 ? TailVerdict::Converges : TailVerdict::Diverges;
}

} // namespace

IntegralResult radial_mode_integral(int k, double alpha, RadialWeightKind wk,
                                    const ClassPFunction* c, double lo, double hi,
                                    double rtol) {
    if (k < 0 || !(alpha > 0.0) || lo < 0.0 || hi < lo)
        throw invalid_parameter("radial_mode_integral: bad spec");
    if (wk == RadialWeightKind::ClassP && c == nullptr)
        throw invalid_parameter("radial_mode_integral: missing density");
    const double gamma = double(k + 1) / alpha;
    const double scale = kPi / alpha;
    const auto integrand = [&](double s) {
        return std::exp(-gamma * s) * weight_factor(wk, c, s);
    };

    IntegralResult out;
    if (std::isfinite(hi)) {
        Quad1dResult q = integrate_adaptive(integrand, lo, hi, rtol);
        out.value = scale * q.value;
        out.abs_error = scale * q.abs_err;
        out.converged = q.converged;
        out.nodes = q.evals;
        return out;
    }

    const TailVerdict analytic = analytic_tail(k, alpha, wk, c);
    TailResult tr = integrate_tail(integrand, lo, rtol);
    out.nodes = tr.evals;
    const bool numeric_div = tr.diverged;
    const bool numeric_conv = tr.converged;
    if (analytic == TailVerdict::Diverges && numeric_div) {
        out.diverged = true;
        out.value = inf();
        return out;
    }
    if (analytic != TailVerdict::Diverges && numeric_conv) {
        out.value = scale * tr.value;
        out.abs_error = scale * tr.abs_err;
        return out;
    }
    // signals disagree or neither is decisive
    out.converged = false;
    out.diverged = analytic == TailVerdict::Diverges || numeric_div;
    out.value = out.diverged ? inf() : scale * tr.value;
    out.abs_error = scale * tr.abs_err;
    return out;
}

IntegralResult radial_integral(const RadialIntegralSpec& spec) {
    if (!(spec.t > 0.0)) throw invalid_parameter("radial_integral: t must be positive");
    return spec.bounds == RadialBounds::Annulus
               ? radial_mode_integral(spec.k, spec.alpha, spec.weight, spec.c, 0.0,
                                      spec.t, spec.rtol)
               : radial_mode_integral(spec.k, spec.alpha, spec.weight, spec.c,
                                      spec.t, inf(), spec.rtol);
}

IntegralResult radial_abs2_integral(const Weight& w, const HolPoly& F,
                                    RadialWeightKind wk, const ClassPFunction* c,
                                    double lo, double hi, double rtol) {
    if (!w.is_radial())
        throw invalid_parameter("radial_abs2_integral needs a radial weight");
    if (F.center() != w.base_point())
        throw invalid_parameter("radial_abs2_integral: F must be centered at z0");
    IntegralResult total;
    for (int k = 0; k <= F.degree(); ++k) {
        const double a2 = std::norm(F.coeff(std::size_t(k)));
        if (a2 == 0.0) continue;
        IntegralResult mode =
            radial_mode_integral(k, w.alpha_at_base(), wk, c, lo, hi, rtol);
        total.nodes += mode.nodes;
        total.converged = total.converged && mode.converged;
        if (mode.diverged) {
            total.diverged = true;
            total.value = inf();
            return total;
        }
        total.value += a2 * mode.value;
        total.abs_error += a2 * mode.abs_error;
    }
    return total;
}

// ------------------------------------------------------- region integrals --

namespace {

// Shared batch evaluation: fills val[i] with the masked integrand value at
// (xs[i], ys[i]); returns the number of points inside the region.
class BatchEvaluator {
public:
    BatchEvaluator(const RegionQuadSpec& spec) : spec_(spec) {}

    void eval(const double* xs, const double* ys, std::size_t n, double* val) {
        s_.resize(n);
        spec_.region.weight.neg_psi_batch(xs, ys, n, s_.data());
        const RegionIntegrand& ig = spec_.integrand;
        if (ig.generic) {
            for (std::size_t i = 0; i < n; ++i)
                val[i] = spec_.region.contains_s(s_[i])
                             ? ig.generic(C(xs[i], ys[i]))
                             : 0.0;
            return;
        }
        if (ig.F != nullptr) {
            kern::abs2_poly(ig.F->coeffs().data(), ig.F->coeffs().size(),
                            ig.F->center(), xs, ys, n, val);
        } else {
            for (std::size_t i = 0; i < n; ++i) val[i] = 1.0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!spec_.region.contains_s(s_[i])) {
                val[i] = 0.0;
            } else if (ig.wkind != RadialWeightKind::One) {
                val[i] *= weight_factor(ig.wkind, ig.c, s_[i]);
            }
        }
    }

private:
    const RegionQuadSpec& spec_;
    std::vector<double> s_;
};

IntegralResult region_monte_carlo(const RegionQuadSpec& spec) {
    BatchEvaluator ev(spec);
    Rng rng(spec.seed);
    const long n = std::max<long>(spec.budget, 1000);
    constexpr std::size_t kBatch = 4096;
    std::vector<double> xs(kBatch), ys(kBatch), val(kBatch);
    double sum = 0.0, sumsq = 0.0;
    long done = 0;
    while (done < n) {
        const std::size_t m = std::size_t(std::min<long>(kBatch, n - done));
        for (std::size_t i = 0; i < m; ++i) rng.unit_disc(xs[i], ys[i]);
        ev.eval(xs.data(), ys.data(), m, val.data());
        for (std::size_t i = 0; i < m; ++i) {
            sum += val[i];
            sumsq += val[i] * val[i];
        }
        done += long(m);
    }
    const double mean = sum / double(n);
    const double var =
        std::max(0.0, (sumsq / double(n) - mean * mean)) * double(n) / double(n - 1);
    IntegralResult out;
    out.value = kPi * mean;
    out.abs_error = 3.0 * kPi * std::sqrt(var / double(n));
    out.nodes = n;
    return out;
}

double polar_grid_pass(BatchEvaluator& ev, int nr) {
    const int nth = 2 * nr;
    const double dr = 1.0 / nr;
    const double dth = 2.0 * kPi / nth;
    std::vector<double> xs(std::size_t(nth)), ys(std::size_t(nth)),
        val(std::size_t(nth));
    double acc = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double r = (i + 0.5) * dr;
        for (int j = 0; j < nth; ++j) {
            const double th = (j + 0.5) * dth;
            xs[std::size_t(j)] = r * std::cos(th);
            ys[std::size_t(j)] = r * std::sin(th);
        }
        ev.eval(xs.data(), ys.data(), std::size_t(nth), val.data());
        double ring = 0.0;
        for (int j = 0; j < nth; ++j) ring += val[std::size_t(j)];
        acc += ring * r * dr * dth;
    }
    return acc;
}

IntegralResult region_tensor(const RegionQuadSpec& spec) {
    BatchEvaluator ev(spec);
    IntegralResult out;
    int nr = 48;
    double prev = polar_grid_pass(ev, nr);
    out.nodes = 2L * nr * nr;
    out.converged = false;
    for (;;) {
        nr *= 2;
        const double cur = polar_grid_pass(ev, nr);
        out.nodes += 2L * nr * nr;
        out.abs_error = std::fabs(cur - prev);
        out.value = cur;
        if (out.abs_error <= spec.rtol * std::max(std::fabs(cur), 1e-300)) {
            out.converged = true;
            return out;
        }
        if (out.nodes >= std::max<long>(spec.budget, 10000)) return out;
        prev = cur;
    }
}

} // namespace

IntegralResult region_integral(const RegionQuadSpec& spec) {
    if (spec.integrand.wkind == RadialWeightKind::ClassP &&
        spec.integrand.c == nullptr && !spec.integrand.generic)
        throw invalid_parameter("region_integral: missing density");
    return spec.method == RegionMethod::MonteCarlo ? region_monte_carlo(spec)
                                                   : region_tensor(spec);
}

// ------------------------------------------------------------- layer cake --

namespace {

// Slab measure of {-t <= psi < -l} under |F|^2 for radial weights.
double radial_slab(const Weight& w, const HolPoly& F, double l, double t,
                   double rtol) {
    IntegralResult r =
        radial_abs2_integral(w, F, RadialWeightKind::One, nullptr, l, t, rtol);
    return r.value;
}

double layer_cake_rhs_radial(const Weight& w, const HolPoly& F, double t,
                             const LayerCakeControl& ctl) {
    const double full = radial_slab(w, F, 0.0, t, ctl.rtol);
    const auto integrand = [&](double l) {
        return std::exp(l) * (full - radial_slab(w, F, 0.0, l, ctl.rtol));
    };
    // the l < 0 part contributes the full slab times integral of e^l = 1
    Quad1dResult q = integrate_adaptive(integrand, 0.0, t, ctl.rtol * 10.0);
    return full + q.value;
}

double layer_cake_rhs_mc(const Weight& w, const HolPoly& F, double t,
                         const LayerCakeControl& ctl) {
    // Slab measure of {-t <= psi < -l}: one Monte-Carlo pass per node with
    // its own stream, so the identity check is not trivially self-fulfilling.
    std::uint64_t salt = 0;
    const auto slab_mc = [&](double l) {
        SuperlevelSet dt(w, t, Orientation::AtLeast);
        RegionQuadSpec spec(dt, RegionIntegrand::fn([&w, &F, l](C z) {
                                const double s = -w.psi(z);
                                return s > l ? std::norm(F.eval(z)) : 0.0;
                            }));
        spec.method = RegionMethod::MonteCarlo;
        spec.budget = ctl.mc_budget;
        spec.seed = Rng(ctl.seed).stream(++salt).next_u64();
        return region_integral(spec).value;
    };

    // l < 0: the slab is all of D_t and the e^l factor integrates to 1.
    const double full = slab_mc(0.0);

    // [0, t]: composite Kronrod panels with fresh samples per node.
    double acc = 0.0;
    const int panels = std::max(2, ctl.mc_l_panels);
    for (int p = 0; p < panels; ++p) {
        const double a = t * double(p) / panels;
        const double b = t * double(p + 1) / panels;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < 8; ++i) {
            const double wk = detail::kGk15[i][2] * half;
            const double dx = half * detail::kGk15[i][0];
            acc += wk * std::exp(mid + dx) * slab_mc(mid + dx);
            if (i > 0) acc += wk * std::exp(mid - dx) * slab_mc(mid - dx);
        }
    }
    return full + acc;
}

} // namespace

double layer_cake_rhs(const Weight& w, const HolPoly& F, double t,
                      const LayerCakeControl& ctl) {
    if (!(t > 0.0)) throw invalid_parameter("layer_cake_rhs: t must be positive");
    if (w.is_radial() && !ctl.monte_carlo) return layer_cake_rhs_radial(w, F, t, ctl);
    return layer_cake_rhs_mc(w, F, t, ctl);
}

} // namespace supportfn

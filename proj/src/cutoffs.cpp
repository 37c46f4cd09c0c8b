#include "supportfn/cutoffs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "supportfn/quad1d.hpp"

namespace supportfn {

// ---------------------------------------------------------------- interp --

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n)
        throw invalid_parameter("MonotoneCubic: need >= 2 nodes, equal sizes");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(xs_[i + 1] > xs_[i]))
            throw invalid_parameter("MonotoneCubic: xs must be strictly increasing");

    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        delta[i] = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);

    slopes_.assign(n, 0.0);
    slopes_[0] = delta[0];
    slopes_[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
        slopes_[i] = (delta[i - 1] * delta[i] > 0.0)
                         ? 0.5 * (delta[i - 1] + delta[i])
                         : 0.0;

    // Fritsch-Carlson limiter
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (delta[i] == 0.0) {
            slopes_[i] = slopes_[i + 1] = 0.0;
            continue;
        }
        const double a = slopes_[i] / delta[i];
        const double b = slopes_[i + 1] / delta[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            slopes_[i] = tau * a * delta[i];
            slopes_[i + 1] = tau * b * delta[i];
        }
    }
}

std::size_t MonotoneCubic::locate(double x) const {
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    if (it == xs_.begin()) return 0;
    std::size_t i = std::size_t(it - xs_.begin()) - 1;
    return std::min(i, xs_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
    const std::size_t i = locate(x);
    const double h = xs_[i + 1] - xs_[i];
    const double u = (x - xs_[i]) / h;
    const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
    const double h10 = u * (1 - u) * (1 - u);
    const double h01 = u * u * (3 - 2 * u);
    const double h11 = u * u * (u - 1);
    return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] +
           h11 * h * slopes_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
    if (x <= xs_.front()) return slopes_.front();
    if (x >= xs_.back()) return slopes_.back();
    const std::size_t i = locate(x);
    const double h = xs_[i + 1] - xs_[i];
    const double u = (x - xs_[i]) / h;
    const double d00 = (6 * u * u - 6 * u) / h;
    const double d10 = 3 * u * u - 4 * u + 1;
    const double d01 = -d00;
    const double d11 = 3 * u * u - 2 * u;
    return d00 * ys_[i] + d10 * slopes_[i] + d01 * ys_[i + 1] + d11 * slopes_[i + 1];
}

// ------------------------------------------------------ smooth cumulative --

namespace detail {

SmoothCumulative::SmoothCumulative(std::function<double(double)> f, double lo,
                                   double hi, int npanels)
    : f_(std::move(f)), lo_(lo), hi_(hi) {
    h_ = (hi_ - lo_) / npanels;
    prefix_.assign(std::size_t(npanels) + 1, 0.0);
    double acc = 0.0, err = 0.0;
    for (int i = 0; i < npanels; ++i) {
        acc += gk15_panel(f_, lo_ + i * h_, lo_ + (i + 1) * h_, err);
        prefix_[std::size_t(i) + 1] = acc;
    }
    total_ = acc;
}

double SmoothCumulative::operator()(double y) const {
    if (y <= lo_) return 0.0;
    if (y >= hi_) return total_;
    const int i = std::min(int((y - lo_) / h_), int(prefix_.size()) - 2);
    const double x0 = lo_ + i * h_;
    double err = 0.0;
    return prefix_[std::size_t(i)] + (y > x0 ? gk15_panel(f_, x0, y, err) : 0.0);
}

} // namespace detail

// ---------------------------------------------------------------- bump f --

double BumpData::f(double x) {
    const double u = x - 1.0;
    if (std::fabs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

BumpData::BumpData() : cum_(&BumpData::f, 0.0, 2.0, 1024) { d_ = cum_.total(); }

const BumpData& BumpData::instance() {
    static const BumpData data;
    return data;
}

double BumpData::g(int n, double x) const {
    if (n < 1) throw invalid_parameter("g_n: n must be >= 1");
    return double(n) / ((double(n) + 1.0) * d_) * cum_(double(n) * x);
}

double BumpData::g_derivative(int n, double x) const {
    if (n < 1) throw invalid_parameter("g_n: n must be >= 1");
    return double(n) * double(n) / ((double(n) + 1.0) * d_) * f(double(n) * x);
}

double eval_ctn(double t, int n, double x) {
    return 1.0 - BumpData::instance().g(n, x - t);
}

// ------------------------------------------------------- class P density --

ClassPFunction ClassPFunction::constant(double kappa) {
    if (!(kappa > 0.0)) throw invalid_parameter("constant density must be positive");
    return ClassPFunction(Kind::Constant, kappa, 0.0);
}

ClassPFunction ClassPFunction::exp_rate(double beta) {
    return ClassPFunction(Kind::ExpRate, beta, 0.0);
}

ClassPFunction ClassPFunction::power_decay(double p) {
    if (!(p > 0.0)) throw invalid_parameter("power decay exponent must be positive");
    return ClassPFunction(Kind::PowerDecay, p, 0.0);
}

ClassPFunction ClassPFunction::ctn_family(double t, int n) {
    if (!(t > 0.0) || n < 1) throw invalid_parameter("ctn family needs t > 0, n >= 1");
    return ClassPFunction(Kind::CtnFamily, t, double(n));
}

ClassPFunction ClassPFunction::custom(std::vector<double> ts,
                                      std::vector<double> values) {
    for (double v : values)
        if (!(v > 0.0)) throw invalid_parameter("custom density must be positive");
    ClassPFunction c(Kind::Custom, 0.0, 0.0);
    c.table_ = std::make_shared<MonotoneCubic>(std::move(ts), std::move(values));
    return c;
}

double ClassPFunction::operator()(double s) const {
    switch (kind_) {
        case Kind::Constant: return a_;
        case Kind::ExpRate: return std::exp(a_ * s);
        case Kind::PowerDecay: return std::pow(1.0 + s, -a_);
        case Kind::CtnFamily: return eval_ctn(a_, int(b_), s);
        case Kind::Custom: return (*table_)(s);
    }
    return nan();
}

double ClassPFunction::derivative(double s) const {
    switch (kind_) {
        case Kind::Constant: return 0.0;
        case Kind::ExpRate: return a_ * std::exp(a_ * s);
        case Kind::PowerDecay: return -a_ * std::pow(1.0 + s, -a_ - 1.0);
        case Kind::CtnFamily:
            return -BumpData::instance().g_derivative(int(b_), s - a_);
        case Kind::Custom: return table_->derivative(s);
    }
    return nan();
}

std::string ClassPFunction::name() const {
    char buf[64];
    switch (kind_) {
        case Kind::Constant: std::snprintf(buf, sizeof buf, "constant:%g", a_); break;
        case Kind::ExpRate: std::snprintf(buf, sizeof buf, "exp:%g", a_); break;
        case Kind::PowerDecay: std::snprintf(buf, sizeof buf, "powdecay:%g", a_); break;
        case Kind::CtnFamily:
            std::snprintf(buf, sizeof buf, "ctn:%g,%d", a_, int(b_));
            break;
        case Kind::Custom: std::snprintf(buf, sizeof buf, "custom"); break;
    }
    return buf;
}

ClassPFunction::TailInfo ClassPFunction::tail() const {
    switch (kind_) {
        case Kind::Constant: return {0.0, 0.0, true};
        case Kind::ExpRate: return {a_, 0.0, true};
        case Kind::PowerDecay: return {0.0, -a_, true};
        case Kind::CtnFamily: return {0.0, 0.0, true}; // flattens at 1/(n+1)
        case Kind::Custom: return {0.0, 0.0, false};
    }
    return {0.0, 0.0, false};
}

double ClassPFunction::certificate() const {
    if (!std::isnan(cert_)) return cert_;
    const auto integrand = [this](double s) { return (*this)(s) * std::exp(-s); };
    TailResult tr = integrate_tail(integrand, 0.0, 1e-12, 1.0, 64);
    cert_ = tr.diverged ? inf() : tr.value;
    return cert_;
}

ClassPReport validate_class_p(const ClassPFunction& c, const SamplingSpec& grid) {
    ClassPReport rep;

    // (1) finite weighted total
    rep.certificate = c.certificate();
    rep.cond1 = std::isfinite(rep.certificate);

    // (2) c(s)e^{-s} nonincreasing on a geometric sample grid
    rep.cond2 = true;
    const double decades = std::log10(grid.hi / grid.lo);
    const int n = std::max(2, int(decades * grid.per_decade));
    double prev = nan();
    double scale = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double s = grid.lo * std::pow(grid.hi / grid.lo, double(i) / n);
        const double val = c(s) * std::exp(-s);
        scale = std::max(scale, std::fabs(val));
        if (i > 0 && val > prev + 1e-12 * scale) {
            rep.cond2 = false;
            rep.cond2_witness = s;
            break;
        }
        prev = val;
    }

    // (3) positive infimum on (a, inf) for each tested a
    rep.cond3 = true;
    const auto tail = c.tail();
    for (double a : {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0}) {
        double lo = inf();
        for (int i = 0; i <= 256; ++i) {
            const double s = a * std::pow(grid.hi / a, double(i) / 256.0);
            lo = std::min(lo, c(s));
        }
        double tail_inf = lo;
        if (tail.known) {
            if (tail.exp_rate < 0.0 || tail.poly_pow < 0.0) tail_inf = 0.0;
            if (c.kind() == ClassPFunction::Kind::CtnFamily)
                tail_inf = std::min(lo, 1.0 / (c.param_b() + 1.0));
        }
        if (!(tail_inf > 0.0)) {
            rep.cond3 = false;
            rep.cond3_witness_a = a;
            break;
        }
    }
    return rep;
}

// --------------------------------------------------------------- ramp b,v --

RampPair::RampPair(double t0_, double B_) : t0(t0_), B(B_) {
    if (!(t0 > 0.0) || !(B > 0.0)) throw invalid_parameter("ramp needs t0 > 0, B > 0");
}

RampValue eval_ramp(const RampPair& rp, double t) {
    RampValue out;
    out.b = std::clamp((t + rp.t0 + rp.B) / rp.B, 0.0, 1.0);
    if (t >= -rp.t0) {
        out.v = t;
    } else if (t >= -rp.t0 - rp.B) {
        const double w = t + rp.t0 + rp.B;
        out.v = -rp.t0 + (w * w - rp.B * rp.B) / (2.0 * rp.B);
    } else {
        out.v = -rp.t0 - rp.B / 2.0;
    }
    return out;
}

// --------------------------------------------------------- mollified v_eps --

namespace {

// Prefix-integral ladder of the normalized standard bump on (-1,1):
// rho1 (density), R1 = cum rho1, T1 = cum R1, U1 = cum T1.  T1(x) = x and
// U1(x) = U1(1) + (x^2-1)/2 for x >= 1; everything vanishes left of -1.
struct StdBumpTables {
    detail::SmoothCumulative R1cum;  // integral of rho1 from -1
    detail::SmoothCumulative T1cum;  // integral of R1 from -1
    detail::SmoothCumulative U1cum;  // integral of T1 from -1
    double U1_at_1;

    static double rho1(double x) {
        if (std::fabs(x) >= 1.0) return 0.0;
        return std::exp(-1.0 / (1.0 - x * x));
    }

    StdBumpTables() {
        const double d = detail::SmoothCumulative(&rho1, -1.0, 1.0, 1024).total();
        R1cum = detail::SmoothCumulative(
            [d](double x) { return rho1(x) / d; }, -1.0, 1.0, 1024);
        T1cum = detail::SmoothCumulative(
            [this](double x) { return R1(x); }, -1.0, 1.0, 1024);
        U1cum = detail::SmoothCumulative(
            [this](double x) { return T1(x); }, -1.0, 1.0, 1024);
        U1_at_1 = U1cum.total();
    }

    double R1(double x) const {
        if (x <= -1.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return R1cum(x);
    }
    double T1(double x) const {
        if (x <= -1.0) return 0.0;
        if (x >= 1.0) return T1cum.total() + (x - 1.0);
        return T1cum(x);
    }
    double U1(double x) const {
        if (x <= -1.0) return 0.0;
        if (x >= 1.0) {
            const double t1 = T1cum.total();
            return U1_at_1 + t1 * (x - 1.0) + 0.5 * (x - 1.0) * (x - 1.0);
        }
        return U1cum(x);
    }

    static const StdBumpTables& instance() {
        static const StdBumpTables t;
        return t;
    }
};

} // namespace

namespace {
// Second antiderivative of the mollified plateau indicator, up to a constant.
double mollified_vint(double t, double a, double b, double width, double eta) {
    const auto& tab = StdBumpTables::instance();
    return eta * eta * (tab.U1((t - a) / eta) - tab.U1((t - b) / eta)) / width;
}
} // namespace

MollifiedV::MollifiedV(double t0, double B, double eps)
    : t0_(t0), B_(B), eps_(eps) {
    if (!(t0 > 0.0) || !(B > 0.0)) throw invalid_parameter("mollified v needs t0 > 0, B > 0");
    if (!(eps > 0.0 && eps < B / 8.0))
        throw invalid_parameter("mollified v needs eps in (0, B/8)");
    a_ = -t0_ - B_ + 2.0 * eps_;
    b_ = -t0_ - 2.0 * eps_;
    width_ = B_ - 4.0 * eps_;
    eta_ = eps_ / 4.0;
    vint0_ = mollified_vint(0.0, a_, b_, width_, eta_); // anchors v(0) = 0
}

MollifiedV::Value MollifiedV::eval(double t) const {
    const auto& tab = StdBumpTables::instance();
    const double xa = (t - a_) / eta_;
    const double xb = (t - b_) / eta_;
    Value out;
    out.v2 = (tab.R1(xa) - tab.R1(xb)) / width_;
    out.v1 = eta_ * (tab.T1(xa) - tab.T1(xb)) / width_;
    out.v = mollified_vint(t, a_, b_, width_, eta_) - vint0_;
    return out;
}

} // namespace supportfn

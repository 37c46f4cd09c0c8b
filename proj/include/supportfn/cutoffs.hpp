#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "supportfn/common.hpp"
#include "supportfn/interp.hpp"

namespace supportfn {

namespace detail {

/// Cached prefix integrals of a smooth function on [lo,hi]: panel table built
/// once, point queries finish the last partial panel with one Kronrod rule.
class SmoothCumulative {
public:
    SmoothCumulative() = default;
    SmoothCumulative(std::function<double(double)> f, double lo, double hi,
                     int npanels = 512);
    double operator()(double y) const;
    double total() const { return total_; }

private:
    std::function<double(double)> f_;
    double lo_ = 0.0, hi_ = 0.0, h_ = 0.0, total_ = 0.0;
    std::vector<double> prefix_;
};

} // namespace detail

/// The smooth step construction behind the indicator-approximating cutoff
/// family: f(x) = exp(-1/(1-(x-1)^2)) on |x-1|<1, d = integral of f, and
/// g_n(x) = n/((n+1)d) * integral of f over [0, n x].
class BumpData {
public:
    static const BumpData& instance();

    static double f(double x);
    double d() const { return d_; }
    double g(int n, double x) const;
    double g_derivative(int n, double x) const;

    /// Cumulative of f from 0 to y (clamped to [0,2]).
    double f_cumulative(double y) const { return cum_(y); }

private:
    BumpData();
    detail::SmoothCumulative cum_;
    double d_ = 0.0;
};

/// c_t^n(x) = 1 - g_n(x - t): smooth, decreasing, in [1/(n+1), 1] on (0,inf),
/// converging pointwise to the indicator of x <= t.
double eval_ctn(double t, int n, double x);

/// Positive smooth densities c on (0, +inf) used as weights c(-psi).
class ClassPFunction {
public:
    enum class Kind { Constant, ExpRate, PowerDecay, CtnFamily, Custom };

    static ClassPFunction constant(double kappa);
    static ClassPFunction exp_rate(double beta);    // c(t) = e^{beta t}
    static ClassPFunction power_decay(double p);    // c(t) = (1+t)^{-p}
    static ClassPFunction ctn_family(double t, int n);
    static ClassPFunction custom(std::vector<double> ts, std::vector<double> values);

    double operator()(double s) const;
    double derivative(double s) const;

    Kind kind() const { return kind_; }
    double param_a() const { return a_; }
    double param_b() const { return b_; }
    std::string name() const;

    /// Asymptotic tail model c(s) ~ K * e^{rate*s} * s^{pow}; `known` is
    /// false for Custom, where only the class-P growth bound applies.
    struct TailInfo {
        double exp_rate = 0.0;
        double poly_pow = 0.0;
        bool known = false;
    };
    TailInfo tail() const;

    /// Cached integral of c(s)e^{-s} over (0,inf); +inf when divergent.
    /// Computed on first use.
    double certificate() const;

private:
    ClassPFunction(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
    Kind kind_;
    double a_ = 0.0, b_ = 0.0; // kind-specific parameters
    std::shared_ptr<MonotoneCubic> table_; // Custom only
    mutable double cert_ = nan();
};

struct SamplingSpec {
    double lo = 1e-6;
    double hi = 1e3;
    int per_decade = 512;     // geometric grid density for condition (2)
    double quad_tmax = 80.0;  // direct quadrature range for condition (1)
};

struct ClassPReport {
    bool cond1 = false; // finite integral of c e^{-s}
    bool cond2 = false; // c(s)e^{-s} nonincreasing on the sample grid
    bool cond3 = false; // positive lower bound on every tested tail (a,inf)
    double certificate = nan();
    double cond2_witness = nan();   // first sample where monotonicity failed
    double cond3_witness_a = nan(); // tested a whose tail infimum vanishes
    bool pass() const { return cond1 && cond2 && cond3; }
};

ClassPReport validate_class_p(const ClassPFunction& c, const SamplingSpec& grid = {});

/// Piecewise-linear ramp b and its integral v: b is 0 below -t0-B, 1 above
/// -t0, linear between; v(t) = integral of b from 0 to t.
struct RampPair {
    double t0 = 1.0;
    double B = 1.0;
    RampPair(double t0_, double B_);
};

struct RampValue {
    double b = 0.0;
    double v = 0.0;
};
RampValue eval_ramp(const RampPair& rp, double t);

/// Smooth convex regularization of the ramp integral: v_eps equals t on the
/// right, is constant on the far left, and v_eps'' is a mollified plateau
/// indicator bounded by 2/B.
class MollifiedV {
public:
    MollifiedV(double t0, double B, double eps);

    struct Value {
        double v = 0.0;
        double v1 = 0.0;
        double v2 = 0.0;
    };
    Value eval(double t) const;

    double t0() const { return t0_; }
    double B() const { return B_; }
    double eps() const { return eps_; }

private:
    double t0_, B_, eps_;
    double a_, b_, width_, eta_, vint0_;
};

} // namespace supportfn

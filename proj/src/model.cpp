#include "supportfn/model.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "supportfn/kernels.hpp"

namespace supportfn {

int jet_order(double alpha) {
    if (!(alpha > 0.0)) throw invalid_parameter("jet_order: alpha must be positive");
    // smallest integer m with m > alpha - 1; floor(alpha) in all cases
    // (for integer alpha that is alpha itself).
    return int(std::floor(alpha));
}

Weight::Weight(WeightKind kind, std::vector<double> alphas, std::vector<C> poles)
    : kind_(kind), alphas_(std::move(alphas)), poles_(std::move(poles)) {
    if (alphas_.empty() || alphas_.size() != poles_.size())
        throw invalid_parameter("weight needs matching, nonempty alphas/poles");
    for (double a : alphas_)
        if (!(a > 0.0)) throw invalid_parameter("weight exponents must be positive");
    for (C p : poles_)
        if (!(std::abs(p) < 1.0))
            throw invalid_parameter("poles must lie strictly inside the unit disc");
}

Weight Weight::unchecked(WeightKind kind, std::vector<double> alphas,
                         std::vector<C> poles) {
    return Weight(kind, std::move(alphas), std::move(poles));
}

namespace {
// Sum-of-logs weights are harmonic off their poles, so the sup over the
// closed disc sits on the boundary circle. A boundary max of exactly 0
// (poles at the origin) still means psi < 0 on the open disc, so only a
// positive max beyond the rounding margin is rejected.
void require_negative_on_disc(const Weight& w, const char* what) {
    if (w.boundary_max() > 1e-9)
        throw invalid_parameter(std::string(what) +
                                " is not negative on the unit disc "
                                "(rescaling is not performed; construct a weight that is)");
}
} // namespace

Weight Weight::radial_log(double alpha, C z0) {
    Weight w(WeightKind::RadialLog, {alpha}, {z0});
    require_negative_on_disc(w, "radial log weight");
    return w;
}

Weight Weight::sum_of_log_poles(std::vector<double> alphas, std::vector<C> poles) {
    Weight w(WeightKind::SumOfLogPoles, std::move(alphas), std::move(poles));
    require_negative_on_disc(w, "sum-of-log-poles weight");
    return w;
}

Weight Weight::blaschke_log_poles(std::vector<double> alphas, std::vector<C> poles) {
    // |(z-p)/(1-conj(p)z)| < 1 on the disc, so negativity holds by construction.
    return Weight(WeightKind::BlaschkeLogPoles, std::move(alphas), std::move(poles));
}

double Weight::psi(C z) const {
    const double x = z.real(), y = z.imag();
    double s = 0.0;
    neg_psi_batch(&x, &y, 1, &s);
    return -s;
}

void Weight::neg_psi_batch(const double* xs, const double* ys, std::size_t n,
                           double* out) const {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    for (std::size_t j = 0; j < poles_.size(); ++j) {
        kern::accum_alpha_log_dist2(alphas_[j], poles_[j].real(), poles_[j].imag(),
                                    xs, ys, n, out);
        if (kind_ == WeightKind::BlaschkeLogPoles)
            kern::accum_alpha_log_one_minus_pbar_z2(-alphas_[j], poles_[j].real(),
                                                    poles_[j].imag(), xs, ys, n, out);
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = -out[i];
}

double Weight::boundary_max(int samples) const {
    double best = -inf();
    for (int i = 0; i < samples; ++i) {
        const double th = 2.0 * kPi * double(i) / samples;
        best = std::max(best, psi(C(std::cos(th), std::sin(th))));
    }
    return best;
}

std::string Weight::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case WeightKind::RadialLog: os << "radial"; break;
        case WeightKind::SumOfLogPoles: os << "sumlog"; break;
        case WeightKind::BlaschkeLogPoles: os << "blaschke"; break;
    }
    for (std::size_t j = 0; j < poles_.size(); ++j) {
        char buf[96];
        std::snprintf(buf, sizeof buf, ":a%g@(%g,%g)", alphas_[j],
                      poles_[j].real(), poles_[j].imag());
        os << buf;
    }
    return os.str();
}

double superlevel_radius(const Weight& w, double t) {
    if (!w.is_radial())
        throw invalid_parameter("superlevel_radius is defined for radial weights");
    if (!(t > 0.0)) throw invalid_parameter("superlevel_radius: t must be positive");
    return std::exp(-t / (2.0 * w.alpha_at_base()));
}

HolPoly::HolPoly(std::vector<C> coeffs, C center)
    : coeffs_(std::move(coeffs)), center_(center) {
    if (coeffs_.empty()) coeffs_.push_back(C(0.0, 0.0));
}

C HolPoly::eval(C z) const {
    const C u = z - center_;
    C acc(0.0, 0.0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * u + coeffs_[k];
    return acc;
}

HolPoly HolPoly::scaled(C factor) const {
    std::vector<C> out(coeffs_);
    for (C& c : out) c *= factor;
    return HolPoly(std::move(out), center_);
}

HolPoly HolPoly::minus(const HolPoly& other) const {
    if (center_ != other.center_)
        throw invalid_parameter("polynomial difference requires equal centers");
    std::vector<C> out(std::max(coeffs_.size(), other.coeffs_.size()), C(0.0, 0.0));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = coeff(k) - other.coeff(k);
    return HolPoly(std::move(out), center_);
}

HolPoly HolPoly::recentered(C new_center) const {
    const C shift = new_center - center_; // p(u) = q(u + shift)
    const std::size_t n = coeffs_.size();
    std::vector<C> out(n, C(0.0, 0.0));
    // binomial expansion of each (u + shift)^k
    std::vector<C> pow_shift(n, C(1.0, 0.0));
    for (std::size_t k = 1; k < n; ++k) pow_shift[k] = pow_shift[k - 1] * shift;
    for (std::size_t k = 0; k < n; ++k) {
        double binom = 1.0;
        for (std::size_t j = 0; j <= k; ++j) {
            out[j] += coeffs_[k] * binom * pow_shift[k - j];
            binom = binom * double(k - j) / double(j + 1);
        }
    }
    return HolPoly(std::move(out), new_center);
}

std::string HolPoly::describe() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const C a = coeffs_[k];
        if (a == C(0.0, 0.0) && coeffs_.size() > 1) continue;
        if (!first) os << "+";
        first = false;
        if (a.imag() == 0.0) {
            os << a.real();
        } else {
            os << "(" << a.real() << (a.imag() < 0 ? "" : "+") << a.imag() << "i)";
        }
        if (k >= 1) os << "z";
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

JetConstraint JetConstraint::from(const Weight& w, const HolPoly& F) {
    if (F.center() != w.base_point())
        throw invalid_parameter("F must be expanded about the weight's base point");
    JetConstraint jc;
    jc.order = w.base_jet_order();
    jc.fixed_coeffs.resize(std::size_t(jc.order));
    for (int k = 0; k < jc.order; ++k)
        jc.fixed_coeffs[std::size_t(k)] = F.coeff(std::size_t(k));
    return jc;
}

SuperlevelSet::SuperlevelSet(Weight w, double t_, Orientation o)
    : weight(std::move(w)), t(t_), orientation(o) {
    if (!(t >= 0.0)) throw invalid_parameter("superlevel set needs t >= 0");
}

bool SuperlevelSet::contains(C z) const { return contains_s(-weight.psi(z)); }

} // namespace supportfn

#pragma once

#include <cstdint>
#include <functional>

#include "supportfn/cutoffs.hpp"
#include "supportfn/model.hpp"

namespace supportfn {

struct IntegralResult {
    double value = 0.0;
    double abs_error = 0.0;
    bool diverged = false;  // value is +inf
    bool converged = true;  // false: budget exhausted / signals disagreed
    long nodes = 0;
};

enum class RadialWeightKind {
    One,       // plain area measure
    ExpNegPsi, // e^{-psi}
    ClassP,    // c(-psi)
};

enum class RadialBounds {
    InnerDisc, // {psi < -t}
    Annulus,   // D_t = {psi >= -t}
};

/// I = 2 pi * integral of r^{2k+1} w(r) dr over the radial range, reduced by
/// s = -2 alpha log r to (pi/alpha) * integral of e^{-(k+1)s/alpha} w~(s) ds.
struct RadialIntegralSpec {
    int k = 0;
    double alpha = 1.0;
    double t = 0.0;
    RadialWeightKind weight = RadialWeightKind::One;
    const ClassPFunction* c = nullptr;
    RadialBounds bounds = RadialBounds::Annulus;
    double rtol = 1e-10;
};

IntegralResult radial_integral(const RadialIntegralSpec& spec);

/// Same reduction over an arbitrary s-range [lo, hi] (hi may be +inf).
/// Divergent tails are flagged, not thrown; the analytic tail-exponent test
/// and the partial-integral growth monitor must agree, otherwise the result
/// is marked non-converged.
IntegralResult radial_mode_integral(int k, double alpha, RadialWeightKind w,
                                    const ClassPFunction* c, double lo, double hi,
                                    double rtol = 1e-10);

/// Integral of |F|^2 w over the radial region via per-mode orthogonality
/// (cross terms vanish on circles). F must be centered at the weight's base
/// point and the weight must be radial.
IntegralResult radial_abs2_integral(const Weight& w, const HolPoly& F,
                                    RadialWeightKind wk, const ClassPFunction* c,
                                    double lo, double hi, double rtol = 1e-10);

enum class RegionMethod { TensorGrid, MonteCarlo };

/// Integrand over a masked region: the structured form |F|^2 * w(-psi) runs
/// through the batch kernels; `generic`, when set, overrides it.
struct RegionIntegrand {
    const HolPoly* F = nullptr;
    RadialWeightKind wkind = RadialWeightKind::One;
    const ClassPFunction* c = nullptr;
    std::function<double(C)> generic;

    static RegionIntegrand one() { return {}; }
    static RegionIntegrand abs2(const HolPoly& F) {
        RegionIntegrand ri;
        ri.F = &F;
        return ri;
    }
    static RegionIntegrand abs2_weighted(const HolPoly& F, RadialWeightKind wk,
                                         const ClassPFunction* c = nullptr) {
        RegionIntegrand ri;
        ri.F = &F;
        ri.wkind = wk;
        ri.c = c;
        return ri;
    }
    static RegionIntegrand fn(std::function<double(C)> f) {
        RegionIntegrand ri;
        ri.generic = std::move(f);
        return ri;
    }
};

struct RegionQuadSpec {
    SuperlevelSet region;
    RegionIntegrand integrand;
    RegionMethod method = RegionMethod::MonteCarlo;
    long budget = 100000; // samples (MC) / max total grid nodes (tensor)
    std::uint64_t seed = 1;
    double rtol = 1e-8; // tensor-grid refinement target

    RegionQuadSpec(SuperlevelSet r, RegionIntegrand f)
        : region(std::move(r)), integrand(std::move(f)) {}
};

/// Tensor-grid: polar midpoint grid masked by the region predicate, refined
/// until successive refinements agree to rtol or the budget is exhausted.
/// Monte-Carlo: uniform rejection sampling over the disc with indicator
/// masking; abs_error is the 3 sigma estimate and the seed is recorded by
/// the caller in every emitted record.
IntegralResult region_integral(const RegionQuadSpec& spec);

struct LayerCakeControl {
    double rtol = 1e-10;
    bool monte_carlo = false;
    long mc_budget = 20000;    // samples per slab estimate
    int mc_l_panels = 8;       // Kronrod panels over [0, t] for the MC path
    std::uint64_t seed = 1;
};

/// Right side of the layer-cake identity:
///   integral over (-inf, t] of (slab measure of {-t <= psi < -l} under
///   |F|^2) e^l dl, split at l = 0 (the l < 0 part is the full D_t measure).
/// Inner divergence propagates as +inf.
double layer_cake_rhs(const Weight& w, const HolPoly& F, double t,
                      const LayerCakeControl& ctl = {});

} // namespace supportfn

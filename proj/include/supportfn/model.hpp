#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supportfn/common.hpp"

namespace supportfn {

/// Vanishing order generating the multiplier ideal of 2*alpha*log|z - z0| at
/// z0: the smallest integer m with m > alpha - 1.
int jet_order(double alpha);

enum class WeightKind {
    RadialLog,        // psi = 2 alpha log|z - z0|
    SumOfLogPoles,    // psi = sum_i 2 alpha_i log|z - p_i|
    BlaschkeLogPoles, // psi = sum_i 2 alpha_i log(|z - p_i| / |1 - conj(p_i) z|)
};

/// A negative plurisubharmonic model weight on the unit disc with marked
/// point z0 (= the first pole) and log-pole singularity data.
class Weight {
public:
    static Weight radial_log(double alpha, C z0 = C(0.0, 0.0));
    static Weight sum_of_log_poles(std::vector<double> alphas, std::vector<C> poles);
    static Weight blaschke_log_poles(std::vector<double> alphas, std::vector<C> poles);

    /// Skips the negativity validation; for direct evaluation and tests of
    /// rejected configurations only. Problem/scenario constructors always
    /// take validated weights.
    static Weight unchecked(WeightKind kind, std::vector<double> alphas,
                            std::vector<C> poles);

    WeightKind kind() const { return kind_; }
    const std::vector<double>& alphas() const { return alphas_; }
    const std::vector<C>& poles() const { return poles_; }
    C base_point() const { return poles_.front(); }
    double alpha_at_base() const { return alphas_.front(); }
    bool is_radial() const { return kind_ == WeightKind::RadialLog; }

    /// psi(z); -inf at poles.
    double psi(C z) const;

    /// Batch s = -psi over points (uses the vector kernels).
    void neg_psi_batch(const double* xs, const double* ys, std::size_t n,
                       double* out) const;

    /// Largest value of psi over a boundary grid of the unit disc.
    double boundary_max(int samples = 4096) const;

    /// Jet order of the multiplier ideal at the base point (local condition,
    /// so only the base-point exponent enters).
    int base_jet_order() const { return jet_order(alphas_.front()); }

    std::string describe() const;

private:
    Weight(WeightKind kind, std::vector<double> alphas, std::vector<C> poles);
    WeightKind kind_;
    std::vector<double> alphas_;
    std::vector<C> poles_;
};

/// The fixed planar domain: the unit disc.
struct Domain {
    static constexpr double radius = 1.0;
    static bool contains(C z) { return std::norm(z) < 1.0; }
};

/// r_t = e^{-t/(2 alpha)}: {psi < -t} is the disc |z - z0| < r_t for radial
/// weights.
double superlevel_radius(const Weight& w, double t);

/// Holomorphic polynomial stored as Taylor coefficients about a center.
class HolPoly {
public:
    HolPoly() : coeffs_{C(0.0, 0.0)} {}
    explicit HolPoly(std::vector<C> coeffs, C center = C(0.0, 0.0));

    C eval(C z) const;
    int degree() const { return int(coeffs_.size()) - 1; }
    C center() const { return center_; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    C coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : C(0.0, 0.0);
    }

    HolPoly scaled(C factor) const;
    HolPoly minus(const HolPoly& other) const; // requires equal centers

    /// Re-expands about a new center (binomial shift); degree is preserved.
    HolPoly recentered(C new_center) const;

    std::string describe() const;

private:
    std::vector<C> coeffs_;
    C center_;
};

/// Computable form of the ideal-coset membership: the first `order` Taylor
/// coefficients of any feasible competitor at z0 are pinned to these values.
struct JetConstraint {
    int order = 0;
    std::vector<C> fixed_coeffs;

    /// Derives the constraint for F under the weight's base-point ideal.
    /// F must be expanded about the weight's base point.
    static JetConstraint from(const Weight& w, const HolPoly& F);
};

enum class Orientation {
    AtLeast, // psi >= -t   (the superlevel set D_t)
    Below,   // psi < -t
};

struct SuperlevelSet {
    Weight weight;
    double t;
    Orientation orientation;

    SuperlevelSet(Weight w, double t_, Orientation o);
    bool contains(C z) const;
    /// Membership from a precomputed s = -psi(z).
    bool contains_s(double s) const {
        return orientation == Orientation::AtLeast ? s <= t : s > t;
    }
};

} // namespace supportfn

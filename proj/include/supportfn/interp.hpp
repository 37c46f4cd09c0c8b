#pragma once

#include <cstddef>
#include <vector>

namespace supportfn {

/// Monotone cubic Hermite interpolation (Fritsch-Carlson limited slopes).
/// Preserves monotonicity of the data, which keeps interpolated h(t) tables
/// invertible. Evaluation outside the node range clamps to the end values.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;
    double derivative(double x) const;

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }

private:
    std::size_t locate(double x) const;
    std::vector<double> xs_, ys_, slopes_;
};

} // namespace supportfn

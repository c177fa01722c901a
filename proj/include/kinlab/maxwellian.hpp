#pragma once

#include <array>
#include <vector>

#include "kinlab/grid.hpp"

namespace kinlab {

// Normalized Maxwellian mu(v) = (2pi)^{-3/2} e^{-|v|^2/2} and powers.
inline double mu3(const std::array<double, 3>& v) {
    double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    return 0.0634936359342409697857633 * std::exp(-0.5 * r2);  // (2pi)^{-3/2}
}
inline double sqrt_mu3(const std::array<double, 3>& v) {
    double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    return 0.2519842099789746329927182 * std::exp(-0.25 * r2);  // (2pi)^{-3/4}
}
inline double mu3_pow(const std::array<double, 3>& v, double p) {
    double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    return std::exp(p * (-0.5 * r2 - 2.756815599614018400952633));  // log(2pi)^{3/2}
}

// Coefficients of the polynomial P_p with  d^p/dx^p e^{-x^2/4} = P_p(x) e^{-x^2/4}.
// Recurrence P_{p+1} = P_p' - (x/2) P_p, kept in coefficient space; stable in
// double precision for the p <= 12 range used here.
std::vector<std::vector<double>> gaussian_quarter_derivative_polys(int p_max);

// d^p/dv1^p of sqrt(mu), evaluated via the recurrence above.
double dp_sqrt_mu3(const std::vector<std::vector<double>>& polys, int p,
                   const std::array<double, 3>& v);

}  // namespace kinlab

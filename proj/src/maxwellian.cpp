#include "kinlab/maxwellian.hpp"

namespace kinlab {

std::vector<std::vector<double>> gaussian_quarter_derivative_polys(int p_max) {
    std::vector<std::vector<double>> polys(p_max + 1);
    polys[0] = {1.0};
    for (int p = 0; p < p_max; ++p) {
        const auto& c = polys[p];
        std::vector<double> next(c.size() + 1, 0.0);
        // derivative part
        for (std::size_t i = 1; i < c.size(); ++i) next[i - 1] += static_cast<double>(i) * c[i];
        // -(x/2) * P_p part
        for (std::size_t i = 0; i < c.size(); ++i) next[i + 1] -= 0.5 * c[i];
        polys[p + 1] = std::move(next);
    }
    return polys;
}

double dp_sqrt_mu3(const std::vector<std::vector<double>>& polys, int p,
                   const std::array<double, 3>& v) {
    const auto& c = polys.at(p);
    double poly = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) poly = poly * v[0] + c[i];
    return poly * sqrt_mu3(v);
}

}  // namespace kinlab

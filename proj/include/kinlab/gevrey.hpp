#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kinlab/grid.hpp"
#include "kinlab/toy.hpp"

namespace kinlab {

// Result of the spectral-decay regression |Fhat| ~ A e^{-c |xi|^{2 sigma}},
// xi = (m, eta), fitted against radial-shell maxima.
struct GevreyFit {
    double sigma = 0.0;
    double c = 0.0;
    double logA = 0.0;
    double r2 = 0.0;
    int shells_used = 0;
    bool non_decaying = false;
};

// (sum over the truncated grid of e^{2c(|m|^2+|eta|^2)^{1/(2r)}} |Fhat|^2)^{1/2}.
// Overflow returns +inf and reports the first offending shell index.
double gevrey_norm(const PhaseField& field, double r, double c, int* overflow_shell = nullptr);

GevreyFit fit_decay(const PhaseField& field, double shell_min, double shell_max);

// Sharpness experiment: polynomially decaying initial data evolved by the
// exact solver, Gevrey partial sums over nested truncation radii.
struct SharpnessReport {
    std::vector<double> radii;         // R, 2R, 4R
    std::vector<double> partial_sums;  // squared partial Gevrey norms
    std::vector<double> growth;        // S(2R)/S(R)
    std::vector<double> increment_ratio;
    bool divergent = false;   // every doubling grows the sum by >= 10
    bool convergent = false;  // successive increments shrink by >= 2x
};

struct SharpnessConfig {
    int M = 8;
    int N_v = 2048;
    double V = 8.0;
    double base_radius = 0.0;  // 0: pick eta_max/4
    int poly_order = 4;        // initial data (1+|m|+|eta|)^{-p}
};

SharpnessReport sharpness_witness(double s, double r, double t, double c,
                                  const SharpnessConfig& cfg = {});

// Weighted derivative norms t^{(lambda+1)|a| + lambda|b|} ||d_x^a d_v^b f(t)||
// over a snapshot family, plus the k!^tau-normalized geometric fit.
struct WeightedNormEntry {
    int a = 0, b = 0;
    double t_at_max = 0.0;
    double value = 0.0;
};

struct WeightedNormTable {
    double lambda = 0.0;
    double tau = 1.0;
    std::vector<WeightedNormEntry> entries;
    std::vector<double> value_by_order;  // max over |a|+|b| = k
    double fit_logC = 0.0;               // slope of log(value_k / k!^tau)
    double fit_intercept = 0.0;
    double fit_residual = 0.0;           // rms residual of the linear fit
};

WeightedNormTable weighted_norms(const std::vector<PhaseField>& family, double lambda,
                                 int max_order, double s);

// Mixed-norm inequality on synthetic nonnegative data; returns the worst
// LHS/RHS ratio over the trials (<= 1 + roundoff when the inequality holds).
struct MinkowskiReport {
    double worst_ratio = 0.0;
    int trials = 0;
};

MinkowskiReport minkowski_check(int j0, int n_modes, int n_times, int trials, std::uint64_t seed);

}  // namespace kinlab

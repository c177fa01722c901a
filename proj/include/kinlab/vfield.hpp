#pragma once

#include <functional>

#include "kinlab/grid.hpp"

namespace kinlab {

// Time-weighted directional derivative
//   H_delta = t^{delta+1}/(delta+1) d_x1 + t^delta d_v1,
// a Fourier multiplier at frozen t.
struct VectorFieldSpec {
    double delta = 3.0;
    int axis = 1;      // 1-based, {1..d}
    double T = 1.0;    // horizon

    VectorFieldSpec() = default;
    VectorFieldSpec(double delta_, int axis_, double T_) : delta(delta_), axis(axis_), T(T_) {
        if (axis < 1 || axis > 3) throw ContractError("VectorFieldSpec: axis must be 1..3");
        if (!(T >= 1.0)) throw ContractError("VectorFieldSpec: need T >= 1");
    }
    void validate_against(double s) const {
        if (!(delta > 1.0 + 1.0 / (2.0 * s)))
            throw ContractError("VectorFieldSpec: delta must exceed 1 + 1/(2s)");
    }
};

struct DeltaPair {
    double lambda = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
};

cplx h_symbol(const VectorFieldSpec& spec, double t, const std::array<int, 3>& m,
              const std::array<double, 3>& eta);

// Multiplier h(t,m,eta)^k; k = 0 is the identity.
PhaseField apply_H_pow(const PhaseField& field, const VectorFieldSpec& spec, int k, double t);

// Residual of [H^k, d_t + v.d_x] = -delta k t^{delta-1} d_v1 H^{k-1} on a
// solution closure; d_t by central difference with step h_t, transport and
// d_v1 as exact multipliers.
struct CommutatorResult {
    double residual = 0.0;   // relative unless flagged
    bool absolute = false;   // RHS norm degenerate, absolute residual reported
};

CommutatorResult commutator_residual(const VectorFieldSpec& spec, int k, double t, double h_t,
                                     const std::function<PhaseField(double)>& solution);

// delta1 = lambda; delta2 per the two-branch formula; both strictly above
// 1 + 1/(2s) is asserted.
DeltaPair delta_pair(double lambda, double s);

// Symbol-level residuals of the two generation identities:
//   t^{lambda+1} i m1 and t^{lambda} i eta1 as combinations of h_{delta1,2}.
struct GenerationResidual {
    double res_x = 0.0;  // absolute residual of the d_x1 identity
    double res_v = 0.0;  // absolute residual of the d_v1 identity
    double mag_x = 0.0;  // magnitudes for relative comparison
    double mag_v = 0.0;
};

GenerationResidual generation_check(const DeltaPair& pair, double t, const std::array<int, 3>& m,
                                    const std::array<double, 3>& eta);

// ||(A1+A2)^k f|| <= 2^k (||A1^k f|| + ||A2^k f||); returns LHS/RHS.
using ScalarSymbol = std::function<cplx(const std::array<int, 3>&, const std::array<double, 3>&)>;
double split_inequality_check(const ScalarSymbol& a1, const ScalarSymbol& a2, int k,
                              const PhaseField& field);

// max over p <= p_max and the velocity grid of
//   |t^{delta p} d_v1^p sqrt(mu)| / ((2 T^delta)^p p! mu^{1/4})   at t = T.
struct GaussianBoundReport {
    double worst_ratio = 0.0;
    int worst_p = 0;
    double worst_v1 = 0.0;
};

GaussianBoundReport gaussian_bound_check(double delta, double T, int p_max, double v_extent,
                                         int n_scan);

}  // namespace kinlab

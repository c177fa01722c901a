#pragma once

#include "kinlab/grid.hpp"

namespace kinlab {

// Fractional kinetic Fokker-Planck toy models. gamma = 0 selects the model
// with the exact Fourier-side solution; gamma in (0,1] adds the <v>^gamma
// weight and is handled by splitting.
struct ToySpec {
    double s = 0.5;        // angular-singularity exponent, (0,1)
    double gamma = 0.0;    // weight exponent, [0,1]
    double T_end = 1.0;    // horizon
    double quad_tol = 1e-10;

    ToySpec() = default;
    ToySpec(double s_, double gamma_, double T_end_, double quad_tol_ = 1e-10)
        : s(s_), gamma(gamma_), T_end(T_end_), quad_tol(quad_tol_) {
        if (!(s > 0.0 && s < 1.0)) throw ContractError("ToySpec: need 0 < s < 1");
        if (!(gamma >= 0.0 && gamma <= 1.0)) throw ContractError("ToySpec: need 0 <= gamma <= 1");
        if (!(T_end > 0.0)) throw ContractError("ToySpec: need T_end > 0");
        if (!(quad_tol > 0.0 && quad_tol <= 1e-6)) throw ContractError("ToySpec: quad_tol in (0, 1e-6]");
    }
};

// psi(t,m,eta) = int_0^t |eta + rho m|^{2s} d rho. Closed forms for
// s = 1/2 and s = 1 (the latter a test-only exponent), adaptive
// Gauss-Kronrod otherwise. Relative accuracy quad_tol.
double psi_integral(double t, const std::array<double, 3>& m, const std::array<double, 3>& eta,
                    double s, double quad_tol = 1e-10);

// Exact solution of the gamma = 0 model:
//   Fhat(t, m, eta) = e^{-psi(t,m,eta)} Fhat0(m, eta + t m).
// Advances by duration t from the state in f0.
PhaseField exact_evolve(const PhaseField& f0, double t, const ToySpec& spec);

// Strang splitting: exact transport half-steps around a pseudo-spectral
// diffusion step (multiplier |eta|^{2s} in EtaSpace, weight <v>^gamma in
// VSpace) integrated with the classical 4-stage explicit scheme.
PhaseField step_evolve(const PhaseField& f0, const ToySpec& spec, double dt, int n_steps);

// Explicit-integrator stability bound for the diffusion substep.
double step_stability_bound(const ModeGrid& g, const ToySpec& spec);

}  // namespace kinlab

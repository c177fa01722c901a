#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kinlab/grid.hpp"

namespace kinlab {

// Cross-section B(v - v_*, sigma) = |v - v_*|^gamma b(cos theta) with the
// angular part pinned to equality sin(theta) b(cos theta) = K_b theta^{-1-2s}
// on [theta_min, pi/2]; one concrete kernel keeps every probe reproducible.
struct KernelSpec {
    double gamma = 0.0;      // [0, 1]
    double s = 0.5;          // (0, 1)
    double K_b = 1.0;        // > 0
    double theta_min = 0.05; // (0, pi/4]

    KernelSpec() = default;
    KernelSpec(double gamma_, double s_, double K_b_, double theta_min_)
        : gamma(gamma_), s(s_), K_b(K_b_), theta_min(theta_min_) {
        if (!(gamma >= 0.0 && gamma <= 1.0)) throw ContractError("KernelSpec: need 0 <= gamma <= 1");
        if (!(s > 0.0 && s < 1.0)) throw ContractError("KernelSpec: need 0 < s < 1");
        if (!(K_b > 0.0)) throw ContractError("KernelSpec: need K_b > 0");
        if (!(theta_min > 0.0 && theta_min <= kPi / 4.0))
            throw ContractError("KernelSpec: need theta_min in (0, pi/4]");
    }

    // Analytic integral of b over the supported spherical cap.
    double angular_mass() const {
        return 2.0 * kPi * K_b *
               (std::pow(theta_min, -2.0 * s) - std::pow(kPi / 2.0, -2.0 * s)) / (2.0 * s);
    }
};

// Velocity-only grid (d_v = 3) used by the collision quadrature.
struct VelGrid {
    int N = 16;
    double V = 8.0;

    VelGrid() = default;
    VelGrid(int N_, double V_) : N(N_), V(V_) {
        if (N < 2 || (N & (N - 1)) != 0) throw ContractError("VelGrid: N must be a power of two");
        if (!(V > 0.0)) throw ContractError("VelGrid: need V > 0");
    }
    double dv() const { return 2.0 * V / N; }
    std::size_t n() const { return static_cast<std::size_t>(N) * N * N; }
    double coord(int k) const { return -V + k * dv(); }
    std::array<double, 3> point(std::size_t flat) const {
        int k3 = static_cast<int>(flat % N);
        flat /= N;
        int k2 = static_cast<int>(flat % N);
        int k1 = static_cast<int>(flat / N);
        return {coord(k1), coord(k2), coord(k3)};
    }
    bool operator==(const VelGrid&) const = default;
};

using RField = std::vector<double>;
using CField = std::vector<cplx>;

// Tensor quadrature: grid nodes for v_*, geometric theta nodes accumulating
// at theta_min (exact theta^{-1-2s} subinterval masses), uniform phi nodes.
struct CollisionQuadrature {
    VelGrid grid;
    int N_theta = 8;
    int N_phi = 8;
    double prune_rel = 1e-18;  // adaptive node-skip threshold, relative

    std::vector<double> theta_nodes;    // weighted centroids, strictly inside support
    std::vector<double> theta_weights;  // K_b * int theta^{-1-2s} over the subinterval

    CollisionQuadrature() = default;
    CollisionQuadrature(const VelGrid& g, const KernelSpec& k, int n_theta, int n_phi,
                        double prune = 1e-18);

    // sum of node weights times 2*pi/N_phi across phi; equals angular_mass().
    double sphere_weight() const;
};

struct CollisionDiagnostics {
    double boundary_max_g = 0.0;   // boundary amplitude guard
    double boundary_max_f = 0.0;
    bool boundary_warning = false;
    std::uint64_t pairs_total = 0;
    std::uint64_t pairs_skipped = 0;
    int clipped_points = 0;        // mu^{-1/2} overflow clip in Gamma_apply
};

// sigma-representation of the post-collision pair.
std::pair<std::array<double, 3>, std::array<double, 3>> post_collision(
    const std::array<double, 3>& v, const std::array<double, 3>& v_star,
    const std::array<double, 3>& sigma);

// Q(g,f)(v) with the gain-loss difference evaluated jointly per node.
// Off-grid values use Maxwellian-relative band-limited summation (see
// docs/conventions.md); inputs are distribution-scale (mu-type) fields.
RField Q_apply(const RField& g, const RField& f, const KernelSpec& kspec,
               const CollisionQuadrature& quad, CollisionDiagnostics* diag = nullptr);

// Trilinear operator T(g,h,omega) with analytic weight omega(v); g,h are
// evaluated off-grid by plain band-limited summation.
using VWeight = std::function<double(const std::array<double, 3>&)>;
RField T_apply(const RField& g, const RField& h, const VWeight& omega, const KernelSpec& kspec,
               const CollisionQuadrature& quad, CollisionDiagnostics* diag = nullptr);
CField T_apply_c(const CField& g, const CField& h, const VWeight& omega, const KernelSpec& kspec,
                 const CollisionQuadrature& quad, CollisionDiagnostics* diag = nullptr);

// Gamma(g,h) = mu^{-1/2} Q(sqrt(mu) g, sqrt(mu) h), computed literally
// through Q_apply; equals T_apply(g,h,sqrt(mu)) at roundoff.
RField Gamma_apply(const RField& g, const RField& h, const KernelSpec& kspec,
                   const CollisionQuadrature& quad, CollisionDiagnostics* diag = nullptr);

// L f = -Gamma(sqrt(mu), f) - Gamma(f, sqrt(mu)).
RField L_apply(const RField& f, const KernelSpec& kspec, const CollisionQuadrature& quad);

struct TripleNormValue {
    double value = 0.0;
    double part1 = 0.0;
    double part2 = 0.0;
};

TripleNormValue triple_norm(const RField& f, const KernelSpec& kspec,
                            const CollisionQuadrature& quad);
TripleNormValue triple_norm_c(const CField& f, const KernelSpec& kspec,
                              const CollisionQuadrature& quad);

// Scalar (Gamma(f,g), h)_{L^2_v} in one quadrature pass (no full apply).
double gamma_inner(const RField& f, const RField& g, const RField& h, const KernelSpec& kspec,
                   const CollisionQuadrature& quad);
cplx gamma_inner_c(const CField& f, const CField& g, const CField& h, const KernelSpec& kspec,
                   const CollisionQuadrature& quad);

// ||f||_{H^s_v} via the (1+|eta|^2)^{s/2} multiplier.
double hs_norm(const RField& f, const VelGrid& g, double s);
double l2v_norm(const RField& f, const VelGrid& g);

// Moment residuals of a collision output: mass, momentum, energy, each
// normalized by the corresponding absolute moment of |Q|.
std::array<double, 3> collision_invariant_residuals(const RField& Q, const VelGrid& g);

}  // namespace kinlab

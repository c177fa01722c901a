#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kinlab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Thrown when an operation's precondition is violated.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Spatial-mode x velocity grid. Conventions in docs/conventions.md.
struct ModeGrid {
    int d_x = 1;   // spatial dimension, 1..3
    int M = 0;     // |m_i| <= M
    int d_v = 1;   // velocity dimension, 1 or 3
    int N_v = 16;  // points per velocity axis, power of two
    double V = 8.0;

    ModeGrid() = default;
    ModeGrid(int dx, int M_, int dv, int Nv, double V_) : d_x(dx), M(M_), d_v(dv), N_v(Nv), V(V_) {
        if (d_x < 1 || d_x > 3) throw ContractError("ModeGrid: d_x must be 1..3");
        if (d_v != 1 && d_v != 3) throw ContractError("ModeGrid: d_v must be 1 or 3");
        if (N_v < 2 || (N_v & (N_v - 1)) != 0) throw ContractError("ModeGrid: N_v must be a power of two");
        if (M < 0 || V <= 0) throw ContractError("ModeGrid: need M >= 0, V > 0");
    }

    double dv() const { return 2.0 * V / N_v; }
    double deta() const { return kPi / V; }
    double eta_max() const { return 0.5 * N_v * deta(); }

    double v_of(int k) const { return -V + k * dv(); }
    double eta_of(int j) const { return (j - N_v / 2) * deta(); }

    int modes_per_axis() const { return 2 * M + 1; }
    std::size_t n_modes() const {
        std::size_t n = 1;
        for (int a = 0; a < d_x; ++a) n *= static_cast<std::size_t>(modes_per_axis());
        return n;
    }
    std::size_t n_vel() const {
        std::size_t n = 1;
        for (int a = 0; a < d_v; ++a) n *= static_cast<std::size_t>(N_v);
        return n;
    }
    std::size_t size() const { return n_modes() * n_vel(); }

    // Lexicographic mode enumeration, -M..M per axis, first axis slowest.
    std::array<int, 3> mode_of(std::size_t flat) const {
        std::array<int, 3> m{0, 0, 0};
        int P = modes_per_axis();
        for (int a = d_x - 1; a >= 0; --a) {
            m[a] = static_cast<int>(flat % P) - M;
            flat /= P;
        }
        return m;
    }
    std::size_t mode_index(const std::array<int, 3>& m) const {
        std::size_t flat = 0;
        for (int a = 0; a < d_x; ++a) flat = flat * modes_per_axis() + static_cast<std::size_t>(m[a] + M);
        return flat;
    }

    // Velocity/frequency tuples of a flat velocity index (last axis fastest).
    std::array<int, 3> vel_indices(std::size_t flat) const {
        std::array<int, 3> k{0, 0, 0};
        for (int a = d_v - 1; a >= 0; --a) {
            k[a] = static_cast<int>(flat % N_v);
            flat /= static_cast<std::size_t>(N_v);
        }
        return k;
    }
    std::array<double, 3> v_point(std::size_t flat) const {
        auto k = vel_indices(flat);
        std::array<double, 3> v{0, 0, 0};
        for (int a = 0; a < d_v; ++a) v[a] = v_of(k[a]);
        return v;
    }
    std::array<double, 3> eta_point(std::size_t flat) const {
        auto k = vel_indices(flat);
        std::array<double, 3> e{0, 0, 0};
        for (int a = 0; a < d_v; ++a) e[a] = eta_of(k[a]);
        return e;
    }

    bool operator==(const ModeGrid&) const = default;
};

enum class Repr { VSpace, EtaSpace };

// The universal state object: complex coefficients over modes x velocity grid.
struct PhaseField {
    ModeGrid grid;
    Repr repr = Repr::VSpace;
    double time_tag = 0.0;
    std::vector<cplx> data;

    PhaseField() = default;
    PhaseField(const ModeGrid& g, Repr r, double t = 0.0) : grid(g), repr(r), time_tag(t), data(g.size()) {}

    cplx* mode_block(std::size_t m) { return data.data() + m * grid.n_vel(); }
    const cplx* mode_block(std::size_t m) const { return data.data() + m * grid.n_vel(); }

    // Squared L^2_{x,v} norm under the documented convention: the velocity
    // measure is dv^{d_v} in VSpace and (deta/2pi)^{d_v} in EtaSpace.
    double l2_sq() const;
    // Plain coefficient sum-of-squares (no measure weights).
    double raw_sq() const;
};

double vel_measure(const ModeGrid& g, Repr repr);

}  // namespace kinlab

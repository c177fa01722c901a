#include "kinlab/multiplier.hpp"

#include <cmath>
#include <sstream>

#include "kinlab/fourier.hpp"
#include "kinlab/kernels.hpp"

namespace kinlab {

PhaseField apply_multiplier(const PhaseField& field, const Symbol& symbol) {
    if (field.repr != Repr::EtaSpace)
        throw ContractError("apply_multiplier: field must be in EtaSpace");
    const ModeGrid& g = field.grid;
    const std::size_t nv = g.n_vel();
    PhaseField out = field;

    std::vector<cplx> tab(nv);
    for (std::size_t m = 0; m < g.n_modes(); ++m) {
        auto mv = g.mode_of(m);
        for (std::size_t j = 0; j < nv; ++j) {
            cplx s = symbol(mv, g.eta_point(j));
            if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
                auto e = g.eta_point(j);
                std::ostringstream msg;
                msg << "apply_multiplier: non-finite symbol at m=(" << mv[0] << "," << mv[1] << ","
                    << mv[2] << "), eta=(" << e[0] << "," << e[1] << "," << e[2] << ")";
                throw ContractError(msg.str());
            }
            tab[j] = s;
        }
        kern::active().cmul_inplace(out.mode_block(m), tab.data(), nv);
    }
    return out;
}

bool shift_guard_ok(const ModeGrid& g, double t) {
    // t*M below half the Nyquist margin (safety factor 0.5).
    return std::abs(t) * g.M < 0.5 * g.eta_max();
}

PhaseField modulate_shift(const PhaseField& field, double t) {
    const ModeGrid& g = field.grid;
    if (!shift_guard_ok(g, t)) {
        std::ostringstream msg;
        msg << "modulate_shift: aliasing guard violated: |t|*M = " << std::abs(t) * g.M
            << " must stay below 0.5*eta_max = " << 0.5 * g.eta_max() << " (t=" << t << ", M=" << g.M
            << ", N_v=" << g.N_v << ", V=" << g.V << ")";
        throw ContractError(msg.str());
    }
    PhaseField vf = (field.repr == Repr::VSpace) ? field : to_v(field);
    const std::size_t nv = g.n_vel();
    std::vector<cplx> tab(nv);
    for (std::size_t m = 0; m < g.n_modes(); ++m) {
        auto mv = g.mode_of(m);
        bool zero_mode = true;
        for (int a = 0; a < g.d_x; ++a) zero_mode = zero_mode && mv[a] == 0;
        if (zero_mode || t == 0.0) continue;
        for (std::size_t k = 0; k < nv; ++k) {
            auto v = vf.grid.v_point(k);
            double mdotv = 0.0;
            // m.v couples the first min(d_x, d_v) axes; with d_x=1 the
            // transport direction is the first velocity axis.
            for (int a = 0; a < std::min(g.d_x, g.d_v); ++a) mdotv += mv[a] * v[a];
            tab[k] = std::polar(1.0, -t * mdotv);
        }
        kern::active().cmul_inplace(vf.mode_block(m), tab.data(), nv);
    }
    return to_eta(vf);
}

}  // namespace kinlab

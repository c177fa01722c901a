#pragma once

#include <functional>

#include "kinlab/grid.hpp"

namespace kinlab {

// symbol(m, eta) evaluated on the (mode, eta-grid) product; non-finite values
// are rejected with the offending location.
using Symbol = std::function<cplx(const std::array<int, 3>& m, const std::array<double, 3>& eta)>;

PhaseField apply_multiplier(const PhaseField& field, const Symbol& symbol);

// Frequency shift Fhat(m, eta) -> Fhat(m, eta + t m), exact for band-limited
// data, realized as the VSpace modulation e^{-i t m.v}. Works from either
// representation; returns EtaSpace.
PhaseField modulate_shift(const PhaseField& field, double t);

// The documented aliasing bound for modulate_shift.
bool shift_guard_ok(const ModeGrid& g, double t);

}  // namespace kinlab

#pragma once

#include "kinlab/grid.hpp"

namespace kinlab {

// Discrete realization of the velocity Fourier transform per spatial mode.
// Forward carries e^{-i eta.v} and the measure dv^{d_v}; the round trip is
// the identity to roundoff. See docs/conventions.md.
PhaseField to_eta(const PhaseField& field);
PhaseField to_v(const PhaseField& field);

}  // namespace kinlab

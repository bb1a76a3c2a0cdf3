#pragma once

// Pinching-antenna placement along a waveguide for a multi-antenna user:
// channel model, two-layer placement (center optimization + sequential
// phase-aligned deployment with minimum-span candidate compression), the
// fixed-phase-shift baseline, brute-force oracles, and the sweep harness.

#include "pas/center.hpp"
#include "pas/channel.hpp"
#include "pas/errors.hpp"
#include "pas/oracle.hpp"
#include "pas/placement.hpp"
#include "pas/scenario.hpp"
#include "pas/schemes.hpp"
#include "pas/sweep.hpp"
#include "pas/waveguide.hpp"

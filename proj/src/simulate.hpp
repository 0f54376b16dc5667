#pragma once

#include "parking/core.hpp"

namespace parking {

// Validates and runs the parking rule for either flavor.
ParkResult simulate_any(const SizeVector& sizes, const PrefSequence& prefs);

}  // namespace parking

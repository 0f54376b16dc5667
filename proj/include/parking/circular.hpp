#pragma once

#include <optional>

#include "parking/core.hpp"

namespace parking {

// Parking rule on M = T + 1 spots arranged in a circle. Never yields PastEnd;
// on success exactly one spot stays empty.
[[nodiscard]] ParkResult simulate_circular(const SizeVector& sizes, const PrefSequence& prefs);

[[nodiscard]] bool is_circular_parking_sequence(const SizeVector& sizes,
                                                const PrefSequence& prefs);

// Adds `offset` to every preference modulo `circle`, representatives in [1, circle].
[[nodiscard]] PrefSequence rotate(const PrefSequence& prefs, std::int64_t offset, Spot circle);

// The unique unoccupied spot of a complete circular layout.
[[nodiscard]] Spot empty_spot(const Layout& layout);

// Circular sequences that park with spot M empty are exactly the linear
// parking sequences; returns the linear reading of such a sequence.
[[nodiscard]] std::optional<PrefSequence> restrict_to_linear(const SizeVector& sizes,
                                                             const PrefSequence& prefs);

}  // namespace parking

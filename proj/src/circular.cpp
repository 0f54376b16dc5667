#include "parking/circular.hpp"

#include "simulate.hpp"

namespace parking {

ParkResult simulate_circular(const SizeVector& sizes, const PrefSequence& prefs) {
    if (prefs.flavor != Flavor::circular) throw ContractError("expected circular preferences");
    return simulate_any(sizes, prefs);
}

bool is_circular_parking_sequence(const SizeVector& sizes, const PrefSequence& prefs) {
    return parked(simulate_circular(sizes, prefs));
}

PrefSequence rotate(const PrefSequence& prefs, std::int64_t offset, Spot circle) {
    if (circle < 1) throw ContractError("circle must have at least one spot");
    PrefSequence out{prefs.prefs, Flavor::circular};
    for (Spot& c : out.prefs) c = wrap(static_cast<std::int64_t>(c) + offset, circle);
    return out;
}

Spot empty_spot(const Layout& layout) {
    if (layout.flavor() != Flavor::circular) throw ContractError("expected a circular layout");
    const auto occ = layout.occupancy();
    Spot empty = 0;
    for (Spot s = 1; s <= layout.lot_size(); ++s) {
        if (occ[s] != 0) continue;
        if (empty != 0) throw ContractError("layout is incomplete: more than one empty spot");
        empty = s;
    }
    if (empty == 0) throw ContractError("layout has no empty spot");
    return empty;
}

std::optional<PrefSequence> restrict_to_linear(const SizeVector& sizes,
                                               const PrefSequence& prefs) {
    const ParkResult result = simulate_circular(sizes, prefs);
    const auto* ok = std::get_if<Parked>(&result);
    if (ok == nullptr || empty_spot(ok->layout) != sizes.circle()) return std::nullopt;
    PrefSequence linear{prefs.prefs, Flavor::linear};
    validate(sizes, linear);
    return linear;
}

}  // namespace parking

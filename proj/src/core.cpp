#include "parking/core.hpp"
#include "simulate.hpp"

#include <algorithm>

namespace parking {

const char* to_string(Flavor flavor) noexcept {
    return flavor == Flavor::linear ? "linear" : "circular";
}

SizeVector::SizeVector(std::vector<Spot> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw ContractError("at least one car is required");
    for (Spot y : sizes_) {
        if (y < 1) throw ContractError("car sizes must be positive integers");
        total_ += y;
    }
}

void validate(const SizeVector& sizes, const PrefSequence& prefs) {
    if (prefs.prefs.size() != sizes.n()) {
        throw ContractError("expected " + std::to_string(sizes.n()) + " preferences, got " +
                            std::to_string(prefs.prefs.size()));
    }
    const Spot hi = sizes.lot_size(prefs.flavor);
    for (Spot c : prefs.prefs) {
        if (c < 1 || c > hi) {
            throw ContractError("preference " + std::to_string(c) + " outside [1, " +
                                std::to_string(hi) + "]");
        }
    }
}

Layout::Layout(Flavor flavor, Spot lot_size, std::vector<Block> blocks)
    : flavor_(flavor), lot_size_(lot_size), blocks_(std::move(blocks)) {
    std::vector<bool> taken(lot_size_ + 1, false);
    for (const Block& b : blocks_) {
        if (b.start < 1 || b.start > lot_size_ || b.length < 1 || b.length > lot_size_) {
            throw ContractError("layout block outside the lot");
        }
        if (flavor_ == Flavor::linear && b.start + b.length - 1 > lot_size_) {
            throw ContractError("layout block runs past the end of the lot");
        }
        for (Spot k = 0; k < b.length; ++k) {
            const Spot s = wrap(static_cast<std::int64_t>(b.start + k), lot_size_);
            if (taken[s]) throw ContractError("layout blocks overlap");
            taken[s] = true;
        }
    }
}

Spot Layout::end(CarIndex car) const {
    const Block& b = blocks_.at(car - 1);
    return wrap(static_cast<std::int64_t>(b.start + b.length - 1), lot_size_);
}

std::vector<CarIndex> Layout::occupancy() const {
    std::vector<CarIndex> occ(lot_size_ + 1, 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (Spot k = 0; k < blocks_[i].length; ++k) {
            occ[wrap(static_cast<std::int64_t>(blocks_[i].start + k), lot_size_)] = i + 1;
        }
    }
    return occ;
}

RawOutcome park_raw(std::span<const Spot> sizes, std::span<const Spot> prefs, Flavor flavor,
                    Spot lot_size, std::span<std::uint32_t> occupancy, std::span<Spot> starts) {
    std::fill(occupancy.begin(), occupancy.end(), 0u);
    const bool circular = flavor == Flavor::circular;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const CarIndex car = i + 1;
        const Spot y = sizes[i];
        Spot j = prefs[i];
        // First empty spot at or after the preference.
        if (circular) {
            Spot steps = 0;
            while (occupancy[j] != 0) {
                j = j == lot_size ? 1 : j + 1;
                if (++steps >= lot_size) {
                    throw std::logic_error("circular scan found no empty spot");
                }
            }
        } else {
            while (j <= lot_size && occupancy[j] != 0) ++j;
            if (j > lot_size || j + y - 1 > lot_size) return {Outcome::past_end, car, 0, 0};
        }
        Spot s = j;
        for (Spot k = 1; k < y; ++k) {
            s = (circular && s == lot_size) ? 1 : s + 1;
            if (occupancy[s] != 0) return {Outcome::collision, car, j, s};
        }
        s = j;
        for (Spot k = 0; k < y; ++k) {
            occupancy[s] = static_cast<std::uint32_t>(car);
            s = (circular && s == lot_size) ? 1 : s + 1;
        }
        if (!starts.empty()) starts[i] = j;
    }
    return {};
}

namespace {

ParkResult simulate(const SizeVector& sizes, const PrefSequence& prefs) {
    validate(sizes, prefs);
    const Spot lot = sizes.lot_size(prefs.flavor);
    std::vector<std::uint32_t> occupancy(lot + 1);
    std::vector<Spot> starts(sizes.n());
    const RawOutcome raw =
        park_raw(sizes.values(), prefs.prefs, prefs.flavor, lot, occupancy, starts);
    switch (raw.outcome) {
        case Outcome::collision:
            return Collision{raw.car, raw.first_empty, raw.blocked};
        case Outcome::past_end:
            return PastEnd{raw.car};
        case Outcome::parked:
            break;
    }
    std::vector<Block> blocks(sizes.n());
    for (std::size_t i = 0; i < sizes.n(); ++i) blocks[i] = {starts[i], sizes[i]};
    return Parked{Layout(prefs.flavor, lot, std::move(blocks))};
}

}  // namespace

ParkResult simulate_linear(const SizeVector& sizes, const PrefSequence& prefs) {
    if (prefs.flavor != Flavor::linear) throw ContractError("expected linear preferences");
    return simulate(sizes, prefs);
}

bool is_parking_sequence(const SizeVector& sizes, const PrefSequence& prefs) {
    return parked(simulate_linear(sizes, prefs));
}

bool is_classical_parking_function(std::span<const Spot> prefs) {
    std::vector<Spot> sorted(prefs.begin(), prefs.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] > i + 1) return false;
    }
    return true;
}

ParkResult simulate_any(const SizeVector& sizes, const PrefSequence& prefs) {
    return simulate(sizes, prefs);
}

}  // namespace parking

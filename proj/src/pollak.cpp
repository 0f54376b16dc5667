#include "parking/pollak.hpp"

#include <stdexcept>

#include "parking/circular.hpp"

namespace parking {

CellRing::CellRing(std::size_t cars)
    : cells_(cars + 1, open), cell_of_(cars + 1, 0), open_(cars) {
    if (cars < 1) throw ContractError("at least one car is required");
    cells_[0] = 1;
}

std::size_t CellRing::fill(std::size_t cell, CarIndex car) {
    if (car < 2 || car >= cell_of_.size() || cell_of_[car] != 0) {
        throw ContractError("car " + std::to_string(car) + " cannot be placed");
    }
    cells_[cell] = car;
    cell_of_[car] = cell;
    --open_;
    return cell;
}

std::size_t CellRing::place_direct(CarIndex car, std::size_t interval) {
    if (interval < 1 || interval > open_) {
        throw ContractError("interval " + std::to_string(interval) + " outside [1, " +
                            std::to_string(open_) + "]");
    }
    std::size_t seen = 0;
    for (std::size_t cell = 1; cell < cells_.size(); ++cell) {
        if (cells_[cell] == open && ++seen == interval) return fill(cell, car);
    }
    throw std::logic_error("open cell count out of sync");
}

std::size_t CellRing::place_cruise(CarIndex car, CarIndex onto) {
    if (onto < 1 || onto >= car || onto >= cell_of_.size()) {
        throw ContractError("car " + std::to_string(car) + " cannot cruise on car " +
                            std::to_string(onto));
    }
    if (open_ == 0) throw ContractError("no open cell left");
    const std::size_t ring = cells_.size();
    std::size_t cell = cell_of_[onto];
    do {
        cell = (cell + 1) % ring;
    } while (cells_[cell] != open);
    return fill(cell, car);
}

Decoded decode(const SizeVector& sizes, const OptionSequence& opts) {
    const std::size_t n = sizes.n();
    const Spot circle = sizes.circle();
    if (opts.anchor < 1 || opts.anchor > circle) {
        throw ContractError("anchor " + std::to_string(opts.anchor) + " outside [1, " +
                            std::to_string(circle) + "]");
    }
    if (opts.options.size() != n - 1) {
        throw ContractError("expected " + std::to_string(n - 1) + " options, got " +
                            std::to_string(opts.options.size()));
    }

    CellRing ring(n);
    for (CarIndex car = 2; car <= n; ++car) {
        const CarOption& opt = opts.options[car - 2];
        if (const auto* d = std::get_if<Direct>(&opt)) {
            ring.place_direct(car, d->interval);
        } else {
            const auto& c = std::get<Cruise>(opt);
            if (c.car < 1 || c.car >= car || c.offset < 1 || c.offset > sizes.size_of(c.car)) {
                throw ContractError("cruise target out of range for car " + std::to_string(car));
            }
            ring.place_cruise(car, c.car);
        }
    }

    // Collapse dividers: cars pack clockwise from the anchor, the open cell
    // takes one spot.
    std::vector<Block> blocks(n);
    auto spot = static_cast<std::int64_t>(opts.anchor);
    for (CarIndex car : ring.cells()) {
        if (car == CellRing::open) {
            ++spot;
            continue;
        }
        blocks[car - 1] = {wrap(spot, circle), sizes.size_of(car)};
        spot += static_cast<std::int64_t>(sizes.size_of(car));
    }

    PrefSequence prefs{std::vector<Spot>(n), Flavor::circular};
    prefs.prefs[0] = opts.anchor;
    for (CarIndex car = 2; car <= n; ++car) {
        const CarOption& opt = opts.options[car - 2];
        if (const auto* c = std::get_if<Cruise>(&opt)) {
            prefs.prefs[car - 1] =
                wrap(static_cast<std::int64_t>(blocks[c->car - 1].start + c->offset - 1), circle);
        } else {
            prefs.prefs[car - 1] = blocks[car - 1].start;
        }
    }
    return {std::move(prefs), Layout(Flavor::circular, circle, std::move(blocks))};
}

std::uint64_t option_radix(const SizeVector& sizes, CarIndex car) {
    if (car < 2 || car > sizes.n()) throw ContractError("option radix needs 2 <= car <= n");
    std::uint64_t prefix = 0;
    for (CarIndex j = 1; j < car; ++j) prefix += sizes.size_of(j);
    return prefix + (sizes.n() + 2 - car);
}

CarOption option_from_index(const SizeVector& sizes, CarIndex car, std::uint64_t index) {
    if (index >= option_radix(sizes, car)) {
        throw ContractError("option index " + std::to_string(index) + " out of range");
    }
    for (CarIndex j = 1; j < car; ++j) {
        const Spot y = sizes.size_of(j);
        if (index < y) return Cruise{j, index + 1};
        index -= y;
    }
    return Direct{static_cast<std::size_t>(index) + 1};
}

void for_each_option_sequence(const SizeVector& sizes,
                              const std::function<void(const OptionSequence&)>& visit) {
    const std::size_t n = sizes.n();
    std::vector<std::uint64_t> radix(n + 1, 0);
    for (CarIndex car = 2; car <= n; ++car) radix[car] = option_radix(sizes, car);

    OptionSequence seq;
    seq.options.resize(n - 1);
    std::vector<std::uint64_t> digit(n + 1, 0);
    for (Spot anchor = 1; anchor <= sizes.circle(); ++anchor) {
        seq.anchor = anchor;
        std::fill(digit.begin(), digit.end(), 0);
        for (CarIndex car = 2; car <= n; ++car) seq.options[car - 2] = option_from_index(sizes, car, 0);
        while (true) {
            visit(seq);
            CarIndex car = n;
            while (car >= 2 && ++digit[car] == radix[car]) {
                digit[car] = 0;
                seq.options[car - 2] = option_from_index(sizes, car, 0);
                --car;
            }
            if (car < 2) break;
            seq.options[car - 2] = option_from_index(sizes, car, digit[car]);
        }
    }
}

std::vector<OptionSequence> enumerate_option_sequences(const SizeVector& sizes) {
    std::vector<OptionSequence> out;
    for_each_option_sequence(sizes, [&](const OptionSequence& s) { out.push_back(s); });
    return out;
}

namespace {

Decoded sample_decoded(const SizeVector& sizes, Rng& rng) {
    OptionSequence opts;
    opts.anchor = std::uniform_int_distribution<Spot>(1, sizes.circle())(rng);
    for (CarIndex car = 2; car <= sizes.n(); ++car) {
        std::uniform_int_distribution<std::uint64_t> pick(0, option_radix(sizes, car) - 1);
        opts.options.push_back(option_from_index(sizes, car, pick(rng)));
    }
    return decode(sizes, opts);
}

}  // namespace

PrefSequence sample_circular(const SizeVector& sizes, Rng& rng) {
    return sample_decoded(sizes, rng).prefs;
}

PrefSequence sample_linear(const SizeVector& sizes, Rng& rng) {
    const Decoded circular = sample_decoded(sizes, rng);
    const Spot empty = empty_spot(circular.layout);
    const Spot circle = sizes.circle();
    auto linear = restrict_to_linear(
        sizes, rotate(circular.prefs, static_cast<std::int64_t>(circle - empty), circle));
    if (!linear) throw std::logic_error("rotated sample does not leave spot M empty");
    return *linear;
}

}  // namespace parking

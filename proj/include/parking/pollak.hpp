#pragma once

#include <functional>
#include <random>
#include <variant>
#include <vector>

#include "parking/core.hpp"

namespace parking {

// Divider construction on the circle of M = T + 1 spots.
//
// The first car picks any of the M spots. The remaining n spots' markings are
// erased and the circle is cut into n + 1 cells, one holding C1. Each later
// car either picks an open cell directly or "cruises": it prefers a spot
// inside an already parked car and lands in the first open cell clockwise
// after that car. Only once every car has a cell do coordinates exist: cars
// pack clockwise from C1's anchor and the one cell nobody chose becomes the
// single empty spot.

// Pick the `interval`-th open cell (1-based), counting clockwise from the cell
// after C1's.
struct Direct {
    std::size_t interval = 0;
    friend bool operator==(const Direct&, const Direct&) = default;
};

// Prefer spot `offset` (1-based, <= y_car) of an earlier car `car`.
struct Cruise {
    CarIndex car = 0;
    Spot offset = 0;
    friend bool operator==(const Cruise&, const Cruise&) = default;
};

using CarOption = std::variant<Direct, Cruise>;

struct OptionSequence {
    Spot anchor = 0;                  // C1's spot in [1, M]
    std::vector<CarOption> options;   // cars 2..n
    friend bool operator==(const OptionSequence&, const OptionSequence&) = default;
};

// The n + 1 cells of the construction. Cells are filled, never emptied.
class CellRing {
public:
    static constexpr CarIndex open = 0;

    explicit CellRing(std::size_t cars);

    [[nodiscard]] std::size_t size() const noexcept { return cells_.size(); }
    [[nodiscard]] std::size_t open_cells() const noexcept { return open_; }
    // Car in each cell in clockwise order from C1's cell (0 = open).
    [[nodiscard]] const std::vector<CarIndex>& cells() const noexcept { return cells_; }

    // Both return the index of the cell that received `car`.
    std::size_t place_direct(CarIndex car, std::size_t interval);
    std::size_t place_cruise(CarIndex car, CarIndex onto);

private:
    std::size_t fill(std::size_t cell, CarIndex car);

    std::vector<CarIndex> cells_;
    std::vector<std::size_t> cell_of_;  // indexed by car
    std::size_t open_;
};

struct Decoded {
    PrefSequence prefs;
    Layout layout;
};

// Preferences and final layout produced by an option sequence. The returned
// preferences park, under the circular rule, into exactly the returned layout.
[[nodiscard]] Decoded decode(const SizeVector& sizes, const OptionSequence& opts);

// Number of choices for car `car` >= 2, as a machine integer.
[[nodiscard]] std::uint64_t option_radix(const SizeVector& sizes, CarIndex car);

// Bijection [0, option_radix) -> options of car `car`: cruise targets first,
// ordered by (earlier car, offset), then direct picks 1..n+2-car.
[[nodiscard]] CarOption option_from_index(const SizeVector& sizes, CarIndex car,
                                          std::uint64_t index);

// Visits every valid option sequence once, anchors outermost, later cars
// varying fastest.
void for_each_option_sequence(const SizeVector& sizes,
                              const std::function<void(const OptionSequence&)>& visit);

[[nodiscard]] std::vector<OptionSequence> enumerate_option_sequences(const SizeVector& sizes);

using Rng = std::mt19937_64;

// Uniform over circular parking sequences.
[[nodiscard]] PrefSequence sample_circular(const SizeVector& sizes, Rng& rng);

// Uniform over linear parking sequences: rotates a uniform circular sample so
// its empty spot lands on M.
[[nodiscard]] PrefSequence sample_linear(const SizeVector& sizes, Rng& rng);

}  // namespace parking

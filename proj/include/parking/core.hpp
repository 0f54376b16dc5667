#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace parking {

// Spots are 1-based. Car indices reported in results are 1-based (C1..Cn).
using Spot = std::uint64_t;
using CarIndex = std::size_t;

// Raised when an input violates an operation's preconditions. Distinct from a
// failed parking attempt, which is an ordinary ParkResult.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Flavor { linear, circular };

[[nodiscard]] const char* to_string(Flavor flavor) noexcept;

// Car lengths y_1..y_n. Always non-empty with every length >= 1.
class SizeVector {
public:
    explicit SizeVector(std::vector<Spot> sizes);

    [[nodiscard]] std::size_t n() const noexcept { return sizes_.size(); }
    [[nodiscard]] Spot operator[](std::size_t i) const { return sizes_[i]; }
    // y_i for a 1-based car index.
    [[nodiscard]] Spot size_of(CarIndex car) const { return sizes_.at(car - 1); }
    [[nodiscard]] std::span<const Spot> values() const noexcept { return sizes_; }

    // Number of spots in the linear lot.
    [[nodiscard]] Spot total() const noexcept { return total_; }
    // Number of spots on the circle, one more than the linear lot.
    [[nodiscard]] Spot circle() const noexcept { return total_ + 1; }
    [[nodiscard]] Spot lot_size(Flavor flavor) const noexcept {
        return flavor == Flavor::linear ? total() : circle();
    }

    friend bool operator==(const SizeVector&, const SizeVector&) = default;

private:
    std::vector<Spot> sizes_;
    Spot total_ = 0;
};

struct PrefSequence {
    std::vector<Spot> prefs;
    Flavor flavor = Flavor::linear;

    friend bool operator==(const PrefSequence&, const PrefSequence&) = default;
    friend auto operator<=>(const PrefSequence&, const PrefSequence&) = default;
};

// Throws ContractError unless prefs has one entry per car and every entry lies
// in [1, T] (linear) or [1, M] (circular).
void validate(const SizeVector& sizes, const PrefSequence& prefs);

struct Block {
    Spot start = 0;
    Spot length = 0;

    friend bool operator==(const Block&, const Block&) = default;
};

// Final placement of cars. blocks[i] belongs to car i+1; on a circular lot a
// block may wrap from spot M back to spot 1.
class Layout {
public:
    Layout(Flavor flavor, Spot lot_size, std::vector<Block> blocks);

    [[nodiscard]] Flavor flavor() const noexcept { return flavor_; }
    [[nodiscard]] Spot lot_size() const noexcept { return lot_size_; }
    [[nodiscard]] std::size_t cars() const noexcept { return blocks_.size(); }
    [[nodiscard]] const std::vector<Block>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] Spot start(CarIndex car) const { return blocks_.at(car - 1).start; }
    // Last spot of the car's block, wrapped into [1, lot_size].
    [[nodiscard]] Spot end(CarIndex car) const;
    // Car occupying each spot (index 0 unused, 0 = empty).
    [[nodiscard]] std::vector<CarIndex> occupancy() const;

    friend bool operator==(const Layout&, const Layout&) = default;

private:
    Flavor flavor_;
    Spot lot_size_;
    std::vector<Block> blocks_;
};

struct Parked {
    Layout layout;
    friend bool operator==(const Parked&, const Parked&) = default;
};

// Car `car` found its first empty spot at `first_empty`, but `blocked` (the
// first occupied spot inside its block) was taken.
struct Collision {
    CarIndex car = 0;
    Spot first_empty = 0;
    Spot blocked = 0;
    friend bool operator==(const Collision&, const Collision&) = default;
};

// Linear lots only: no empty spot at or after the preference, or the block
// would run past spot T.
struct PastEnd {
    CarIndex car = 0;
    friend bool operator==(const PastEnd&, const PastEnd&) = default;
};

using ParkResult = std::variant<Parked, Collision, PastEnd>;

[[nodiscard]] inline bool parked(const ParkResult& r) noexcept {
    return std::holds_alternative<Parked>(r);
}

[[nodiscard]] ParkResult simulate_linear(const SizeVector& sizes, const PrefSequence& prefs);
[[nodiscard]] bool is_parking_sequence(const SizeVector& sizes, const PrefSequence& prefs);

// Definition of a classical parking function: sorted b satisfies b_i <= i.
[[nodiscard]] bool is_classical_parking_function(std::span<const Spot> prefs);

enum class Outcome : std::uint8_t { parked, collision, past_end };

// Allocation-free parking engine shared by the simulators and the enumeration
// kernels. `occupancy` must hold lot_size + 1 entries; it is cleared on entry.
// When `starts` is non-empty it receives each parked car's start spot.
// No range validation is performed; callers own the input contract.
struct RawOutcome {
    Outcome outcome = Outcome::parked;
    CarIndex car = 0;
    Spot first_empty = 0;
    Spot blocked = 0;
};

[[nodiscard]] RawOutcome park_raw(std::span<const Spot> sizes, std::span<const Spot> prefs,
                                  Flavor flavor, Spot lot_size,
                                  std::span<std::uint32_t> occupancy,
                                  std::span<Spot> starts = {});

// Maps any integer onto the representative in [1, modulus].
[[nodiscard]] constexpr Spot wrap(std::int64_t x, Spot modulus) noexcept {
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = x % m;
    if (r <= 0) r += m;
    return static_cast<Spot>(r);
}

}  // namespace parking

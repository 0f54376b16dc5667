#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "parking/core.hpp"
#include "parking/count.hpp"

namespace parking {

inline constexpr std::uint64_t default_budget = 100'000'000;

// Refusal to enumerate a tuple space larger than the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::vector<Spot> sizes, CountValue required, std::uint64_t budget);

    [[nodiscard]] const std::vector<Spot>& sizes() const noexcept { return sizes_; }
    [[nodiscard]] const CountValue& required() const noexcept { return required_; }
    [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

private:
    std::vector<Spot> sizes_;
    CountValue required_;
    std::uint64_t budget_;
};

struct OracleOptions {
    std::uint64_t budget = default_budget;
    // Number of contiguous lexicographic blocks; 0 picks one per thread.
    std::size_t partitions = 0;
};

// Outcome counts over a block of preference tuples.
struct Tally {
    std::uint64_t parked = 0;
    std::uint64_t collisions = 0;
    std::uint64_t past_end = 0;

    Tally& operator+=(const Tally& o) noexcept {
        parked += o.parked;
        collisions += o.collisions;
        past_end += o.past_end;
        return *this;
    }
    [[nodiscard]] std::uint64_t total() const noexcept { return parked + collisions + past_end; }
    friend bool operator==(const Tally&, const Tally&) = default;
};

struct EnumerationReport {
    SizeVector sizes;
    Flavor flavor;
    CountValue total_tuples;
    CountValue parked;
    CountValue collisions;
    CountValue past_end;
    CountValue formula_value;
    bool match = false;

    friend bool operator==(const EnumerationReport&, const EnumerationReport&) = default;
};

// T^n (linear) or M^n (circular).
[[nodiscard]] CountValue tuple_space(const SizeVector& sizes, Flavor flavor);

// Throws BudgetExceeded when the tuple space is larger than `budget`.
void check_budget(const SizeVector& sizes, Flavor flavor, std::uint64_t budget);

// Serial kernel: tallies the tuples with lexicographic rank in [first, last).
// Rank 0 is (1, ..., 1); the last coordinate varies fastest.
[[nodiscard]] Tally tally_range(const SizeVector& sizes, Flavor flavor, std::uint64_t first,
                                std::uint64_t last);

// Rank boundaries of `partitions` contiguous blocks aligned to fixed prefixes
// of the first one or two coordinates. Returns partitions + 1 boundaries.
[[nodiscard]] std::vector<std::uint64_t> partition_bounds(const SizeVector& sizes, Flavor flavor,
                                                          std::size_t partitions);

// Reference implementation: one sequential pass over the whole space.
[[nodiscard]] EnumerationReport verify_serial(const SizeVector& sizes, Flavor flavor,
                                              std::uint64_t budget = default_budget);

// OpenMP implementation over partition_bounds blocks. Identical result to
// verify_serial for any partition count.
[[nodiscard]] EnumerationReport verify(const SizeVector& sizes, Flavor flavor,
                                       const OracleOptions& options = {});

// Every composition with 1..max_cars parts and total 1..max_total, ordered by
// total, then part count, then lexicographically.
[[nodiscard]] std::vector<SizeVector> compositions(std::size_t max_cars, Spot max_total);

[[nodiscard]] std::vector<EnumerationReport> verify_sweep(std::size_t max_cars, Spot max_total,
                                                          Flavor flavor,
                                                          const OracleOptions& options = {});

// Visits the parking tuples in lexicographic order.
void for_each_parking_sequence(const SizeVector& sizes, Flavor flavor, std::uint64_t budget,
                               const std::function<void(const PrefSequence&)>& visit);

[[nodiscard]] std::vector<PrefSequence> enumerate_parking_sequences(
    const SizeVector& sizes, Flavor flavor, std::uint64_t budget = default_budget);

// Exhaustive check of the divider construction against brute force.
struct BijectionReport {
    explicit BijectionReport(SizeVector s) : sizes(std::move(s)) {}

    SizeVector sizes;
    std::uint64_t option_sequences = 0;
    std::uint64_t distinct_decodes = 0;
    bool decode_valid = false;           // every decode parks into its own layout
    std::uint64_t circular_parking = 0;  // brute force
    CountValue circular_formula;
    bool image_is_circular_set = false;
    std::uint64_t linear_parking = 0;    // brute force
    bool restriction_matches = false;    // empty spot M <=> linear parking sequence
    bool rotation_closed = false;
    bool empty_spot_equivariant = false;
    std::vector<PrefSequence> restricted;  // linear sequences recovered from the circle

    [[nodiscard]] bool injective() const noexcept { return distinct_decodes == option_sequences; }
    [[nodiscard]] bool cardinality_matches() const {
        return circular_formula == option_sequences && circular_formula == circular_parking;
    }
    [[nodiscard]] bool all_pass() const {
        return decode_valid && injective() && cardinality_matches() && image_is_circular_set &&
               restriction_matches && rotation_closed && empty_spot_equivariant;
    }
};

[[nodiscard]] BijectionReport check_bijection(const SizeVector& sizes,
                                              std::uint64_t budget = default_budget);

}  // namespace parking

#include "parking/oracle.hpp"

#include <algorithm>

#include <omp.h>

#include "parking/circular.hpp"
#include "parking/pollak.hpp"

namespace parking {

namespace {

std::string join(const std::vector<Spot>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

// Odometer over [1, lot]^n in lexicographic order.
class TupleCursor {
public:
    TupleCursor(std::size_t n, Spot lot, std::uint64_t rank) : digits_(n), lot_(lot) {
        for (std::size_t i = n; i-- > 0;) {
            digits_[i] = 1 + rank % lot;
            rank /= lot;
        }
    }

    [[nodiscard]] std::span<const Spot> digits() const noexcept { return digits_; }

    void advance() noexcept {
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (digits_[i] < lot_) {
                ++digits_[i];
                return;
            }
            digits_[i] = 1;
        }
    }

private:
    std::vector<Spot> digits_;
    Spot lot_;
};

void count_outcome(Tally& t, Outcome o) noexcept {
    switch (o) {
        case Outcome::parked: ++t.parked; break;
        case Outcome::collision: ++t.collisions; break;
        case Outcome::past_end: ++t.past_end; break;
    }
}

std::uint64_t space_u64(const SizeVector& sizes, Flavor flavor) {
    return tuple_space(sizes, flavor).convert_to<std::uint64_t>();
}

EnumerationReport make_report(const SizeVector& sizes, Flavor flavor, const Tally& t) {
    EnumerationReport r{sizes,
                        flavor,
                        tuple_space(sizes, flavor),
                        CountValue(t.parked),
                        CountValue(t.collisions),
                        CountValue(t.past_end),
                        flavor == Flavor::linear ? count_linear(sizes) : count_circular(sizes),
                        false};
    r.match = r.parked == r.formula_value;
    return r;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::vector<Spot> sizes, CountValue required, std::uint64_t budget)
    : std::runtime_error("budget exceeded for sizes " + join(sizes) + ": " + required.str() +
                         " tuples required, budget " + std::to_string(budget)),
      sizes_(std::move(sizes)),
      required_(std::move(required)),
      budget_(budget) {}

CountValue tuple_space(const SizeVector& sizes, Flavor flavor) {
    return boost::multiprecision::pow(CountValue(sizes.lot_size(flavor)),
                                      static_cast<unsigned>(sizes.n()));
}

void check_budget(const SizeVector& sizes, Flavor flavor, std::uint64_t budget) {
    CountValue required = tuple_space(sizes, flavor);
    if (required > budget) {
        const auto v = sizes.values();
        throw BudgetExceeded({v.begin(), v.end()}, std::move(required), budget);
    }
}

Tally tally_range(const SizeVector& sizes, Flavor flavor, std::uint64_t first,
                  std::uint64_t last) {
    Tally t;
    if (first >= last) return t;
    const Spot lot = sizes.lot_size(flavor);
    std::vector<std::uint32_t> occupancy(lot + 1);
    TupleCursor cursor(sizes.n(), lot, first);
    for (std::uint64_t rank = first; rank < last; ++rank) {
        count_outcome(t, park_raw(sizes.values(), cursor.digits(), flavor, lot, occupancy).outcome);
        cursor.advance();
    }
    return t;
}

std::vector<std::uint64_t> partition_bounds(const SizeVector& sizes, Flavor flavor,
                                            std::size_t partitions) {
    if (partitions < 1) throw ContractError("need at least one partition");
    const std::uint64_t total = space_u64(sizes, flavor);
    const Spot lot = sizes.lot_size(flavor);
    const std::size_t prefix = std::min<std::size_t>(2, sizes.n());
    std::uint64_t units = 1;
    for (std::size_t i = 0; i < prefix; ++i) units *= lot;
    const std::uint64_t unit_size = total / units;

    std::vector<std::uint64_t> bounds(partitions + 1);
    for (std::size_t p = 0; p <= partitions; ++p) {
        bounds[p] = (units * p / partitions) * unit_size;
    }
    return bounds;
}

EnumerationReport verify_serial(const SizeVector& sizes, Flavor flavor, std::uint64_t budget) {
    check_budget(sizes, flavor, budget);
    const Spot lot = sizes.lot_size(flavor);
    const std::uint64_t total = space_u64(sizes, flavor);
    std::vector<std::uint32_t> occupancy(lot + 1);
    std::vector<Spot> prefs(sizes.n(), 1);
    Tally t;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        count_outcome(t, park_raw(sizes.values(), prefs, flavor, lot, occupancy).outcome);
        for (std::size_t i = prefs.size(); i-- > 0;) {
            if (prefs[i] < lot) {
                ++prefs[i];
                break;
            }
            prefs[i] = 1;
        }
    }
    return make_report(sizes, flavor, t);
}

EnumerationReport verify(const SizeVector& sizes, Flavor flavor, const OracleOptions& options) {
    check_budget(sizes, flavor, options.budget);
    const std::size_t partitions =
        options.partitions != 0 ? options.partitions
                                : static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
    const auto bounds = partition_bounds(sizes, flavor, partitions);
    std::vector<Tally> tallies(partitions);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t p = 0; p < partitions; ++p) {
        tallies[p] = tally_range(sizes, flavor, bounds[p], bounds[p + 1]);
    }

    Tally merged;
    for (const Tally& t : tallies) merged += t;
    return make_report(sizes, flavor, merged);
}

std::vector<SizeVector> compositions(std::size_t max_cars, Spot max_total) {
    std::vector<SizeVector> out;
    std::vector<Spot> parts;
    // Lexicographic compositions of `remaining` into `left` further parts.
    std::function<void(Spot, std::size_t)> extend = [&](Spot remaining, std::size_t left) {
        if (left == 1) {
            parts.push_back(remaining);
            out.emplace_back(parts);
            parts.pop_back();
            return;
        }
        for (Spot first = 1; first + (left - 1) <= remaining; ++first) {
            parts.push_back(first);
            extend(remaining - first, left - 1);
            parts.pop_back();
        }
    };
    for (Spot total = 1; total <= max_total; ++total) {
        for (std::size_t n = 1; n <= max_cars && n <= total; ++n) extend(total, n);
    }
    return out;
}

std::vector<EnumerationReport> verify_sweep(std::size_t max_cars, Spot max_total, Flavor flavor,
                                            const OracleOptions& options) {
    const auto all = compositions(max_cars, max_total);
    for (const SizeVector& sizes : all) check_budget(sizes, flavor, options.budget);
    std::vector<EnumerationReport> reports;
    reports.reserve(all.size());
    for (const SizeVector& sizes : all) reports.push_back(verify(sizes, flavor, options));
    return reports;
}

void for_each_parking_sequence(const SizeVector& sizes, Flavor flavor, std::uint64_t budget,
                               const std::function<void(const PrefSequence&)>& visit) {
    check_budget(sizes, flavor, budget);
    const Spot lot = sizes.lot_size(flavor);
    const std::uint64_t total = space_u64(sizes, flavor);
    std::vector<std::uint32_t> occupancy(lot + 1);
    TupleCursor cursor(sizes.n(), lot, 0);
    PrefSequence current{std::vector<Spot>(sizes.n()), flavor};
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        const auto digits = cursor.digits();
        if (park_raw(sizes.values(), digits, flavor, lot, occupancy).outcome == Outcome::parked) {
            std::copy(digits.begin(), digits.end(), current.prefs.begin());
            visit(current);
        }
        cursor.advance();
    }
}

std::vector<PrefSequence> enumerate_parking_sequences(const SizeVector& sizes, Flavor flavor,
                                                      std::uint64_t budget) {
    std::vector<PrefSequence> out;
    for_each_parking_sequence(sizes, flavor, budget,
                              [&](const PrefSequence& p) { out.push_back(p); });
    return out;
}

BijectionReport check_bijection(const SizeVector& sizes, std::uint64_t budget) {
    check_budget(sizes, Flavor::circular, budget);
    const CountValue formula = count_circular(sizes);
    if (formula > budget) {
        const auto v = sizes.values();
        throw BudgetExceeded({v.begin(), v.end()}, formula, budget);
    }
    const Spot circle = sizes.circle();

    BijectionReport r(sizes);
    r.circular_formula = formula;

    const auto circular_set = enumerate_parking_sequences(sizes, Flavor::circular, budget);
    const auto linear_set = enumerate_parking_sequences(sizes, Flavor::linear, budget);
    r.circular_parking = circular_set.size();
    r.linear_parking = linear_set.size();

    // Decode every option sequence.
    std::vector<PrefSequence> image;
    r.decode_valid = true;
    for_each_option_sequence(sizes, [&](const OptionSequence& opts) {
        ++r.option_sequences;
        Decoded d = decode(sizes, opts);
        const ParkResult replay = simulate_circular(sizes, d.prefs);
        const auto* ok = std::get_if<Parked>(&replay);
        if (ok == nullptr || !(ok->layout == d.layout)) r.decode_valid = false;
        image.push_back(std::move(d.prefs));
    });
    std::sort(image.begin(), image.end());
    r.distinct_decodes = static_cast<std::uint64_t>(
        std::unique(image.begin(), image.end()) - image.begin());
    image.erase(image.begin() + static_cast<std::ptrdiff_t>(r.distinct_decodes), image.end());
    r.image_is_circular_set = image == circular_set;

    // Restriction to spot M empty.
    for (const PrefSequence& p : circular_set) {
        if (auto linear = restrict_to_linear(sizes, p)) r.restricted.push_back(std::move(*linear));
    }
    r.restriction_matches = r.restricted == linear_set;

    // Rotations.
    r.rotation_closed = true;
    r.empty_spot_equivariant = true;
    for (const PrefSequence& p : circular_set) {
        const Spot e = empty_spot(std::get<Parked>(simulate_circular(sizes, p)).layout);
        for (Spot a = 1; a < circle; ++a) {
            const PrefSequence q = rotate(p, static_cast<std::int64_t>(a), circle);
            if (!std::binary_search(circular_set.begin(), circular_set.end(), q)) {
                r.rotation_closed = false;
                continue;
            }
            const Spot eq = empty_spot(std::get<Parked>(simulate_circular(sizes, q)).layout);
            if (eq != wrap(static_cast<std::int64_t>(e + a), circle)) {
                r.empty_spot_equivariant = false;
            }
        }
    }
    return r;
}

}  // namespace parking

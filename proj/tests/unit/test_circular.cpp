#include <doctest.h>

#include <algorithm>

#include "naive.hpp"
#include "parking/circular.hpp"

using namespace parking;

namespace {

PrefSequence circ(std::vector<Spot> p) { return {std::move(p), Flavor::circular}; }

}  // namespace

TEST_CASE("circular collision wraps around to spot 1") {
    CHECK(simulate_circular(SizeVector({2, 2}), circ({1, 5})) == ParkResult{Collision{2, 5, 1}});
}

TEST_CASE("circular park leaves exactly one spot") {
    const auto r = simulate_circular(SizeVector({2, 2}), circ({1, 4}));
    REQUIRE(parked(r));
    const Layout& layout = std::get<Parked>(r).layout;
    CHECK(layout.blocks() == std::vector<Block>{{1, 2}, {4, 2}});
    CHECK(empty_spot(layout) == 3);

    const auto cruise = simulate_circular(SizeVector({2, 2}), circ({1, 1}));
    CHECK(empty_spot(std::get<Parked>(cruise).layout) == 5);
}

TEST_CASE("a lone car always parks at its preference on the circle") {
    for (Spot y = 1; y <= 4; ++y) {
        const SizeVector sizes({y});
        for (Spot k = 1; k <= sizes.circle(); ++k) {
            const auto r = simulate_circular(sizes, circ({k}));
            REQUIRE(parked(r));
            const Layout& layout = std::get<Parked>(r).layout;
            CHECK(layout.start(1) == k);
            CHECK(empty_spot(layout) == wrap(static_cast<std::int64_t>(k + y), sizes.circle()));
        }
        CHECK(empty_spot(std::get<Parked>(simulate_circular(sizes, circ({1}))).layout) ==
              sizes.circle());
    }
}

TEST_CASE("blocks may wrap past spot M") {
    const auto r = simulate_circular(SizeVector({3, 1}), circ({4, 1}));
    REQUIRE(parked(r));
    const Layout& layout = std::get<Parked>(r).layout;
    CHECK(layout.start(1) == 4);
    CHECK(layout.end(1) == 1);
    CHECK(layout.start(2) == 2);
    CHECK(empty_spot(layout) == 3);
}

TEST_CASE("rotate") {
    CHECK(rotate(circ({1, 4}), 0, 5) == circ({1, 4}));
    CHECK(rotate(circ({1, 4}), 2, 5) == circ({3, 1}));
    CHECK(rotate(circ({1, 4}), -1, 5) == circ({5, 3}));
    for (Spot a = 0; a < 5; ++a) {
        const auto p = circ({2, 5});
        CHECK(rotate(rotate(p, static_cast<std::int64_t>(a), 5), static_cast<std::int64_t>(5 - a), 5) == p);
    }
}

TEST_CASE("empty_spot contract") {
    CHECK_THROWS_AS((void)empty_spot(Layout(Flavor::circular, 5, {{1, 2}})), ContractError);
    CHECK_THROWS_AS((void)empty_spot(Layout(Flavor::linear, 4, {{1, 2}, {3, 2}})), ContractError);
}

TEST_CASE("restrict_to_linear") {
    const SizeVector y({2, 2});
    const auto ok = restrict_to_linear(y, circ({1, 3}));
    REQUIRE(ok.has_value());
    CHECK(*ok == PrefSequence{{1, 3}, Flavor::linear});
    CHECK_FALSE(restrict_to_linear(y, circ({1, 4})).has_value());
    CHECK_FALSE(restrict_to_linear(y, circ({1, 5})).has_value());
}

TEST_CASE("circular simulator agrees with the naive oracle") {
    for (const std::vector<Spot>& sizes : {std::vector<Spot>{2, 2}, {2, 2, 1}, {1, 3, 1}, {3, 2}}) {
        const SizeVector y(sizes);
        for (const auto& t : naive::tuples(sizes.size(), y.circle())) {
            const auto expected = naive::park(sizes, t, true);
            const auto r = simulate_circular(y, circ(t));
            CHECK_FALSE(std::holds_alternative<PastEnd>(r));
            CHECK(parked(r) == (expected.result == naive::Result::parked));
            if (parked(r)) {
                const auto& b = std::get<Parked>(r).layout.blocks();
                for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i].start == expected.starts[i]);
            }
        }
    }
}

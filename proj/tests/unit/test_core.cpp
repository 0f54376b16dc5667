#include <doctest.h>

#include "naive.hpp"
#include "parking/core.hpp"

using namespace parking;

namespace {

PrefSequence lin(std::vector<Spot> p) { return {std::move(p), Flavor::linear}; }

}  // namespace

TEST_CASE("SizeVector derives lot and circle size") {
    const SizeVector y({2, 5, 1, 3, 2});
    CHECK(y.n() == 5);
    CHECK(y.total() == 13);
    CHECK(y.circle() == 14);
    CHECK_THROWS_AS(SizeVector({}), ContractError);
    CHECK_THROWS_AS(SizeVector({2, 0}), ContractError);
}

TEST_CASE("three cars of sizes 2,2,1 park as in the worked figure") {
    const auto r = simulate_linear(SizeVector({2, 2, 1}), lin({2, 3, 1}));
    REQUIRE(parked(r));
    const Layout& layout = std::get<Parked>(r).layout;
    CHECK(layout.blocks() == std::vector<Block>{{2, 2}, {4, 2}, {1, 1}});
    CHECK(layout.end(1) == 3);
    CHECK(layout.end(2) == 5);
}

TEST_CASE("second car collides with the first") {
    const auto r = simulate_linear(SizeVector({2, 2, 2}), lin({3, 2, 1}));
    CHECK(r == ParkResult{Collision{2, 2, 3}});
}

TEST_CASE("third car passes the end of the lot") {
    const auto r = simulate_linear(SizeVector({2, 2, 2}), lin({2, 5, 5}));
    CHECK(r == ParkResult{PastEnd{3}});
}

TEST_CASE("order matters once cars are longer than one spot") {
    const SizeVector y({2, 2});
    CHECK(is_parking_sequence(y, lin({1, 2})));
    CHECK_FALSE(is_parking_sequence(y, lin({2, 1})));
    CHECK(simulate_linear(y, lin({2, 1})) == ParkResult{Collision{2, 1, 2}});
}

TEST_CASE("a lone car parks only at spot 1") {
    for (Spot y = 1; y <= 6; ++y) {
        const SizeVector sizes({y});
        const auto r = simulate_linear(sizes, lin({1}));
        REQUIRE(parked(r));
        CHECK(std::get<Parked>(r).layout.blocks() == std::vector<Block>{{1, y}});
        for (Spot c = 2; c <= y; ++c) CHECK(simulate_linear(sizes, lin({c})) == ParkResult{PastEnd{1}});
    }
}

TEST_CASE("unit cars all preferring spot 1 park") {
    CHECK(is_parking_sequence(SizeVector({1, 1, 1}), lin({1, 1, 1})));
}

TEST_CASE("block overrunning the lot is past-end, not a collision") {
    // Spot 3 is the first empty one but a car of size 2 would need spot 4 too.
    CHECK(simulate_linear(SizeVector({1, 2}), lin({2, 3})) == ParkResult{PastEnd{2}});
    CHECK(simulate_linear(SizeVector({1, 2}), lin({2, 1})) == ParkResult{Collision{2, 1, 2}});
}

TEST_CASE("input contract violations are errors, not parking failures") {
    const SizeVector y({2, 2});
    CHECK_THROWS_AS((void)simulate_linear(y, lin({1})), ContractError);
    CHECK_THROWS_AS((void)simulate_linear(y, lin({1, 5})), ContractError);
    CHECK_THROWS_AS((void)simulate_linear(y, lin({0, 1})), ContractError);
    CHECK_THROWS_AS((void)simulate_linear(y, PrefSequence{{1, 1}, Flavor::circular}), ContractError);
}

TEST_CASE("classical parking function criterion") {
    CHECK(is_classical_parking_function(std::vector<Spot>{3, 1, 1}));
    CHECK_FALSE(is_classical_parking_function(std::vector<Spot>{2, 2, 2}));
    CHECK(is_classical_parking_function(std::vector<Spot>{1, 2, 3, 4, 5}));
    CHECK(is_classical_parking_function(std::vector<Spot>{}));
    CHECK_FALSE(is_classical_parking_function(std::vector<Spot>{1, 3, 3}));
}

TEST_CASE("simulate_linear agrees with the naive oracle on small instances") {
    for (const std::vector<Spot>& sizes :
         {std::vector<Spot>{2, 2, 1}, {1, 3}, {3, 1, 2}, {1, 1, 2, 1}}) {
        const SizeVector y(sizes);
        for (const auto& t : naive::tuples(sizes.size(), y.total())) {
            const auto expected = naive::park(sizes, t, false);
            const auto r = simulate_linear(y, lin(t));
            switch (expected.result) {
                case naive::Result::parked: {
                    REQUIRE(parked(r));
                    const auto& b = std::get<Parked>(r).layout.blocks();
                    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i].start == expected.starts[i]);
                    break;
                }
                case naive::Result::collision: CHECK(std::holds_alternative<Collision>(r)); break;
                case naive::Result::past_end: CHECK(std::holds_alternative<PastEnd>(r)); break;
            }
        }
    }
}

TEST_CASE("Layout rejects overlapping or out-of-lot blocks") {
    CHECK_THROWS_AS(Layout(Flavor::linear, 4, {{1, 2}, {2, 2}}), ContractError);
    CHECK_THROWS_AS(Layout(Flavor::linear, 4, {{4, 2}}), ContractError);
    CHECK_NOTHROW(Layout(Flavor::circular, 5, {{4, 2}, {1, 2}}));
}

TEST_CASE("wrap maps onto [1, modulus]") {
    CHECK(wrap(5, 5) == 5);
    CHECK(wrap(6, 5) == 1);
    CHECK(wrap(0, 5) == 5);
    CHECK(wrap(-1, 5) == 4);
    CHECK(wrap(-10, 5) == 5);
}

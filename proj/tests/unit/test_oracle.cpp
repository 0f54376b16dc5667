#include <doctest.h>

#include "naive.hpp"
#include "parking/oracle.hpp"

using namespace parking;

namespace {

void check_report(const EnumerationReport& r, std::uint64_t total, std::uint64_t parked,
                  std::uint64_t collisions, std::uint64_t past_end, bool match = true) {
    CHECK(r.total_tuples == total);
    CHECK(r.parked == parked);
    CHECK(r.collisions == collisions);
    CHECK(r.past_end == past_end);
    CHECK(r.match == match);
    CHECK(r.parked + r.collisions + r.past_end == r.total_tuples);
}

}  // namespace

TEST_CASE("enumerate_parking_sequences") {
    const auto two = enumerate_parking_sequences(SizeVector({2, 2}), Flavor::linear);
    std::vector<std::vector<Spot>> got;
    for (const auto& p : two) got.push_back(p.prefs);
    CHECK(got == std::vector<std::vector<Spot>>{{1, 1}, {1, 2}, {1, 3}, {3, 1}});

    CHECK(enumerate_parking_sequences(SizeVector({2, 2, 1}), Flavor::linear).size() == 30);
    const auto lone = enumerate_parking_sequences(SizeVector({4}), Flavor::linear);
    REQUIRE(lone.size() == 1);
    CHECK(lone[0].prefs == std::vector<Spot>{1});

    const auto circ = enumerate_parking_sequences(SizeVector({3, 1, 2}), Flavor::circular);
    const auto brute = naive::parking_set({3, 1, 2}, true);
    REQUIRE(circ.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(circ[i].prefs == brute[i]);
}

TEST_CASE("verify: frozen tallies from the naive oracle") {
    check_report(verify(SizeVector({2, 2}), Flavor::circular), 25, 20, 5, 0);
    check_report(verify(SizeVector({2, 2, 2}), Flavor::linear), 216, 30, 48, 138);
    check_report(verify(SizeVector({1, 1, 1}), Flavor::linear), 27, 16, 0, 11);
    check_report(verify(SizeVector({2, 2, 1}), Flavor::linear), 125, 30, 15, 80);
    check_report(verify(SizeVector({2, 2, 1}), Flavor::circular), 216, 180, 36, 0);
    check_report(verify(SizeVector({3, 1, 2}), Flavor::linear), 216, 36, 26, 154);
}

TEST_CASE("serial reference and partitioned kernel agree") {
    for (const std::vector<Spot>& sizes : {std::vector<Spot>{2, 2, 2}, {3, 1, 2}, {5}, {1, 2, 1, 2}}) {
        const SizeVector y(sizes);
        for (Flavor f : {Flavor::linear, Flavor::circular}) {
            const auto reference = verify_serial(y, f);
            for (std::size_t parts : {1u, 2u, 3u, 8u, 100u}) {
                CHECK(verify(y, f, {default_budget, parts}) == reference);
            }
        }
    }
}

TEST_CASE("partition bounds are prefix aligned and cover the space") {
    const SizeVector y({2, 2, 1});  // 5^3 tuples, prefix units of 5
    const auto b = partition_bounds(y, Flavor::linear, 4);
    REQUIRE(b.size() == 5);
    CHECK(b.front() == 0);
    CHECK(b.back() == 125);
    for (std::size_t i = 1; i < b.size(); ++i) {
        CHECK(b[i] >= b[i - 1]);
        CHECK(b[i] % 5 == 0);
    }
    Tally sum;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) sum += tally_range(y, Flavor::linear, b[i], b[i + 1]);
    CHECK(sum == Tally{30, 15, 80});
    CHECK_THROWS_AS((void)partition_bounds(y, Flavor::linear, 0), ContractError);
}

TEST_CASE("budget refusal is loud") {
    const SizeVector big(std::vector<Spot>(8, 5));
    try {
        (void)verify(big, Flavor::linear);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.required() == boost::multiprecision::pow(CountValue(40), 8));
        CHECK(e.budget() == default_budget);
        CHECK(e.sizes() == std::vector<Spot>(8, 5));
    }
    CHECK_THROWS_AS((void)verify(SizeVector({2, 2}), Flavor::linear, {15, 1}), BudgetExceeded);
    CHECK_NOTHROW((void)verify(SizeVector({2, 2}), Flavor::linear, {16, 1}));
    CHECK_THROWS_AS((void)verify_sweep(3, 6, Flavor::linear, {100, 1}), BudgetExceeded);
}

TEST_CASE("compositions are ordered by total, part count, then lexicographically") {
    std::vector<std::vector<Spot>> got;
    for (const auto& s : compositions(2, 4)) got.emplace_back(s.values().begin(), s.values().end());
    CHECK(got == std::vector<std::vector<Spot>>{
                     {1}, {2}, {1, 1}, {3}, {1, 2}, {2, 1}, {4}, {1, 3}, {2, 2}, {3, 1}});
    // 2^(T-1) compositions of T with no part-count limit.
    CHECK(compositions(6, 6).size() == 1 + 2 + 4 + 8 + 16 + 32);
}

TEST_CASE("verify_sweep") {
    const auto linear = verify_sweep(3, 6, Flavor::linear);
    for (const auto& r : linear) CHECK(r.match);

    const auto lone = verify_sweep(1, 5, Flavor::linear);
    REQUIRE(lone.size() == 5);
    for (const auto& r : lone) CHECK(r.parked == 1);

    for (const auto& r : verify_sweep(2, 4, Flavor::circular)) {
        CHECK(r.match);
        CHECK(r.past_end == 0);
    }
}

TEST_CASE("check_bijection on small instances") {
    const auto r = check_bijection(SizeVector({2, 2}));
    CHECK(r.option_sequences == 20);
    CHECK(r.distinct_decodes == 20);
    CHECK(r.circular_parking == 20);
    CHECK(r.linear_parking == 4);
    CHECK(r.all_pass());
    std::vector<std::vector<Spot>> restricted;
    for (const auto& p : r.restricted) restricted.push_back(p.prefs);
    CHECK(restricted == std::vector<std::vector<Spot>>{{1, 1}, {1, 2}, {1, 3}, {3, 1}});

    CHECK(check_bijection(SizeVector({2, 2, 1})).all_pass());
    const auto lone = check_bijection(SizeVector({3}));
    CHECK(lone.option_sequences == 4);
    CHECK(lone.all_pass());
    CHECK_THROWS_AS((void)check_bijection(SizeVector({2, 2}), 10), BudgetExceeded);
}

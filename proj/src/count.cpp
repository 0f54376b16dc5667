#include "parking/count.hpp"

namespace parking {

CountValue option_count(const SizeVector& sizes, CarIndex car) {
    const std::size_t n = sizes.n();
    if (car < 1 || car > n) {
        throw ContractError("car index " + std::to_string(car) + " outside [1, " +
                            std::to_string(n) + "]");
    }
    if (car == 1) return CountValue(sizes.circle());
    CountValue prefix = 0;
    for (CarIndex j = 1; j < car; ++j) prefix += sizes.size_of(j);
    return prefix + (n + 2 - car);
}

CountValue count_linear(const SizeVector& sizes) {
    CountValue product = 1;
    for (CarIndex car = 2; car <= sizes.n(); ++car) product *= option_count(sizes, car);
    return product;
}

CountValue count_circular(const SizeVector& sizes) {
    return CountValue(sizes.circle()) * count_linear(sizes);
}

CountValue count_classical(std::size_t n) {
    if (n < 1) throw ContractError("n must be at least 1");
    return boost::multiprecision::pow(CountValue(n + 1), static_cast<unsigned>(n - 1));
}

std::string to_decimal(const CountValue& v) { return v.str(); }

}  // namespace parking

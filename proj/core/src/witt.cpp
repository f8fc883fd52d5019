#include "carnot/witt.hpp"

#include <stdexcept>
#include <vector>

namespace carnot {

namespace {

std::vector<Integer> witt_table(int d, int max_i) {
    std::vector<Integer> l(static_cast<size_t>(max_i) + 1);
    Integer power(1);  // d^i, kept incrementally
    for (int i = 1; i <= max_i; ++i) {
        power *= d;
        Integer rhs = power;
        for (int j = 1; j < i; ++j)
            if (i % j == 0) rhs -= Integer(j) * l[static_cast<size_t>(j)];
        if (rhs % i != 0) throw std::logic_error("witt_dimension: divisor sum not divisible");
        l[static_cast<size_t>(i)] = rhs / i;
    }
    return l;
}

}  // namespace

Integer witt_dimension(int d, int i) {
    if (d < 1 || i < 1) throw std::invalid_argument("witt_dimension: need d >= 1, i >= 1");
    return witt_table(d, i)[static_cast<size_t>(i)];
}

Integer cumulative_dimension(int d, int r) {
    if (d < 1 || r < 1) throw std::invalid_argument("cumulative_dimension: need d >= 1, r >= 1");
    const auto l = witt_table(d, r);
    Integer acc(0);
    for (int i = 1; i <= r; ++i) acc += l[static_cast<size_t>(i)];
    return acc;
}

}  // namespace carnot

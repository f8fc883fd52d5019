#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "carnot/rational_matrix.hpp"

using namespace carnot;

namespace {

QMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.at(0).size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

// Naive rank oracle: count pivots of plain rational elimination.
int rank_oracle(QMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        for (int i = rank + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col) / m.at(rank, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("rank of hand-picked matrices") {
    CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
    CHECK(from_rows({{1, 0}, {0, 1}}).rank() == 2);
    CHECK(from_rows({{Rational(1, 3), Rational(1, 6)}, {Rational(2), Rational(1)}}).rank() == 1);
    CHECK(from_rows({{0, 0, 0}}).rank() == 0);
}

TEST_CASE("fraction-free rank agrees with a naive elimination oracle") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> shape(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        QMatrix m(shape(rng), shape(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(entry(rng), den(rng));
        CHECK(m.rank() == rank_oracle(m));
    }
}

TEST_CASE("solve finds the exact solution or reports inconsistency") {
    const QMatrix a = from_rows({{2, 1}, {1, 3}});
    const auto x = a.solve({Rational(5), Rational(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(1));
    CHECK((*x)[1] == Rational(3));

    const QMatrix singular = from_rows({{1, 1}, {2, 2}});
    CHECK(!singular.solve({Rational(1), Rational(3)}).has_value());
    // Consistent under-determined system: free variable pinned to zero.
    const auto y = singular.solve({Rational(1), Rational(2)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == Rational(1));
    CHECK((*y)[1] == Rational(0));
}

TEST_CASE("solve validates randomly generated systems") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
        QMatrix a(4, 3);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) a.at(i, j) = Rational(entry(rng));
        std::vector<Rational> x0{Rational(entry(rng)), Rational(entry(rng)), Rational(entry(rng))};
        std::vector<Rational> b(4, Rational(0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) b[static_cast<size_t>(i)] += a.at(i, j) * x0[static_cast<size_t>(j)];
        const auto x = a.solve(b);
        REQUIRE(x.has_value());
        // A x must reproduce b exactly (x may differ from x0 when singular).
        for (int i = 0; i < 4; ++i) {
            Rational acc(0);
            for (int j = 0; j < 3; ++j) acc += a.at(i, j) * (*x)[static_cast<size_t>(j)];
            CHECK(acc == b[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("determinant") {
    CHECK(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).determinant() == Rational(1));
    CHECK(from_rows({{0, 1}, {1, 0}}).determinant() == Rational(-1));
    CHECK(from_rows({{Rational(1, 2), 0}, {7, Rational(2, 3)}}).determinant() == Rational(1, 3));
    CHECK(from_rows({{1, 2}, {2, 4}}).determinant() == Rational(0));
}

TEST_CASE("sparse echelon tracks independence") {
    SparseEchelon<int> span;
    using Vec = std::map<int, Rational>;
    CHECK(span.insert(Vec{{1, Rational(2)}, {3, Rational(1)}}));
    CHECK(span.insert(Vec{{2, Rational(1)}}));
    CHECK(!span.insert(Vec{{1, Rational(4)}, {3, Rational(2)}}));          // multiple of row 1
    CHECK(!span.insert(Vec{{1, Rational(2)}, {2, Rational(5)}, {3, Rational(1)}}));
    CHECK(span.insert(Vec{{3, Rational(1)}}));
    CHECK(span.rank() == 3);
    CHECK(span.contains(Vec{{1, Rational(1)}}));
}

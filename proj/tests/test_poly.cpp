#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/json_io.hpp"
#include "carnot/polynomial.hpp"
#include "test_support.hpp"

using namespace carnot;
using namespace carnot::testsupport;

namespace {

Polynomial x(int n, int j) { return Polynomial::variable(n, j); }

}  // namespace

TEST_CASE("rationals reduce and keep a positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(-5, 1).to_string() == "-5");
    CHECK(Rational(7, 3).to_string() == "7/3");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational parsing round-trips") {
    for (const char* s : {"0", "1", "-1", "22/7", "-3/8", "123456789123456789123/2"})
        CHECK(Rational::parse(s).to_string() == s);
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("foo"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("monomial order is graded lex") {
    const Monomial one(3);
    const Monomial x1 = Monomial::variable(3, 1);
    const Monomial x3 = Monomial::variable(3, 3);
    const Monomial x1x1 = x1.times(x1);
    CHECK(one < x1);
    CHECK(x3 < x1);          // same degree, lex on exponent vectors: (0,0,1) < (1,0,0)
    CHECK(x1 < x1x1);        // degree decides first
    CHECK(x3 < x1.times(x3));
    CHECK(x1x1.to_string() == "x1^2");
}

TEST_CASE("addition: inverse, like terms, and a nontrivial cancellation") {
    const int n = 8;
    // (x1) + (-x1) = 0
    CHECK((x(n, 1) + x(n, 1).scaled(Rational(-1))).is_zero());
    // (x1^2/2) + (x1^2/2) = x1^2
    const Polynomial half_sq = (x(n, 1) * x(n, 1)).scaled(Rational(1, 2));
    CHECK(half_sq + half_sq == x(n, 1) * x(n, 1));
    // (-x1 x2 x3 - x1^2 x2^2 / 8) + (x1 x2 x3) = -x1^2 x2^2 / 8
    const Polynomial x1x2x3 = x(n, 1) * x(n, 2) * x(n, 3);
    const Polynomial mixed = (x(n, 1) * x(n, 1) * x(n, 2) * x(n, 2)).scaled(Rational(-1, 8));
    CHECK((-x1x2x3 + mixed) + x1x2x3 == mixed);
}

TEST_CASE("multiplication is exact") {
    const int n = 8;
    CHECK(x(n, 1) * (x(n, 2) * x(n, 2)) ==
          Polynomial::term(n, Monomial::variable(n, 1).times(Monomial::variable(n, 2)).shifted(2, 1),
                           Rational(1)));
    CHECK((x(n, 1) * x(n, 1)).scaled(Rational(1, 2)) * x(n, 2) ==
          (x(n, 1) * x(n, 1) * x(n, 2)).scaled(Rational(1, 2)));
    // (-x1) * (-x1) / 2 = x1^2/2
    const Polynomial neg = x(n, 1).scaled(Rational(-1));
    CHECK((neg * neg).scaled(Rational(1, 2)) == (x(n, 1) * x(n, 1)).scaled(Rational(1, 2)));
    CHECK_THROWS_AS(x(2, 1) * x(3, 1), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    const int n = 8;
    // d(x1^3/6)/dx1 = x1^2/2
    const Polynomial cubed = (x(n, 1) * x(n, 1) * x(n, 1)).scaled(Rational(1, 6));
    CHECK(cubed.partial(1) == (x(n, 1) * x(n, 1)).scaled(Rational(1, 2)));
    CHECK(x(n, 2).partial(1).is_zero());
    CHECK_THROWS_AS(x(n, 1).partial(0), std::out_of_range);
    CHECK_THROWS_AS(x(n, 1).partial(9), std::out_of_range);
}

TEST_CASE("partial matches a term-wise power-rule oracle") {
    // Oracle: differentiate (coef, exponents) tuples directly.
    const int n = 8;
    const Polynomial p = (x(n, 1) * x(n, 1) * x(n, 2) * x(n, 2)).scaled(Rational(1, 8));
    const int j = 2;
    Polynomial expect(n);
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(j);
        if (e > 0) expect.add_term(m.shifted(j, -1), c * Rational(e));
    }
    CHECK(p.partial(j) == expect);
    CHECK(p.partial(2) == (x(n, 1) * x(n, 1) * x(n, 2)).scaled(Rational(1, 4)));

    std::mt19937 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        const Polynomial q = random_poly(rng, 4, 5, 6);
        for (int v = 1; v <= 4; ++v) {
            Polynomial oracle(4);
            for (const auto& [m, c] : q.terms()) {
                const int e = m.exponent(v);
                if (e > 0) oracle.add_term(m.shifted(v, -1), c * Rational(e));
            }
            CHECK(q.partial(v) == oracle);
        }
    }
}

TEST_CASE("divisibility degree") {
    const int n = 8;
    CHECK(x(n, 1).scaled(Rational(-1)).divisibility_degree(1) == 1);
    CHECK((x(n, 2) * x(n, 2)).divisibility_degree(1) == 0);
    CHECK((x(n, 1) * x(n, 2) * x(n, 2)).scaled(Rational(1, 2)).divisibility_degree(2) == 2);
    CHECK_THROWS_AS(Polynomial(n).divisibility_degree(1), std::invalid_argument);
}

TEST_CASE("divisibility degree shifts under multiplication by x_j") {
    std::mt19937 rng(11);
    int done = 0;
    while (done < 50) {
        const Polynomial p = random_poly(rng, 4, 4, 5);
        if (p.is_zero()) continue;
        ++done;
        for (int j = 1; j <= 4; ++j) {
            const int before = p.divisibility_degree(j);
            CHECK((p * x(4, j)).divisibility_degree(j) == before + 1);
        }
    }
}

TEST_CASE("weighted degree") {
    const WeightVector w({1, 1, 2, 3, 3, 4, 4, 4});
    const int n = 8;
    CHECK(*(x(n, 1) * x(n, 2) * x(n, 2)).weighted_degree(w) == 3);
    CHECK(*(x(n, 1) * x(n, 1) + x(n, 2) * x(n, 2)).weighted_degree(w) == 2);
    // x7 + x1^4/24 is homogeneous of weight 4
    const Polynomial p = x(n, 7) + (x(n, 1) * x(n, 1) * x(n, 1) * x(n, 1)).scaled(Rational(1, 24));
    CHECK(*p.weighted_degree(w) == 4);
    CHECK(!(x(n, 1) + x(n, 3)).weighted_degree(w).has_value());
    CHECK_THROWS_AS(Polynomial(n).weighted_degree(w), std::invalid_argument);
}

TEST_CASE("ring axioms hold on random polynomials") {
    std::mt19937 rng(202);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial a = random_poly(rng, 3, 3, 4);
        const Polynomial b = random_poly(rng, 3, 3, 4);
        const Polynomial c = random_poly(rng, 3, 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("Leibniz rule for partial derivatives") {
    std::mt19937 rng(303);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial p = random_poly(rng, 3, 3, 4);
        const Polynomial q = random_poly(rng, 3, 3, 4);
        for (int j = 1; j <= 3; ++j)
            CHECK((p * q).partial(j) == p.partial(j) * q + p * q.partial(j));
    }
}

TEST_CASE("exact evaluation at rational points") {
    const int n = 3;
    const Polynomial p = (x(n, 1) * x(n, 1)).scaled(Rational(1, 2)) + x(n, 3).scaled(Rational(-2));
    CHECK(p.evaluate({Rational(3), Rational(0), Rational(1, 4)}) == Rational(4));
    CHECK_THROWS_AS(p.evaluate({Rational(1)}), std::invalid_argument);
}

TEST_CASE("JSON serialization round-trips the canonical form") {
    std::mt19937 rng(404);
    for (int iter = 0; iter < 100; ++iter) {
        const Polynomial p = random_poly(rng, 5, 4, 6);
        const std::string s = to_json(p);
        CHECK(polynomial_from_json(s) == p);
        CHECK(to_json(polynomial_from_json(s)) == s);
    }
}

TEST_CASE("zero polynomial invariants") {
    const Polynomial z(4);
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
    CHECK(to_json(z) == R"({"n":4,"terms":[]})");
    // adding a cancelling pair leaves no stored term
    Polynomial p = x(4, 2);
    p += x(4, 2).scaled(Rational(-1));
    CHECK(p.term_count() == 0);
}

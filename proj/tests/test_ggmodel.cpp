#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/gg_model.hpp"
#include "carnot/sym258.hpp"
#include "carnot/witt.hpp"
#include "test_support.hpp"

using namespace carnot;
using namespace carnot::testsupport;

TEST_CASE("seed and first descent monomials") {
    const auto table = gg_monomials(4);
    CHECK(table.monomial(2) == Polynomial::constant(8, Rational(1)));
    CHECK(table.monomial(3) == Polynomial::variable(8, 1).scaled(Rational(-1)));
    // P_{2,8} = x1 x2^2 / 2
    const Polynomial x1 = Polynomial::variable(8, 1);
    const Polynomial x2 = Polynomial::variable(8, 2);
    CHECK(table.monomial(8) == (x1 * x2 * x2).scaled(Rational(1, 2)));
    CHECK(table.descent(3) == std::pair<int, int>{2, 1});
    CHECK(table.descent(8) == std::pair<int, int>{5, 2});
}

TEST_CASE("every coefficient is a single monomial") {
    for (int r : {2, 4, 6}) {
        const auto table = gg_monomials(r);
        for (int k = 2; k <= table.dimension(); ++k)
            CHECK(table.monomial(k).term_count() == 1);
    }
}

TEST_CASE("every bracket element descends from the second generator") {
    const auto table = gg_monomials(5);
    int descendants = 0;
    for (int k = 1; k <= table.dimension(); ++k)
        if (table.descends_from_2(k)) ++descendants;
    CHECK(descendants == 13);  // H2 itself plus the 12 bracket elements
    CHECK(!table.descends_from_2(1));
}

TEST_CASE("generator fields at step 4 match the reference listing") {
    const auto [h1, h2] = gg_generators(4);
    const auto ref = ref_gg4_fields();
    CHECK(h1 == ref[0]);
    CHECK(h2 == ref[1]);
}

TEST_CASE("step 1 generators are bare coordinate fields") {
    const auto [h1, h2] = gg_generators(1);
    CHECK(h1 == VectorField::coordinate(2, 1));
    CHECK(h2 == VectorField::coordinate(2, 2));
    CHECK(lie_bracket(h1, h2).is_zero());
}

TEST_CASE("step 5 second generator touches one component per descendant") {
    const auto [h1, h2] = gg_generators(5);
    REQUIRE(h2.dimension() == 14);
    const auto table = gg_monomials(5);
    int expected = 0;  // d/dx2 itself plus strict descendants
    for (int k = 2; k <= table.dimension(); ++k)
        if (table.descends_from_2(k)) ++expected;
    int nonzero = 0;
    for (int k = 1; k <= 14; ++k)
        if (!h2.component(k).is_zero()) ++nonzero;
    CHECK(nonzero == expected);
    CHECK(nonzero == 13);
}

TEST_CASE("monomials are weight-homogeneous of degree one less than their layer") {
    for (int r : {3, 4, 5, 6}) {
        const auto table = gg_monomials(r);
        const WeightVector w = table.basis().weights();
        for (int k = 3; k <= table.dimension(); ++k) {
            const auto deg = table.monomial(k).weighted_degree(w);
            REQUIRE(deg.has_value());
            CHECK(*deg == table.basis().degree_of(k) - 1);
        }
    }
}

TEST_CASE("nonzero monomial count per degree matches the dimension table") {
    const int r = 6;
    const auto table = gg_monomials(r);
    for (int degree = 2; degree <= r; ++degree) {
        int count = 0;
        for (int k : table.basis().slice(degree))
            if (!table.monomial(k).is_zero()) ++count;
        CHECK(Integer(count) == witt_dimension(2, degree));
    }
}

TEST_CASE("step 4 frame reproduces the reference fields exactly") {
    const Frame frame = gg_frame(4);
    const auto ref = ref_gg4_fields();
    REQUIRE(frame.size() == 8);
    for (int i = 1; i <= 8; ++i) CHECK(frame.field(i) == ref[static_cast<size_t>(i - 1)]);
}

TEST_CASE("step 4 frame satisfies exactly the Hall-descent table") {
    const Frame frame = gg_frame(4);
    const CarnotAlgebra alg = structure_constants_from_frame(frame, HallBasis(2, 4).layers());
    CHECK(alg == table_gg4());
    CHECK(verify_carnot_axioms(alg).overall());
}

TEST_CASE("step 2 frame brackets as expected") {
    const Frame frame = gg_frame(2);
    REQUIRE(frame.size() == 3);
    CHECK(frame.field(1) == VectorField::coordinate(3, 1));
    VectorField h2(3);
    h2.set_component(2, Polynomial::constant(3, Rational(1)));
    h2.set_component(3, Polynomial::variable(3, 1).scaled(Rational(-1)));
    CHECK(frame.field(2) == h2);
    CHECK(frame.field(3) == VectorField::coordinate(3, 3));
    CHECK(lie_bracket(frame.field(2), frame.field(1)) == frame.field(3));
}

TEST_CASE("the model theorem verifies for steps 1 through 6") {
    const long dims[] = {2, 3, 5, 8, 14, 23};
    for (int r = 1; r <= 6; ++r) {
        const Frame frame = gg_frame(r);
        CHECK(Integer(static_cast<long>(frame.size())) == cumulative_dimension(2, r));
        CHECK(frame.size() == dims[r - 1]);
        const auto report = verify_free_nilpotent(frame, r);
        CHECK(report.overall());
    }
}

TEST_CASE("the verifier notices a broken frame") {
    Frame frame = gg_frame(3);
    // x1^3 in a layer-3 slot breaks homogeneity, and repeated brackets with
    // d/dx1 keep a nonzero d/dx5 component alive at degree 4.
    VectorField& h2 = frame.field_mutable(2);
    Polynomial p = h2.component(5);
    p.add_term(Monomial::variable(5, 1).shifted(1, 2), Rational(1));
    h2.set_component(5, p);
    const auto report = verify_free_nilpotent(frame, 3);
    CHECK(!report.overall());
    bool homogeneity_failed = false, vanishing_failed = false;
    for (const auto& c : report.checks()) {
        if (c.name == "H2 homogeneous of weight one" && !c.pass) homogeneity_failed = true;
        if (c.name == "all brackets of degree 4 vanish" && !c.pass) vanishing_failed = true;
    }
    CHECK(homogeneity_failed);
    CHECK(vanishing_failed);
}

TEST_CASE("invalid steps are rejected") {
    CHECK_THROWS_AS(gg_monomials(0), std::invalid_argument);
    CHECK_THROWS_AS(gg_generators(-1), std::invalid_argument);
}

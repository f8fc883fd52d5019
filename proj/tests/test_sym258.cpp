#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/ansatz.hpp"
#include "carnot/gg_model.hpp"
#include "carnot/sym258.hpp"
#include "test_support.hpp"

using namespace carnot;
using namespace carnot::testsupport;

TEST_CASE("the model fields match the independent transcription") {
    const auto model = symmetric_model();
    const auto ref = ref_model_fields();
    REQUIRE(model.frame.size() == 8);
    for (int i = 1; i <= 8; ++i) CHECK(model.frame.field(i) == ref[static_cast<size_t>(i - 1)]);
    CHECK(model.weights == WeightVector({1, 1, 2, 3, 3, 4, 4, 4}));
}

TEST_CASE("individual model coefficients") {
    const auto model = symmetric_model();
    // X1's d/dx7 coefficient is -x1 x2^2 / 4
    const Polynomial x1 = Polynomial::variable(8, 1);
    const Polynomial x2 = Polynomial::variable(8, 2);
    CHECK(model.frame.field(1).component(7) == (x1 * x2 * x2).scaled(Rational(-1, 4)));
    CHECK(model.frame.field(6) == VectorField::coordinate(8, 6));
    CHECK(model.frame.field(2).component(8).is_zero());
}

TEST_CASE("the symmetry field matches the independent transcription") {
    const auto sym = symmetry_field();
    CHECK(sym.field == ref_x0());
    CHECK(sym.field.component(6) == ref_p());
    CHECK(sym.field.component(3).is_zero());
    CHECK(sym.field.component(8) == ref_r());
}

TEST_CASE("the full bracket table verifies") {
    const auto report = verify_symmetric_model();
    CHECK(report.overall());
    CHECK(report.checks().size() == 28 + 2 + 1);  // pairs + homogeneity + growth vector
}

TEST_CASE("selected table entries, including the chained pair") {
    const auto model = symmetric_model();
    const Frame& f = model.frame;
    CHECK(lie_bracket(f.field(2), f.field(5)) == f.field(8));
    CHECK(lie_bracket(f.field(4), f.field(5)).is_zero());
    CHECK(lie_bracket(f.field(1), f.field(5)) == f.field(7));
    CHECK(lie_bracket(f.field(2), f.field(4)) == f.field(7));
}

TEST_CASE("the eight symmetry relations verify") {
    const auto report = verify_symmetry();
    CHECK(report.overall());
    CHECK(report.checks().size() == 8);

    const auto model = symmetric_model();
    const auto sym = symmetry_field();
    CHECK(lie_bracket(sym.field, model.frame.field(3)).is_zero());
    CHECK(lie_bracket(sym.field, model.frame.field(7)) ==
          model.frame.field(8) - model.frame.field(6));
    CHECK(lie_bracket(sym.field, model.frame.field(4)) == model.frame.field(5));
}

TEST_CASE("the symmetry field is weight zero") {
    CHECK(is_weight_homogeneous(symmetry_field().field, weights_258(), 0).homogeneous);
}

TEST_CASE("infinitesimal rotation test") {
    const auto model = symmetric_model();
    const VectorField& x1 = model.frame.field(1);
    const VectorField& x2 = model.frame.field(2);

    SUBCASE("the symmetry rotates with c = 1") {
        const auto check = is_infinitesimal_symmetry(symmetry_field().field, x1, x2);
        CHECK(check.ok);
        CHECK(check.constant == Rational(1));
    }
    SUBCASE("X3 is not a rotation of the frame") {
        const auto check = is_infinitesimal_symmetry(model.frame.field(3), x1, x2);
        CHECK(!check.ok);
    }
    SUBCASE("the zero field rotates trivially") {
        const auto check = is_infinitesimal_symmetry(VectorField(8), x1, x2);
        CHECK(check.ok);
        CHECK(check.constant == Rational(0));
    }
    SUBCASE("linearity in the candidate field") {
        const VectorField doubled = symmetry_field().field.scaled(Rational(2));
        const auto check = is_infinitesimal_symmetry(doubled, x1, x2);
        CHECK(check.ok);
        CHECK(check.constant == Rational(2));
        const auto sum = is_infinitesimal_symmetry(symmetry_field().field + doubled, x1, x2);
        CHECK(sum.ok);
        CHECK(sum.constant == Rational(3));
    }
}

TEST_CASE("the step-3 model matches its transcription and brackets correctly") {
    const Frame base = symmetric_model_235();
    const auto ref = ref_model235_fields();
    for (int i = 1; i <= 5; ++i) CHECK(base.field(i) == ref[static_cast<size_t>(i - 1)]);
    CHECK(lie_bracket(base.field(1), base.field(2)) == base.field(3));
    CHECK(lie_bracket(base.field(1), base.field(3)) == base.field(4));
    CHECK(lie_bracket(base.field(2), base.field(3)) == base.field(5));
    CHECK(lie_bracket(base.field(1), base.field(4)).is_zero());
}

TEST_CASE("the step-3 symmetry rotates its frame") {
    const Frame base = symmetric_model_235();
    const auto check =
        is_infinitesimal_symmetry(symmetry_field_235(), base.field(1), base.field(2));
    CHECK(check.ok);
    CHECK(check.constant == Rational(1));
}

TEST_CASE("extension ansatz reproduces the model") {
    const auto result = extend_model_ansatz(symmetric_model_235());

    const Polynomial x1 = Polynomial::variable(8, 1);
    const Polynomial x2 = Polynomial::variable(8, 2);
    CHECK(result.coefficients.at({2, 6}) == (x1 * x1 * x1).scaled(Rational(1, 6)));
    CHECK(result.coefficients.at({1, 8}) == (x2 * x2 * x2).scaled(Rational(-1, 6)));
    CHECK(result.coefficients.at({1, 7}) == (x1 * x2 * x2).scaled(Rational(-1, 4)));
    CHECK(result.coefficients.at({4, 6}) == x1);
    CHECK(result.coefficients.at({4, 8}).is_zero());
    CHECK(result.determinant == Rational(1));

    const auto ref = symmetric_model();
    for (int i = 1; i <= 8; ++i) CHECK(result.model.frame.field(i) == ref.frame.field(i));
}

TEST_CASE("extension ansatz rejects a wrong base") {
    CHECK_THROWS_AS(extend_model_ansatz(symmetric_model().frame), std::invalid_argument);
}

TEST_CASE("symmetry continuation reproduces the printed components") {
    const auto result = continue_symmetry_ansatz(symmetry_field_235());
    CHECK(result.p == ref_p());
    CHECK(result.q == ref_q());
    CHECK(result.r == ref_r());
    CHECK(result.field.field == symmetry_field().field);

    SUBCASE("intermediate derivative identity") {
        const auto model = symmetric_model();
        CHECK(model.frame.field(3).apply(result.p) ==
              Polynomial::variable(8, 1) * Polynomial::variable(8, 2));
        CHECK(model.frame.field(7).apply(result.p) == Polynomial::constant(8, Rational(1)));
        CHECK(model.frame.field(6).apply(result.p).is_zero());
    }
    SUBCASE("components vanish at the origin") {
        const std::vector<Rational> origin(8, Rational(0));
        CHECK(result.p.evaluate(origin) == Rational(0));
        CHECK(result.q.evaluate(origin) == Rational(0));
        CHECK(result.r.evaluate(origin) == Rational(0));
    }
}

TEST_CASE("an inconsistent ansatz system is reported") {
    AnsatzSystem sys;
    AnsatzPoly u = sys.unknown_poly(2, {Monomial(2)}, "u");
    sys.require_equal(u, Polynomial::constant(2, Rational(1)), "first");
    sys.require_equal(u, Polynomial::constant(2, Rational(2)), "second");
    CHECK_THROWS_AS(sys.solve(), InconsistentSystem);
}

TEST_CASE("free unknowns are normalized to zero") {
    AnsatzSystem sys;
    const std::vector<Monomial> basis{Monomial(2), Monomial::variable(2, 1)};
    AnsatzPoly u = sys.unknown_poly(2, basis, "u");
    // Only the x1 coefficient is constrained.
    sys.require_equal(u.partial(1), Polynomial::constant(2, Rational(3)), "slope");
    const auto sol = sys.solve();
    CHECK(sol.free_unknowns.size() == 1);
    CHECK(u.evaluate(sol.values) == Polynomial::variable(2, 1).scaled(Rational(3)));
}

TEST_CASE("both models realize the same algebra up to a diagonal sign change") {
    const CarnotAlgebra sym_alg =
        structure_constants_from_frame(symmetric_model().frame, weights_258().weights());
    const CarnotAlgebra gg_alg =
        structure_constants_from_frame(gg_frame(4), HallBasis(2, 4).layers());

    // Search the sign vector with e_1 = e_2 = +1 mapping H_i -> e_i * X_i.
    std::vector<int> found;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<int> eps{1, 1, 0, 0, 0, 0, 0, 0};
        for (int b = 0; b < 6; ++b) eps[static_cast<size_t>(2 + b)] = (mask >> b) & 1 ? 1 : -1;
        bool match = true;
        for (int i = 1; i <= 8 && match; ++i) {
            for (int j = i + 1; j <= 8 && match; ++j) {
                SparseVec transformed = gg_alg.bracket(i, j);
                for (auto& t : transformed)
                    t.c *= Rational(eps[static_cast<size_t>(i - 1)] * eps[static_cast<size_t>(j - 1)] *
                                    eps[static_cast<size_t>(t.k - 1)]);
                if (transformed != sym_alg.bracket(i, j)) match = false;
            }
        }
        if (match) {
            REQUIRE(found.empty());  // the sign vector is unique given e1 = e2 = 1
            found = eps;
        }
    }
    REQUIRE(!found.empty());
    CHECK(found == std::vector<int>{1, 1, -1, 1, 1, -1, -1, -1});
}

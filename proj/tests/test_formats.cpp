#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/gg_model.hpp"
#include "carnot/json_io.hpp"
#include "carnot/render.hpp"
#include "carnot/sym258.hpp"
#include "test_support.hpp"

using namespace carnot;
using namespace carnot::testsupport;

TEST_CASE("polynomial JSON schema is exact") {
    Polynomial p(2);
    p.add_term(Monomial::variable(2, 1).times(Monomial::variable(2, 2)), Rational(1));
    p.add_term(Monomial::variable(2, 2).shifted(2, 1), Rational(-1, 3));
    // canonical order: (0,2) before (1,1)
    CHECK(to_json(p) == R"({"n":2,"terms":[{"c":"-1/3","e":[0,2]},{"c":"1","e":[1,1]}]})");
}

TEST_CASE("vector field JSON lists every component") {
    VectorField v(2);
    v.set_component(2, Polynomial::variable(2, 1));
    CHECK(to_json(v) ==
          R"({"n":2,"components":[{"n":2,"terms":[]},{"n":2,"terms":[{"c":"1","e":[1,0]}]}]})");
    CHECK(vector_field_from_json(to_json(v)) == v);
}

TEST_CASE("frame and algebra JSON round-trip and re-serialize identically") {
    const Frame frame = symmetric_model().frame;
    const std::string s = to_json(frame);
    const Frame back = frame_from_json(s);
    CHECK(back.names() == frame.names());
    for (int i = 1; i <= frame.size(); ++i) CHECK(back.field(i) == frame.field(i));
    CHECK(to_json(back) == s);

    const CarnotAlgebra alg = table_258();
    const std::string a = to_json(alg);
    CHECK(carnot_algebra_from_json(a) == alg);
    CHECK(to_json(carnot_algebra_from_json(a)) == a);
}

TEST_CASE("algebra JSON matches the documented shape") {
    const std::string s = to_json(table_258());
    CHECK(s.find(R"("n":8,"d":2,"r":4,"layers":[1,1,2,3,3,4,4,4])") != std::string::npos);
    CHECK(s.find(R"({"i":1,"j":2,"out":[{"k":3,"c":"1"}]})") != std::string::npos);
}

TEST_CASE("emission is deterministic") {
    const Frame f1 = gg_frame(4);
    const Frame f2 = gg_frame(4);
    CHECK(to_json(f1) == to_json(f2));
    CHECK(to_json(f1, true) == to_json(f2, true));
}

TEST_CASE("report JSON carries the overall flag") {
    VerificationReport r;
    r.add("a", true);
    r.add("b", false, "boom");
    CHECK(to_json(r) ==
          R"({"overall":false,"checks":[{"name":"a","pass":true,"detail":""},{"name":"b","pass":false,"detail":"boom"}]})");
}

TEST_CASE("dims table JSON") {
    const std::string s = dims_table_json(2, 4);
    CHECK(s == R"({"d":2,"rows":[{"i":1,"l":"2","cum":"2"},{"i":2,"l":"1","cum":"3"},)"
               R"({"i":3,"l":"2","cum":"5"},{"i":4,"l":"3","cum":"8"}]})");
}

TEST_CASE("latex rendering") {
    CHECK(to_latex(VectorField::coordinate(8, 6)) == "\\frac{\\partial}{\\partial x_{6}}");
    CHECK(to_latex(ref_p()) ==
          "x_{7} + \\frac{x_{1}^{2}x_{2}^{2}}{8} - \\frac{x_{1}^{4}}{24}");
    const std::string h2 = to_latex(ref_gg4_fields()[1]);
    CHECK(h2.find("\\frac{x_{1}^{3}}{6} \\frac{\\partial}{\\partial x_{6}}") != std::string::npos);
    CHECK(to_latex(Polynomial(3)) == "0");
    const std::string frame_latex = to_latex(symmetric_model().frame);
    CHECK(frame_latex.find("X1 &= ") != std::string::npos);
    CHECK(frame_latex.find("\\begin{align*}") == 0);
}

TEST_CASE("random fields survive a JSON round trip byte-for-byte") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 50; ++iter) {
        const VectorField v = random_field(rng, 4, 3, 3);
        const std::string s = to_json(v);
        CHECK(to_json(vector_field_from_json(s)) == s);
    }
}

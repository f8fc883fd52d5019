#include "carnot/sym258.hpp"

#include <functional>
#include <stdexcept>

#include "carnot/ansatz.hpp"
#include "carnot/rational_matrix.hpp"

namespace carnot {

namespace {

// x_{v1}^{e1} * ... scaled by c, on R^n.
Polynomial mono(int n, std::initializer_list<std::pair<int, int>> powers, Rational c) {
    Monomial m(n);
    for (const auto& [var, exp] : powers) m = m.shifted(var, exp);
    return Polynomial::term(n, m, c);
}

VectorField build_field(int n, std::initializer_list<std::pair<int, Polynomial>> comps) {
    VectorField f(n);
    for (const auto& [k, p] : comps) f.add_to_component(k, p);
    return f;
}

std::map<std::pair<int, int>, SparseVec> scaled_258_pairs(const Rational& c) {
    return {
        {{1, 2}, {{3, c}}}, {{1, 3}, {{4, c}}}, {{2, 3}, {{5, c}}},
        {{1, 4}, {{6, c}}}, {{1, 5}, {{7, c}}}, {{2, 4}, {{7, c}}},
        {{2, 5}, {{8, c}}},
    };
}

}  // namespace

WeightVector weights_258() { return WeightVector({1, 1, 2, 3, 3, 4, 4, 4}); }

CarnotAlgebra table_258() {
    return CarnotAlgebra({1, 1, 2, 3, 3, 4, 4, 4}, scaled_258_pairs(Rational(1)));
}

CarnotAlgebra table_gg4() {
    // The Hall-descent frame brackets as [H_j, H_i] = +H_k for i < j, so the
    // stored i<j constants flip sign; [H_5,H_1] = H_7 follows from Jacobi.
    return CarnotAlgebra({1, 1, 2, 3, 3, 4, 4, 4}, scaled_258_pairs(Rational(-1)));
}

SymmetricModel symmetric_model() {
    const int n = 8;
    std::vector<VectorField> fields;

    fields.push_back(build_field(n, {
        {1, mono(n, {}, 1)},
        {3, mono(n, {{2, 1}}, {-1, 2})},
        {5, mono(n, {{1, 2}}, {-1, 2}) + mono(n, {{2, 2}}, {-1, 2})},
        {7, mono(n, {{1, 1}, {2, 2}}, {-1, 4})},
        {8, mono(n, {{2, 3}}, {-1, 6})},
    }));
    fields.push_back(build_field(n, {
        {2, mono(n, {}, 1)},
        {3, mono(n, {{1, 1}}, {1, 2})},
        {4, mono(n, {{1, 2}}, {1, 2}) + mono(n, {{2, 2}}, {1, 2})},
        {6, mono(n, {{1, 3}}, {1, 6})},
        {7, mono(n, {{1, 2}, {2, 1}}, {1, 4})},
    }));
    fields.push_back(build_field(n, {
        {3, mono(n, {}, 1)},
        {4, mono(n, {{1, 1}}, 1)},
        {5, mono(n, {{2, 1}}, 1)},
        {6, mono(n, {{1, 2}}, {1, 2})},
        {7, mono(n, {{1, 1}, {2, 1}}, 1)},
        {8, mono(n, {{2, 2}}, {1, 2})},
    }));
    fields.push_back(build_field(n, {
        {4, mono(n, {}, 1)},
        {6, mono(n, {{1, 1}}, 1)},
        {7, mono(n, {{2, 1}}, 1)},
    }));
    fields.push_back(build_field(n, {
        {5, mono(n, {}, 1)},
        {7, mono(n, {{1, 1}}, 1)},
        {8, mono(n, {{2, 1}}, 1)},
    }));
    fields.push_back(VectorField::coordinate(n, 6));
    fields.push_back(VectorField::coordinate(n, 7));
    fields.push_back(VectorField::coordinate(n, 8));

    return {Frame(std::move(fields), {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"}),
            weights_258()};
}

SymmetryField symmetry_field() {
    const int n = 8;
    const Polynomial p = mono(n, {{1, 4}}, {-1, 24}) + mono(n, {{1, 2}, {2, 2}}, {1, 8}) +
                         mono(n, {{7, 1}}, 1);
    const Polynomial q = mono(n, {{1, 1}, {2, 3}}, {1, 12}) + mono(n, {{1, 3}, {2, 1}}, {1, 12}) +
                         mono(n, {{6, 1}}, -2) + mono(n, {{8, 1}}, 2);
    const Polynomial r = mono(n, {{1, 2}, {2, 2}}, {1, 8}) + mono(n, {{2, 4}}, {-1, 24}) +
                         mono(n, {{7, 1}}, -1);
    return {build_field(n, {
        {1, mono(n, {{2, 1}}, 1)},
        {2, mono(n, {{1, 1}}, -1)},
        {4, mono(n, {{5, 1}}, 1)},
        {5, mono(n, {{4, 1}}, -1)},
        {6, p},
        {7, q},
        {8, r},
    })};
}

Frame symmetric_model_235() {
    const int n = 5;
    std::vector<VectorField> fields;
    fields.push_back(build_field(n, {
        {1, mono(n, {}, 1)},
        {3, mono(n, {{2, 1}}, {-1, 2})},
        {5, mono(n, {{1, 2}}, {-1, 2}) + mono(n, {{2, 2}}, {-1, 2})},
    }));
    fields.push_back(build_field(n, {
        {2, mono(n, {}, 1)},
        {3, mono(n, {{1, 1}}, {1, 2})},
        {4, mono(n, {{1, 2}}, {1, 2}) + mono(n, {{2, 2}}, {1, 2})},
    }));
    fields.push_back(build_field(n, {
        {3, mono(n, {}, 1)},
        {4, mono(n, {{1, 1}}, 1)},
        {5, mono(n, {{2, 1}}, 1)},
    }));
    fields.push_back(VectorField::coordinate(n, 4));
    fields.push_back(VectorField::coordinate(n, 5));
    return Frame(std::move(fields), {"X1", "X2", "X3", "X4", "X5"});
}

VectorField symmetry_field_235() {
    const int n = 5;
    return build_field(n, {
        {1, mono(n, {{2, 1}}, 1)},
        {2, mono(n, {{1, 1}}, -1)},
        {4, mono(n, {{5, 1}}, 1)},
        {5, mono(n, {{4, 1}}, -1)},
    });
}

namespace {

VectorField expected_combination(const Frame& frame, const SparseVec& combo) {
    VectorField out(frame.dimension());
    for (const auto& t : combo) out += frame.field(t.k).scaled(t.c);
    return out;
}

std::string combo_name(const Frame& frame, const SparseVec& combo) {
    if (combo.empty()) return "0";
    std::string s;
    for (const auto& t : combo) {
        if (!s.empty()) s += " + ";
        if (t.c == Rational(1)) s += frame.name(t.k);
        else if (t.c == Rational(-1)) s += "-" + frame.name(t.k);
        else s += t.c.to_string() + "*" + frame.name(t.k);
    }
    return s;
}

}  // namespace

VerificationReport verify_symmetric_model_on(const SymmetricModel& model) {
    VerificationReport report;
    const Frame& f = model.frame;
    const CarnotAlgebra expected = table_258();

    for (int i = 1; i <= 8; ++i) {
        for (int j = i + 1; j <= 8; ++j) {
            const SparseVec combo = expected.bracket(i, j);
            const VectorField lhs = lie_bracket(f.field(i), f.field(j));
            const VectorField rhs = expected_combination(f, combo);
            const VectorField residual = lhs - rhs;
            report.add("[" + f.name(i) + "," + f.name(j) + "] = " + combo_name(f, combo),
                       residual.is_zero(),
                       residual.is_zero() ? "" : "residual: " + residual.to_string());
        }
    }

    for (int i : {1, 2}) {
        const auto h = is_weight_homogeneous(f.field(i), model.weights, 1);
        report.add(f.name(i) + " homogeneous of weight one", h.homogeneous, h.detail);
    }

    {
        const std::vector<Rational> origin(8, Rational(0));
        const auto gv = growth_vector_at_point(f, {1, 2}, origin);
        const std::vector<int> want{2, 3, 5, 8};
        std::string got;
        for (int x : gv) got += (got.empty() ? "" : ",") + std::to_string(x);
        report.add("growth vector at the origin is (2,3,5,8)", gv == want, "got (" + got + ")");
    }

    return report;
}

VerificationReport verify_symmetric_model() { return verify_symmetric_model_on(symmetric_model()); }

VerificationReport verify_symmetry_on(const SymmetricModel& model, const SymmetryField& sym) {
    VerificationReport report;
    const Frame& f = model.frame;

    const std::vector<SparseVec> rhs{
        {{2, Rational(1)}},                     // [X0,X1] = X2
        {{1, Rational(-1)}},                    // [X0,X2] = -X1
        {},                                     // [X0,X3] = 0
        {{5, Rational(1)}},                     // [X0,X4] = X5
        {{4, Rational(-1)}},                    // [X0,X5] = -X4
        {{7, Rational(2)}},                     // [X0,X6] = 2*X7
        {{6, Rational(-1)}, {8, Rational(1)}},  // [X0,X7] = X8 - X6
        {{7, Rational(-2)}},                    // [X0,X8] = -2*X7
    };

    for (int i = 1; i <= 8; ++i) {
        const SparseVec& combo = rhs[static_cast<size_t>(i - 1)];
        const VectorField lhs = lie_bracket(sym.field, f.field(i));
        const VectorField residual = lhs - expected_combination(f, combo);
        report.add("[X0," + f.name(i) + "] = " + combo_name(f, combo), residual.is_zero(),
                   residual.is_zero() ? "" : "residual: " + residual.to_string());
    }
    return report;
}

VerificationReport verify_symmetry() {
    return verify_symmetry_on(symmetric_model(), symmetry_field());
}

SymmetryCheck is_infinitesimal_symmetry(const VectorField& v, const VectorField& f1,
                                        const VectorField& f2) {
    const VectorField b1 = lie_bracket(v, f1);
    const VectorField b2 = lie_bracket(v, f2);

    // Extract the candidate rotation rate from [v,f1] = c*f2.
    Rational c(0);
    if (!b1.is_zero()) {
        const auto flat2 = f2.flattened();
        if (flat2.empty()) return {false, Rational(0), "[v,F1] nonzero but F2 is the zero field"};
        const auto& [key, coef] = *flat2.begin();
        const auto flat1 = b1.flattened();
        const auto it = flat1.find(key);
        if (it != flat1.end()) c = it->second / coef;
    }

    VectorField r1 = b1 - f2.scaled(c);
    if (!r1.is_zero())
        return {false, c, "[v,F1] - c*F2 != 0, residual: " + r1.to_string()};
    VectorField r2 = b2 + f1.scaled(c);
    if (!r2.is_zero())
        return {false, c, "[v,F2] + c*F1 != 0, residual: " + r2.to_string()};
    return {true, c, ""};
}

namespace {

// Monomials in x_1, x_2 only with a + b = degree (their weights are 1).
std::vector<Monomial> generator_monomials(int n, int degree) {
    std::vector<Monomial> out;
    for (int a = degree; a >= 0; --a)
        out.push_back(Monomial(n).shifted(1, a).shifted(2, degree - a));
    return out;
}

// All monomials on R^n with weighted degree <= bound.
std::vector<Monomial> monomials_up_to_weight(int n, const WeightVector& w, int bound) {
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int var, int budget) {
        if (var > n) {
            out.emplace_back(exps);
            return;
        }
        const int wv = w.weight(var);
        for (int e = 0; e * wv <= budget; ++e) {
            exps[static_cast<size_t>(var - 1)] = e;
            rec(var + 1, budget - e * wv);
        }
        exps[static_cast<size_t>(var - 1)] = 0;
    };
    rec(1, bound);
    return out;
}

VectorField lift_field(const VectorField& f, int n) {
    VectorField out(n);
    for (int k = 1; k <= f.dimension(); ++k) {
        Polynomial p(n);
        for (const auto& [m, c] : f.component(k).terms()) {
            Monomial lifted(n);
            for (int j = 1; j <= f.dimension(); ++j) lifted = lifted.shifted(j, m.exponent(j));
            p.add_term(lifted, c);
        }
        out.set_component(k, p);
    }
    return out;
}

AnsatzPoly known(const Polynomial& p) { return AnsatzPoly(p); }

}  // namespace

ModelAnsatzResult extend_model_ansatz(const Frame& base) {
    if (base.dimension() != 5 || base.size() != 5)
        throw std::invalid_argument("extend_model_ansatz: base must be the five-field model on R^5");

    const int n = 8;
    AnsatzSystem sys;

    // Unknown coefficients a_i^j of d/dx_j in X_i, posed in the generator
    // variables with the weighted degree forced by homogeneity:
    // deg a_i^j = weight(x_j) - layer(X_i) = 4 - layer(i).
    const int layer_of[6] = {0, 1, 1, 2, 3, 3};
    std::map<std::pair<int, int>, AnsatzPoly> a;
    for (int i = 1; i <= 5; ++i)
        for (int j = 6; j <= 8; ++j)
            a.emplace(std::pair(i, j),
                      sys.unknown_poly(n, generator_monomials(n, 4 - layer_of[i]),
                                       "a_" + std::to_string(i) + "^" + std::to_string(j)));

    std::vector<AnsatzField> x;
    x.reserve(8);
    for (int i = 1; i <= 5; ++i) {
        const VectorField lifted = lift_field(base.field(i), n);
        AnsatzField f(n);
        for (int k = 1; k <= 5; ++k) f.set_component(k, known(lifted.component(k)));
        for (int j = 6; j <= 8; ++j) f.set_component(j, a.at({i, j}));
        x.push_back(std::move(f));
    }
    for (int j = 6; j <= 8; ++j) {
        AnsatzField f(n);
        f.set_component(j, known(Polynomial::constant(n, Rational(1))));
        x.push_back(std::move(f));
    }

    // Normalizations picked in the construction: the symmetric second-layer
    // data with unit independence determinant, and the symmetric split of the
    // mixed d/dx_7 constraint.
    sys.require_equal(a.at({3, 6}), mono(n, {{1, 2}}, {1, 2}), "a_3^6 normalization");
    sys.require_equal(a.at({3, 7}), mono(n, {{1, 1}, {2, 1}}, 1), "a_3^7 normalization");
    sys.require_equal(a.at({3, 8}), mono(n, {{2, 2}}, {1, 2}), "a_3^8 normalization");
    sys.require_equal(a.at({1, 6}), Polynomial(n), "a_1^6 normalization");
    sys.require_equal(a.at({2, 8}), Polynomial(n), "a_2^8 normalization");
    sys.require_equal(a.at({1, 7}), mono(n, {{1, 1}, {2, 2}}, {-1, 4}), "a_1^7 normalization");
    sys.require_equal(a.at({2, 7}), mono(n, {{1, 2}, {2, 1}}, {1, 4}), "a_2^7 normalization");

    // Full multiplication table, zero pairs included.
    const CarnotAlgebra expected = table_258();
    for (int i = 1; i <= 8; ++i) {
        for (int j = i + 1; j <= 8; ++j) {
            AnsatzField diff = ansatz_bracket(x[static_cast<size_t>(i - 1)],
                                              x[static_cast<size_t>(j - 1)]);
            for (const auto& t : expected.bracket(i, j)) {
                const AnsatzField& target = x[static_cast<size_t>(t.k - 1)];
                for (int k = 1; k <= n; ++k) {
                    AnsatzPoly c = diff.component(k);
                    c -= target.component(k) * AnsatzPoly(Polynomial::constant(n, t.c));
                    diff.set_component(k, std::move(c));
                }
            }
            for (int k = 1; k <= n; ++k)
                sys.require_zero(diff.component(k),
                                 "[X" + std::to_string(i) + ",X" + std::to_string(j) + "] comp " +
                                     std::to_string(k));
        }
    }

    const auto sol = sys.solve();

    ModelAnsatzResult result{
        {Frame(std::vector<VectorField>(8, VectorField(n)),
               {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"}),
         weights_258()},
        {},
        Rational(0)};

    for (int i = 1; i <= 5; ++i) {
        VectorField f = lift_field(base.field(i), n);
        for (int j = 6; j <= 8; ++j) {
            Polynomial solved = a.at({i, j}).evaluate(sol.values);
            f.set_component(j, solved);
            result.coefficients.emplace(std::pair(i, j), std::move(solved));
        }
        result.model.frame.field_mutable(i) = std::move(f);
    }
    for (int j = 6; j <= 8; ++j)
        result.model.frame.field_mutable(j) = VectorField::coordinate(n, j);

    // Independence determinant of the top-layer data.
    QMatrix hess(3, 3);
    for (int j = 6; j <= 8; ++j) {
        const Polynomial& p = result.coefficients.at({3, j});
        const Polynomial d1 = p.partial(1), d2 = p.partial(2);
        hess.at(j - 6, 0) = d1.partial(1).coefficient(Monomial(n));
        hess.at(j - 6, 1) = d1.partial(2).coefficient(Monomial(n));
        hess.at(j - 6, 2) = d2.partial(2).coefficient(Monomial(n));
    }
    result.determinant = hess.determinant();

    return result;
}

SymmetryAnsatzResult continue_symmetry_ansatz(const VectorField& base_symmetry) {
    if (base_symmetry.dimension() != 5)
        throw std::invalid_argument("continue_symmetry_ansatz: base symmetry must live on R^5");

    const int n = 8;
    const SymmetricModel model = symmetric_model();
    const WeightVector w = model.weights;

    AnsatzSystem sys;
    const auto basis = monomials_up_to_weight(n, w, 4);
    AnsatzPoly p = sys.unknown_poly(n, basis, "P");
    AnsatzPoly q = sys.unknown_poly(n, basis, "Q");
    AnsatzPoly r = sys.unknown_poly(n, basis, "R");

    AnsatzField x0(n);
    const VectorField lifted = lift_field(base_symmetry, n);
    for (int k = 1; k <= 5; ++k) x0.set_component(k, known(lifted.component(k)));
    x0.set_component(6, p);
    x0.set_component(7, q);
    x0.set_component(8, r);

    const std::vector<SparseVec> rhs{
        {{2, Rational(1)}}, {{1, Rational(-1)}}, {},
        {{5, Rational(1)}}, {{4, Rational(-1)}},
        {{7, Rational(2)}}, {{6, Rational(-1)}, {8, Rational(1)}}, {{7, Rational(-2)}},
    };

    for (int i = 1; i <= 8; ++i) {
        AnsatzField xi(n);
        for (int k = 1; k <= n; ++k) xi.set_component(k, known(model.frame.field(i).component(k)));
        AnsatzField diff = ansatz_bracket(x0, xi);
        for (const auto& t : rhs[static_cast<size_t>(i - 1)]) {
            for (int k = 1; k <= n; ++k) {
                AnsatzPoly c = diff.component(k);
                c -= known(model.frame.field(t.k).component(k).scaled(t.c));
                diff.set_component(k, std::move(c));
            }
        }
        for (int k = 1; k <= n; ++k)
            sys.require_zero(diff.component(k),
                             "[X0,X" + std::to_string(i) + "] comp " + std::to_string(k));
    }

    // Free unknowns (the additive constants) are zeroed by solve(), which is
    // exactly the P(0) = Q(0) = R(0) = 0 normalization.
    const auto sol = sys.solve();

    SymmetryAnsatzResult result{{VectorField(n)}, p.evaluate(sol.values), q.evaluate(sol.values),
                                r.evaluate(sol.values)};
    VectorField field = lifted;
    field.set_component(6, result.p);
    field.set_component(7, result.q);
    field.set_component(8, result.r);
    result.field.field = std::move(field);
    return result;
}

}  // namespace carnot

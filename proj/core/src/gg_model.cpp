#include "carnot/gg_model.hpp"

#include <stdexcept>

#include "carnot/rational_matrix.hpp"
#include "carnot/witt.hpp"

namespace carnot {

GGMonomialTable::GGMonomialTable(int step) : basis_(2, step) {
    const int n = basis_.size();
    p_.assign(static_cast<size_t>(n), Polynomial(n));

    p_[1] = Polynomial::constant(n, Rational(1));  // P_{2,2}

    for (int k = 3; k <= n; ++k) {
        const HallElement& e = basis_.element(k);
        const int i = e.left, j = e.right;
        const Polynomial& parent = p_[static_cast<size_t>(i - 1)];
        if (parent.is_zero())
            throw std::logic_error("GGMonomialTable: descent parent has no monomial");
        const int d = parent.divisibility_degree(j);
        const int sign = e.degree % 2 == 0 ? -1 : 1;  // (-1)^(degree-1)
        Polynomial step_poly =
            (Polynomial::variable(n, j) * parent).scaled(Rational(sign, d + 1));
        p_[static_cast<size_t>(k - 1)] = std::move(step_poly);
    }
}

const Polynomial& GGMonomialTable::monomial(int hall_index) const {
    const Polynomial& p = p_.at(static_cast<size_t>(hall_index - 1));
    if (p.is_zero()) throw std::out_of_range("GGMonomialTable: no monomial for this index");
    return p;
}

std::pair<int, int> GGMonomialTable::descent(int hall_index) const {
    const HallElement& e = basis_.element(hall_index);
    return {e.left, e.right};
}

bool GGMonomialTable::descends_from_2(int hall_index) const {
    const HallElement& e = basis_.element(hall_index);
    return e.index == 2 || !e.is_generator();
}

GGMonomialTable gg_monomials(int r) {
    if (r < 1) throw std::invalid_argument("gg_monomials: step must be >= 1");
    return GGMonomialTable(r);
}

std::pair<VectorField, VectorField> gg_generators(int r) {
    if (r < 1) throw std::invalid_argument("gg_generators: step must be >= 1");
    const GGMonomialTable table(r);
    const int n = table.dimension();

    VectorField h1 = VectorField::coordinate(n, 1);
    VectorField h2 = VectorField::coordinate(n, 2);
    for (int k = 3; k <= n; ++k) h2.set_component(k, table.monomial(k));
    return {std::move(h1), std::move(h2)};
}

Frame gg_frame(int r) {
    const GGMonomialTable table(r);
    const HallBasis& basis = table.basis();
    const int n = basis.size();

    auto [h1, h2] = gg_generators(r);
    std::vector<VectorField> fields{std::move(h1), std::move(h2)};
    std::vector<std::string> names{"H1", "H2"};
    for (int k = 3; k <= n; ++k) {
        const auto [i, j] = table.descent(k);
        fields.push_back(lie_bracket(fields[static_cast<size_t>(i - 1)],
                                     fields[static_cast<size_t>(j - 1)]));
        names.push_back("H" + std::to_string(k));
    }
    return Frame(std::move(fields), std::move(names));
}

VerificationReport verify_free_nilpotent(const Frame& frame, int r) {
    if (r < 1) throw std::invalid_argument("verify_free_nilpotent: step must be >= 1");
    if (frame.size() < 2) throw std::invalid_argument("verify_free_nilpotent: need two generators");
    VerificationReport report;

    const int n = frame.dimension();
    const VectorField& g1 = frame.field(1);
    const VectorField& g2 = frame.field(2);

    // Left-normed brackets with the generators span the whole closure, so it
    // is enough to grow degree by degree and prune dependents.
    SparseEchelon<VectorField::FlatKey> span;
    std::vector<VectorField> frontier;
    for (const VectorField* g : {&g1, &g2})
        if (span.insert(g->flattened())) frontier.push_back(*g);

    std::vector<int> degree_counts{static_cast<int>(frontier.size())};
    for (int degree = 2; degree <= r; ++degree) {
        std::vector<VectorField> next;
        for (const VectorField* g : {&g1, &g2}) {
            for (const auto& f : frontier) {
                VectorField b = lie_bracket(*g, f);
                if (b.is_zero()) continue;
                if (span.insert(b.flattened())) next.push_back(std::move(b));
            }
        }
        degree_counts.push_back(static_cast<int>(next.size()));
        frontier = std::move(next);
    }

    const Integer want_total = cumulative_dimension(2, r);
    report.add("closure rank equals dim = " + want_total.get_str(),
               Integer(span.rank()) == want_total,
               "rank " + std::to_string(span.rank()));

    {
        bool ok = true;
        std::string detail;
        for (int degree = 1; degree <= r && ok; ++degree) {
            const Integer want = witt_dimension(2, degree);
            if (Integer(degree_counts[static_cast<size_t>(degree - 1)]) != want) {
                ok = false;
                detail = "degree " + std::to_string(degree) + " contributes " +
                         std::to_string(degree_counts[static_cast<size_t>(degree - 1)]) +
                         " fields, expected " + want.get_str();
            }
        }
        report.add("per-degree closure growth matches the dimension table", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (const VectorField* g : {&g1, &g2}) {
            for (const auto& f : frontier) {
                if (!lie_bracket(*g, f).is_zero()) {
                    ok = false;
                    detail = "a bracket of degree " + std::to_string(r + 1) + " does not vanish";
                    break;
                }
            }
            if (!ok) break;
        }
        report.add("all brackets of degree " + std::to_string(r + 1) + " vanish", ok, detail);
    }

    {
        const WeightVector w = HallBasis(2, r).weights();
        if (w.dimension() == n) {
            const auto h1 = is_weight_homogeneous(g1, w, 1);
            const auto h2 = is_weight_homogeneous(g2, w, 1);
            report.add("H1 homogeneous of weight one", h1.homogeneous, h1.detail);
            report.add("H2 homogeneous of weight one", h2.homogeneous, h2.detail);
        } else {
            report.add("generators live on the Hall coordinate space", false,
                       "ambient dimension " + std::to_string(n) + " != Hall dimension " +
                           std::to_string(w.dimension()));
        }
    }

    return report;
}

}  // namespace carnot

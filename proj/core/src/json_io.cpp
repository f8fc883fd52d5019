#include "carnot/json_io.hpp"

#include <json.hpp>

#include "carnot/witt.hpp"

namespace carnot {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

json poly_node(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(json{{"c", c.to_string()}, {"e", m.exponents()}});
    return json{{"n", p.dimension()}, {"terms", std::move(terms)}};
}

Polynomial poly_from_node(const json& node) {
    const int n = node.at("n").get<int>();
    Polynomial p(n);
    for (const auto& term : node.at("terms")) {
        const Rational c = Rational::parse(term.at("c").get<std::string>());
        const std::vector<int> e = term.at("e").get<std::vector<int>>();
        p.add_term(Monomial(e), c);
    }
    return p;
}

json field_node(const VectorField& v) {
    json comps = json::array();
    for (int k = 1; k <= v.dimension(); ++k) comps.push_back(poly_node(v.component(k)));
    return json{{"n", v.dimension()}, {"components", std::move(comps)}};
}

VectorField field_from_node(const json& node) {
    const int n = node.at("n").get<int>();
    VectorField v(n);
    const auto& comps = node.at("components");
    if (static_cast<int>(comps.size()) != n)
        throw std::invalid_argument("vector field JSON: component count mismatch");
    int k = 1;
    for (const auto& c : comps) v.set_component(k++, poly_from_node(c));
    return v;
}

}  // namespace

std::string to_json(const Polynomial& p, bool pretty) { return dump(poly_node(p), pretty); }

std::string to_json(const VectorField& v, bool pretty) { return dump(field_node(v), pretty); }

std::string to_json(const Frame& f, bool pretty) {
    json fields = json::array();
    for (int i = 1; i <= f.size(); ++i) fields.push_back(field_node(f.field(i)));
    return dump(json{{"n", f.dimension()}, {"names", f.names()}, {"fields", std::move(fields)}},
                pretty);
}

std::string to_json(const CarnotAlgebra& alg, bool pretty) {
    json brackets = json::array();
    for (const auto& [ij, combo] : alg.table()) {
        json out = json::array();
        for (const auto& t : combo) out.push_back(json{{"k", t.k}, {"c", t.c.to_string()}});
        brackets.push_back(json{{"i", ij.first}, {"j", ij.second}, {"out", std::move(out)}});
    }
    return dump(json{{"n", alg.dimension()},
                     {"d", alg.num_generators()},
                     {"r", alg.step()},
                     {"layers", alg.layers()},
                     {"brackets", std::move(brackets)}},
                pretty);
}

std::string to_json(const VerificationReport& report, bool pretty) {
    json checks = json::array();
    for (const auto& c : report.checks())
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return dump(json{{"overall", report.overall()}, {"checks", std::move(checks)}}, pretty);
}

Polynomial polynomial_from_json(const std::string& text) {
    return poly_from_node(json::parse(text));
}

VectorField vector_field_from_json(const std::string& text) {
    return field_from_node(json::parse(text));
}

Frame frame_from_json(const std::string& text) {
    const json node = json::parse(text);
    std::vector<VectorField> fields;
    for (const auto& f : node.at("fields")) fields.push_back(field_from_node(f));
    return Frame(std::move(fields), node.at("names").get<std::vector<std::string>>());
}

CarnotAlgebra carnot_algebra_from_json(const std::string& text) {
    const json node = json::parse(text);
    std::map<std::pair<int, int>, SparseVec> table;
    for (const auto& b : node.at("brackets")) {
        SparseVec combo;
        for (const auto& t : b.at("out"))
            combo.push_back({t.at("k").get<int>(), Rational::parse(t.at("c").get<std::string>())});
        table.emplace(std::pair(b.at("i").get<int>(), b.at("j").get<int>()), std::move(combo));
    }
    return CarnotAlgebra(node.at("layers").get<std::vector<int>>(), std::move(table));
}

std::string dims_table_json(int d, int max_step, bool pretty) {
    json rows = json::array();
    Integer cum(0);
    for (int i = 1; i <= max_step; ++i) {
        const Integer l = witt_dimension(d, i);
        cum += l;
        rows.push_back(json{{"i", i}, {"l", l.get_str()}, {"cum", cum.get_str()}});
    }
    return dump(json{{"d", d}, {"rows", std::move(rows)}}, pretty);
}

std::string growth_vector_json(const std::vector<int>& ranks, bool pretty) {
    return dump(json{{"ranks", ranks}}, pretty);
}

}  // namespace carnot

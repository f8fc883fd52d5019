#include "carnot/verify.hpp"

#include <stdexcept>

#include "carnot/gg_model.hpp"

namespace carnot {

namespace {

const int kModelDim = 8;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

Monomial parse_monomial(const std::string& text, int n) {
    if (text == "1") return Monomial(n);
    Monomial m(n);
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '*') { ++pos; continue; }
        if (text[pos] != 'x')
            throw std::invalid_argument("mutation: bad monomial '" + text + "'");
        ++pos;
        size_t end = pos;
        while (end < text.size() && isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) throw std::invalid_argument("mutation: bad monomial '" + text + "'");
        const int var = std::stoi(text.substr(pos, end - pos));
        pos = end;
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            end = pos;
            while (end < text.size() && isdigit(static_cast<unsigned char>(text[end]))) ++end;
            if (end == pos) throw std::invalid_argument("mutation: bad monomial '" + text + "'");
            exp = std::stoi(text.substr(pos, end - pos));
            pos = end;
        }
        m = m.shifted(var, exp);
    }
    return m;
}

VerificationReport with_prefix(const std::string& prefix, const VerificationReport& r) {
    VerificationReport out;
    for (const auto& c : r.checks()) out.add(prefix + c.name, c.pass, c.detail);
    return out;
}

}  // namespace

Mutation Mutation::parse(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() < 2) throw std::invalid_argument("mutation: expected '<target>:<action>'");

    Mutation m;
    const std::string& target = parts[0];
    if (target.size() < 2 || target[0] != 'X')
        throw std::invalid_argument("mutation: target must be X0..X8");
    m.target = std::stoi(target.substr(1));
    if (m.target < 0 || m.target > 8)
        throw std::invalid_argument("mutation: target must be X0..X8");

    if (parts.size() == 2) {
        const std::string& action = parts[1];
        const std::string head = "drop-", tail = "-term";
        if (action.size() <= head.size() + tail.size() || action.substr(0, head.size()) != head ||
            action.substr(action.size() - tail.size()) != tail)
            throw std::invalid_argument("mutation: unknown action '" + action + "'");
        m.op = Op::DropEverywhere;
        m.monomial = parse_monomial(
            action.substr(head.size(), action.size() - head.size() - tail.size()), kModelDim);
        return m;
    }

    if (parts[1].size() < 2 || parts[1][0] != 'c')
        throw std::invalid_argument("mutation: expected component selector 'c<k>'");
    m.component = std::stoi(parts[1].substr(1));
    if (m.component < 1 || m.component > kModelDim)
        throw std::invalid_argument("mutation: component out of range");

    const std::string& op = parts[2];
    if (op == "drop") {
        if (parts.size() != 4) throw std::invalid_argument("mutation: drop takes a monomial");
        m.op = Op::Drop;
        m.monomial = parse_monomial(parts[3], kModelDim);
    } else if (op == "add") {
        if (parts.size() != 4 && parts.size() != 5)
            throw std::invalid_argument("mutation: add takes a monomial and optional value");
        m.op = Op::Add;
        m.monomial = parse_monomial(parts[3], kModelDim);
        m.value = parts.size() == 5 ? Rational::parse(parts[4]) : Rational(1);
        if (m.value.is_zero()) throw std::invalid_argument("mutation: add of zero is a no-op");
    } else if (op == "scale") {
        if (parts.size() != 5) throw std::invalid_argument("mutation: scale takes a monomial and value");
        m.op = Op::Scale;
        m.monomial = parse_monomial(parts[3], kModelDim);
        m.value = Rational::parse(parts[4]);
        if (m.value == Rational(1)) throw std::invalid_argument("mutation: scale by one is a no-op");
    } else {
        throw std::invalid_argument("mutation: unknown op '" + op + "'");
    }
    return m;
}

void Mutation::apply(VectorField& field) const {
    if (field.dimension() != kModelDim)
        throw std::invalid_argument("mutation: field is not on R^8");

    auto drop_in = [&](int k) {
        const Rational c = field.component(k).coefficient(monomial);
        if (c.is_zero()) return false;
        Polynomial p = field.component(k);
        p.add_term(monomial, -c);
        field.set_component(k, std::move(p));
        return true;
    };

    switch (op) {
        case Op::DropEverywhere: {
            bool any = false;
            for (int k = 1; k <= kModelDim; ++k) any = drop_in(k) || any;
            if (!any) throw std::invalid_argument("mutation: no component carries the monomial");
            return;
        }
        case Op::Drop: {
            if (!drop_in(component))
                throw std::invalid_argument("mutation: component does not carry the monomial");
            return;
        }
        case Op::Add: {
            Polynomial p = field.component(component);
            p.add_term(monomial, value);
            field.set_component(component, std::move(p));
            return;
        }
        case Op::Scale: {
            const Rational c = field.component(component).coefficient(monomial);
            if (c.is_zero())
                throw std::invalid_argument("mutation: component does not carry the monomial");
            Polynomial p = field.component(component);
            p.add_term(monomial, c * (value - Rational(1)));
            field.set_component(component, std::move(p));
            return;
        }
    }
}

VerificationReport verify_all(const VerifyAllOptions& options) {
    VerificationReport report;

    report.merge(with_prefix("gg(r=" + std::to_string(options.gg_step) + "): ",
                             verify_free_nilpotent(gg_frame(options.gg_step), options.gg_step)));

    SymmetricModel model = symmetric_model();
    SymmetryField sym = symmetry_field();
    if (options.mutate) {
        const Mutation m = Mutation::parse(*options.mutate);
        if (m.target == 0) m.apply(sym.field);
        else m.apply(model.frame.field_mutable(m.target));
    }

    report.merge(with_prefix("sym-model: ", verify_symmetric_model_on(model)));
    report.merge(with_prefix("symmetry: ", verify_symmetry_on(model, sym)));

    try {
        const CarnotAlgebra alg = structure_constants_from_frame(model.frame, model.weights.weights());
        report.add("sym-model: extracted structure constants match the (2,3,5,8) table",
                   alg == table_258(), "");
        report.merge(with_prefix("carnot-axioms: ", verify_carnot_axioms(alg)));
    } catch (const FrameExpansionError& e) {
        report.add("sym-model: structure constants are extractable", false, e.what());
    }

    return report;
}

}  // namespace carnot

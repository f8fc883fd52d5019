#include "carnot/vector_field.hpp"

#include <stdexcept>

namespace carnot {

VectorField::VectorField(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("VectorField: dimension must be positive");
    comp_.assign(static_cast<size_t>(n), Polynomial(n));
}

VectorField::VectorField(std::vector<Polynomial> components)
    : n_(static_cast<int>(components.size())), comp_(std::move(components)) {
    if (comp_.empty()) throw std::invalid_argument("VectorField: no components");
    for (const auto& p : comp_)
        if (p.dimension() != n_)
            throw std::invalid_argument("VectorField: component dimension mismatch");
}

VectorField VectorField::coordinate(int n, int k) {
    VectorField v(n);
    v.set_component(k, Polynomial::constant(n, Rational(1)));
    return v;
}

const Polynomial& VectorField::component(int k) const {
    if (k < 1 || k > n_) throw std::out_of_range("VectorField: component index");
    return comp_[static_cast<size_t>(k - 1)];
}

void VectorField::set_component(int k, Polynomial p) {
    if (k < 1 || k > n_) throw std::out_of_range("VectorField: component index");
    if (p.dimension() != n_) throw std::invalid_argument("VectorField: component dimension mismatch");
    comp_[static_cast<size_t>(k - 1)] = std::move(p);
}

void VectorField::add_to_component(int k, const Polynomial& p) {
    if (k < 1 || k > n_) throw std::out_of_range("VectorField: component index");
    comp_[static_cast<size_t>(k - 1)] += p;
}

bool VectorField::is_zero() const {
    for (const auto& p : comp_)
        if (!p.is_zero()) return false;
    return true;
}

Polynomial VectorField::apply(const Polynomial& p) const {
    if (p.dimension() != n_) throw std::invalid_argument("VectorField::apply: dimension mismatch");
    Polynomial out(n_);
    for (int j = 1; j <= n_; ++j) {
        const Polynomial& vj = component(j);
        if (vj.is_zero()) continue;
        out += vj * p.partial(j);
    }
    return out;
}

std::vector<Rational> VectorField::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("VectorField::evaluate: point length mismatch");
    std::vector<Rational> out;
    out.reserve(comp_.size());
    for (const auto& p : comp_) out.push_back(p.evaluate(point));
    return out;
}

VectorField VectorField::operator-() const {
    VectorField v(n_);
    for (int k = 1; k <= n_; ++k) v.set_component(k, -component(k));
    return v;
}

void VectorField::check_same_dimension(const VectorField& o) const {
    if (o.n_ != n_) throw std::invalid_argument("VectorField: ambient dimension mismatch");
}

VectorField& VectorField::operator+=(const VectorField& o) {
    check_same_dimension(o);
    for (int k = 1; k <= n_; ++k) comp_[static_cast<size_t>(k - 1)] += o.component(k);
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    check_same_dimension(o);
    for (int k = 1; k <= n_; ++k) comp_[static_cast<size_t>(k - 1)] -= o.component(k);
    return *this;
}

VectorField VectorField::scaled(const Rational& c) const {
    VectorField v(n_);
    for (int k = 1; k <= n_; ++k) v.set_component(k, component(k).scaled(c));
    return v;
}

VectorField VectorField::scaled(const Polynomial& p) const {
    VectorField v(n_);
    for (int k = 1; k <= n_; ++k) v.set_component(k, component(k) * p);
    return v;
}

std::string VectorField::to_string() const {
    std::string s;
    for (int k = 1; k <= n_; ++k) {
        const Polynomial& p = component(k);
        if (p.is_zero()) continue;
        if (!s.empty()) s += " + ";
        const bool wrap = p.term_count() > 1;
        s += (wrap ? "(" + p.to_string() + ")" : p.to_string());
        s += "*d/dx" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

std::map<VectorField::FlatKey, Rational> VectorField::flattened() const {
    std::map<FlatKey, Rational> out;
    for (int k = 1; k <= n_; ++k)
        for (const auto& [m, c] : component(k).terms()) out.emplace(FlatKey(k, m), c);
    return out;
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
    if (v.dimension() != w.dimension())
        throw std::invalid_argument("lie_bracket: ambient dimension mismatch");
    const int n = v.dimension();
    VectorField out(n);
    for (int k = 1; k <= n; ++k)
        out.set_component(k, v.apply(w.component(k)) - w.apply(v.component(k)));
    return out;
}

HomogeneityWitness is_weight_homogeneous(const VectorField& v, const WeightVector& w,
                                         long expected_weight) {
    if (w.dimension() != v.dimension())
        throw std::invalid_argument("is_weight_homogeneous: weight dimension mismatch");
    for (int k = 1; k <= v.dimension(); ++k) {
        const Polynomial& p = v.component(k);
        if (p.is_zero()) continue;
        const long want = static_cast<long>(w.weight(k)) - expected_weight;
        const auto got = p.weighted_degree(w);
        if (!got) {
            return {false, k, "component " + std::to_string(k) + " is weight-inhomogeneous: " + p.to_string()};
        }
        if (*got != want) {
            return {false, k,
                    "component " + std::to_string(k) + " has weighted degree " + std::to_string(*got) +
                        ", expected " + std::to_string(want)};
        }
    }
    return {};
}

Frame::Frame(std::vector<VectorField> fields, std::vector<std::string> names)
    : fields_(std::move(fields)), names_(std::move(names)) {
    if (fields_.empty()) throw std::invalid_argument("Frame: empty");
    if (names_.size() != fields_.size()) throw std::invalid_argument("Frame: name/field count mismatch");
    for (const auto& f : fields_)
        if (f.dimension() != fields_.front().dimension())
            throw std::invalid_argument("Frame: mixed ambient dimensions");
}

int Frame::dimension() const { return fields_.front().dimension(); }

const VectorField& Frame::field(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("Frame: field index");
    return fields_[static_cast<size_t>(i - 1)];
}

VectorField& Frame::field_mutable(int i) {
    if (i < 1 || i > size()) throw std::out_of_range("Frame: field index");
    return fields_[static_cast<size_t>(i - 1)];
}

const std::string& Frame::name(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("Frame: name index");
    return names_[static_cast<size_t>(i - 1)];
}

}  // namespace carnot

#include "carnot/ansatz.hpp"

#include <stdexcept>

#include "carnot/rational_matrix.hpp"

namespace carnot {

LinExpr& LinExpr::operator+=(const LinExpr& o) {
    constant_ += o.constant_;
    for (const auto& [v, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.try_emplace(v, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
    return *this += o.scaled(Rational(-1));
}

LinExpr LinExpr::scaled(const Rational& c) const {
    LinExpr e;
    if (c.is_zero()) return e;
    e.constant_ = constant_ * c;
    for (const auto& [v, x] : coeffs_) e.coeffs_.emplace(v, x * c);
    return e;
}

LinExpr operator*(const LinExpr& a, const LinExpr& b) {
    if (a.is_constant()) return b.scaled(a.constant());
    if (b.is_constant()) return a.scaled(b.constant());
    throw std::logic_error("LinExpr: product of two non-constant affine forms");
}

Rational LinExpr::evaluate(const std::vector<Rational>& values) const {
    Rational acc = constant_;
    for (const auto& [v, c] : coeffs_) acc += c * values.at(static_cast<size_t>(v));
    return acc;
}

AnsatzPoly::AnsatzPoly(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("AnsatzPoly: dimension must be positive");
}

AnsatzPoly::AnsatzPoly(const Polynomial& p) : n_(p.dimension()) {
    for (const auto& [m, c] : p.terms()) terms_.emplace(m, LinExpr(c));
}

void AnsatzPoly::add_term(const Monomial& m, LinExpr e) {
    if (m.dimension() != n_) throw std::invalid_argument("AnsatzPoly: monomial dimension mismatch");
    if (e.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, std::move(e));
    if (!inserted) {
        it->second += e;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AnsatzPoly& AnsatzPoly::operator+=(const AnsatzPoly& o) {
    if (o.n_ != n_) throw std::invalid_argument("AnsatzPoly: ambient dimension mismatch");
    for (const auto& [m, e] : o.terms_) add_term(m, e);
    return *this;
}

AnsatzPoly& AnsatzPoly::operator-=(const AnsatzPoly& o) {
    if (o.n_ != n_) throw std::invalid_argument("AnsatzPoly: ambient dimension mismatch");
    for (const auto& [m, e] : o.terms_) add_term(m, e.scaled(Rational(-1)));
    return *this;
}

AnsatzPoly operator*(const AnsatzPoly& a, const AnsatzPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("AnsatzPoly: ambient dimension mismatch");
    AnsatzPoly p(a.n_);
    for (const auto& [ma, ea] : a.terms_)
        for (const auto& [mb, eb] : b.terms_) p.add_term(ma.times(mb), ea * eb);
    return p;
}

AnsatzPoly AnsatzPoly::partial(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("AnsatzPoly::partial: index out of range");
    AnsatzPoly p(n_);
    for (const auto& [m, e] : terms_) {
        const int exp = m.exponent(j);
        if (exp == 0) continue;
        p.add_term(m.shifted(j, -1), e.scaled(Rational(exp)));
    }
    return p;
}

Polynomial AnsatzPoly::evaluate(const std::vector<Rational>& values) const {
    Polynomial p(n_);
    for (const auto& [m, e] : terms_) p.add_term(m, e.evaluate(values));
    return p;
}

AnsatzField::AnsatzField(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("AnsatzField: dimension must be positive");
    comp_.assign(static_cast<size_t>(n), AnsatzPoly(n));
}

const AnsatzPoly& AnsatzField::component(int k) const {
    if (k < 1 || k > n_) throw std::out_of_range("AnsatzField: component index");
    return comp_[static_cast<size_t>(k - 1)];
}

void AnsatzField::set_component(int k, AnsatzPoly p) {
    if (k < 1 || k > n_) throw std::out_of_range("AnsatzField: component index");
    if (p.dimension() != n_) throw std::invalid_argument("AnsatzField: component dimension mismatch");
    comp_[static_cast<size_t>(k - 1)] = std::move(p);
}

AnsatzPoly AnsatzField::apply(const AnsatzPoly& p) const {
    AnsatzPoly out(n_);
    for (int j = 1; j <= n_; ++j) {
        const AnsatzPoly& vj = component(j);
        if (vj.is_zero()) continue;
        AnsatzPoly dp = p.partial(j);
        if (dp.is_zero()) continue;
        out += vj * dp;
    }
    return out;
}

AnsatzField ansatz_bracket(const AnsatzField& v, const AnsatzField& w) {
    if (v.dimension() != w.dimension())
        throw std::invalid_argument("ansatz_bracket: ambient dimension mismatch");
    const int n = v.dimension();
    AnsatzField out(n);
    for (int k = 1; k <= n; ++k)
        out.set_component(k, v.apply(w.component(k)) - w.apply(v.component(k)));
    return out;
}

int AnsatzSystem::new_unknown(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<int>(names_.size()) - 1;
}

AnsatzPoly AnsatzSystem::unknown_poly(int n, const std::vector<Monomial>& monomials,
                                      const std::string& name_prefix) {
    AnsatzPoly p(n);
    for (const auto& m : monomials) {
        const int v = new_unknown(name_prefix + "[" + m.to_string() + "]");
        p.add_term(m, LinExpr::unknown(v));
    }
    return p;
}

void AnsatzSystem::require_zero(const AnsatzPoly& p, const std::string& context) {
    for (const auto& [m, e] : p.terms())
        equations_.emplace_back(e, context + " @ " + m.to_string());
}

void AnsatzSystem::require_equal(const AnsatzPoly& lhs, const Polynomial& rhs,
                                 const std::string& context) {
    AnsatzPoly diff = lhs;
    diff -= AnsatzPoly(rhs);
    require_zero(diff, context);
}

AnsatzSystem::Solution AnsatzSystem::solve() const {
    const int nv = static_cast<int>(names_.size());
    const int ne = static_cast<int>(equations_.size());

    QMatrix aug(ne, nv + 1);
    for (int row = 0; row < ne; ++row) {
        const LinExpr& e = equations_[static_cast<size_t>(row)].first;
        for (const auto& [v, c] : e.coefficients()) aug.at(row, v) = c;
        aug.at(row, nv) = -e.constant();
    }

    const auto r = aug.rref();
    std::vector<bool> pivot(static_cast<size_t>(nv), false);
    for (size_t row = 0; row < r.pivot_cols.size(); ++row) {
        const int col = r.pivot_cols[row];
        if (col == nv) {
            // A pivot in the constant column is an unsatisfiable 0 = 1 row.
            throw InconsistentSystem("ansatz system is inconsistent (over-determined constraints)");
        }
        pivot[static_cast<size_t>(col)] = true;
    }

    Solution sol;
    sol.values.assign(static_cast<size_t>(nv), Rational(0));
    for (int v = 0; v < nv; ++v)
        if (!pivot[static_cast<size_t>(v)]) sol.free_unknowns.push_back(v);

    // Free unknowns stay zero; pivot rows then read off directly, since every
    // non-pivot entry of the row multiplies a zero.
    for (size_t row = 0; row < r.pivot_cols.size(); ++row)
        sol.values[static_cast<size_t>(r.pivot_cols[row])] = r.m.at(static_cast<int>(row), nv);

    // Exactness check: every equation must hold at the solution.
    for (const auto& [e, context] : equations_)
        if (!e.evaluate(sol.values).is_zero())
            throw InconsistentSystem("ansatz solution fails constraint: " + context);

    return sol;
}

}  // namespace carnot

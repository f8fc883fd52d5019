#include "carnot/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace carnot {

Polynomial::Polynomial(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("Polynomial: dimension must be positive");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
    Polynomial p(n);
    p.add_term(Monomial(n), c);
    return p;
}

Polynomial Polynomial::variable(int n, int j) {
    Polynomial p(n);
    p.add_term(Monomial::variable(n, j), Rational(1));
    return p;
}

Polynomial Polynomial::term(int n, const Monomial& m, const Rational& c) {
    Polynomial p(n);
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.dimension() != n_) throw std::invalid_argument("Polynomial: monomial dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same_dimension(const Polynomial& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Polynomial: ambient dimension mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial p(n_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_dimension(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_dimension(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_dimension(b);
    Polynomial p(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) p.add_term(ma.times(mb), ca * cb);
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p(n_);
    if (c.is_zero()) return p;
    for (const auto& [m, coef] : terms_) p.terms_.emplace(m, coef * c);
    return p;
}

Polynomial Polynomial::partial(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("Polynomial::partial: index out of range");
    Polynomial p(n_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent(j);
        if (e == 0) continue;
        p.add_term(m.shifted(j, -1), c * Rational(e));
    }
    return p;
}

int Polynomial::divisibility_degree(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("Polynomial::divisibility_degree: index out of range");
    if (is_zero())
        throw std::invalid_argument("Polynomial::divisibility_degree: undefined for the zero polynomial");
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent(j);
        deg = deg < 0 ? e : std::min(deg, e);
        if (deg == 0) break;
    }
    return deg;
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
    return deg;
}

std::optional<long> Polynomial::weighted_degree(const WeightVector& w) const {
    if (w.dimension() != n_) throw std::invalid_argument("Polynomial::weighted_degree: weight dimension mismatch");
    if (is_zero())
        throw std::invalid_argument("Polynomial::weighted_degree: undefined for the zero polynomial");
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
        const long d = w.weighted_degree(m);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("Polynomial::evaluate: point length mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int j = 1; j <= n_; ++j) {
            const int e = m.exponent(j);
            if (e > 0) t *= point[static_cast<size_t>(j - 1)].pow(static_cast<unsigned long>(e));
        }
        acc += t;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        const Rational a = c.abs();
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            s += a.to_string();
        } else {
            if (!(a == Rational(1))) s += a.to_string() + "*";
            s += m.to_string();
        }
    }
    return s;
}

}  // namespace carnot

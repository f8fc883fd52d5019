#include "carnot/render.hpp"

namespace carnot {

namespace {

std::string latex_monomial(const Monomial& m) {
    std::string s;
    for (int j = 1; j <= m.dimension(); ++j) {
        const int e = m.exponent(j);
        if (e == 0) continue;
        s += "x_{" + std::to_string(j) + "}";
        if (e > 1) s += "^{" + std::to_string(e) + "}";
    }
    return s;
}

// One signed term: returns the body; sign handled by the caller.
std::string latex_term(const Monomial& m, const Rational& abs_coeff) {
    const std::string ms = m.is_one() ? "" : latex_monomial(m);
    const Integer num = abs_coeff.numerator();
    const Integer den = abs_coeff.denominator();
    if (den == 1) {
        if (ms.empty()) return num.get_str();
        if (num == 1) return ms;
        return num.get_str() + " " + ms;
    }
    std::string top = num == 1 && !ms.empty() ? ms : num.get_str() + (ms.empty() ? "" : " " + ms);
    return "\\frac{" + top + "}{" + den.get_str() + "}";
}

}  // namespace

std::string to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        s += latex_term(m, c.abs());
    }
    return s;
}

std::string to_latex(const VectorField& v) {
    std::string s;
    for (int k = 1; k <= v.dimension(); ++k) {
        const Polynomial& p = v.component(k);
        if (p.is_zero()) continue;
        const std::string pd = "\\frac{\\partial}{\\partial x_{" + std::to_string(k) + "}}";
        std::string coeff;
        if (p.term_count() == 1) {
            const auto& [m, c] = *p.terms().begin();
            if (m.is_one() && c.abs() == Rational(1)) {
                // Bare +/- d/dx_k.
                if (s.empty()) s += c.sign() < 0 ? "-" : "";
                else s += c.sign() < 0 ? " - " : " + ";
                s += pd;
                continue;
            }
            if (s.empty()) s += c.sign() < 0 ? "-" : "";
            else s += c.sign() < 0 ? " - " : " + ";
            s += latex_term(m, c.abs()) + " " + pd;
            continue;
        }
        if (!s.empty()) s += " + ";
        s += "\\left(" + to_latex(p) + "\\right) " + pd;
    }
    return s.empty() ? "0" : s;
}

std::string to_latex(const Frame& f) {
    std::string s = "\\begin{align*}\n";
    for (int i = 1; i <= f.size(); ++i) {
        s += f.name(i) + " &= " + to_latex(f.field(i));
        if (i < f.size()) s += ", \\\\";
        s += "\n";
    }
    s += "\\end{align*}\n";
    return s;
}

std::string to_latex(const CarnotAlgebra& alg) {
    std::string s = "\\begin{align*}\n";
    bool first = true;
    for (const auto& [ij, combo] : alg.table()) {
        if (!first) s += ", \\\\\n";
        first = false;
        s += "[e_{" + std::to_string(ij.first) + "}, e_{" + std::to_string(ij.second) + "}] &= ";
        std::string rhs;
        for (const auto& t : combo) {
            if (!rhs.empty()) rhs += " + ";
            if (t.c == Rational(1)) rhs += "e_{" + std::to_string(t.k) + "}";
            else if (t.c == Rational(-1)) rhs += "-e_{" + std::to_string(t.k) + "}";
            else rhs += t.c.to_string() + " e_{" + std::to_string(t.k) + "}";
        }
        s += rhs.empty() ? "0" : rhs;
    }
    s += "\n\\end{align*}\n";
    return s;
}

}  // namespace carnot

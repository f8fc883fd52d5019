#ifndef CARNOT_POLYNOMIAL_HPP
#define CARNOT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "carnot/monomial.hpp"
#include "carnot/rational.hpp"

namespace carnot {

/// Sparse multivariate polynomial over Rational on a fixed ambient R^N.
///
/// Invariants: no stored coefficient is zero, every monomial has the ambient
/// dimension, and terms iterate in graded-lex order, so printing and
/// serialization are deterministic. All operations are exact.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    /// Zero polynomial on R^n.
    explicit Polynomial(int n);

    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, int j);
    static Polynomial term(int n, const Monomial& m, const Rational& c);

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of m (zero when absent).
    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact partial derivative with respect to x_j (1-based).
    Polynomial partial(int j) const;

    /// Largest e such that x_j^e divides every term. Rejects the zero
    /// polynomial, whose divisibility degree is undefined.
    int divisibility_degree(int j) const;

    int total_degree() const;

    /// Common weighted degree of all terms, or nullopt when the terms do not
    /// share one (inhomogeneous). Rejects the zero polynomial.
    std::optional<long> weighted_degree(const WeightVector& w) const;

    /// Exact evaluation at a rational point.
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Adds c * m in place; erases the slot if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    std::string to_string() const;

private:
    void check_same_dimension(const Polynomial& o) const;

    int n_;
    TermMap terms_;
};

}  // namespace carnot

#endif

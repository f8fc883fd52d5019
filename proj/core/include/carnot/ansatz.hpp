#ifndef CARNOT_ANSATZ_HPP
#define CARNOT_ANSATZ_HPP

#include <map>
#include <string>
#include <vector>

#include "carnot/polynomial.hpp"

namespace carnot {

/// Affine form c0 + sum_v c_v u_v over symbolic rational unknowns u_v.
class LinExpr {
public:
    LinExpr() = default;
    explicit LinExpr(Rational constant) : constant_(std::move(constant)) {}
    static LinExpr unknown(int var) {
        LinExpr e;
        e.coeffs_.emplace(var, Rational(1));
        return e;
    }

    const Rational& constant() const { return constant_; }
    const std::map<int, Rational>& coefficients() const { return coeffs_; }
    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return constant_.is_zero() && coeffs_.empty(); }

    LinExpr& operator+=(const LinExpr& o);
    LinExpr& operator-=(const LinExpr& o);
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
    LinExpr scaled(const Rational& c) const;

    /// Product; throws when both factors carry unknowns (the systems posed
    /// here are affine, so that would be a construction bug).
    friend LinExpr operator*(const LinExpr& a, const LinExpr& b);

    /// Value after substituting unknowns.
    Rational evaluate(const std::vector<Rational>& values) const;

private:
    Rational constant_;
    std::map<int, Rational> coeffs_;
};

/// Polynomial whose coefficients are affine forms in the unknowns.
class AnsatzPoly {
public:
    explicit AnsatzPoly(int n);
    explicit AnsatzPoly(const Polynomial& p);

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, LinExpr>& terms() const { return terms_; }

    void add_term(const Monomial& m, LinExpr e);

    AnsatzPoly& operator+=(const AnsatzPoly& o);
    AnsatzPoly& operator-=(const AnsatzPoly& o);
    friend AnsatzPoly operator+(AnsatzPoly a, const AnsatzPoly& b) { return a += b; }
    friend AnsatzPoly operator-(AnsatzPoly a, const AnsatzPoly& b) { return a -= b; }
    friend AnsatzPoly operator*(const AnsatzPoly& a, const AnsatzPoly& b);

    AnsatzPoly partial(int j) const;

    Polynomial evaluate(const std::vector<Rational>& values) const;

private:
    int n_;
    std::map<Monomial, LinExpr> terms_;
};

/// Vector field with AnsatzPoly components.
class AnsatzField {
public:
    explicit AnsatzField(int n);

    int dimension() const { return n_; }
    const AnsatzPoly& component(int k) const;
    void set_component(int k, AnsatzPoly p);

    AnsatzPoly apply(const AnsatzPoly& p) const;

private:
    int n_;
    std::vector<AnsatzPoly> comp_;
};

AnsatzField ansatz_bracket(const AnsatzField& v, const AnsatzField& w);

struct InconsistentSystem : std::runtime_error {
    explicit InconsistentSystem(const std::string& what) : std::runtime_error(what) {}
};

/// Registry of unknowns plus the affine constraints collected so far.
/// solve() runs exact elimination; unknowns that end up free (in particular
/// those appearing in no constraint) are normalized to zero.
class AnsatzSystem {
public:
    int new_unknown(std::string name);

    /// Unknown polynomial spanned by the given monomials; registers one
    /// unknown per monomial, named name_prefix[mono].
    AnsatzPoly unknown_poly(int n, const std::vector<Monomial>& monomials,
                            const std::string& name_prefix);

    /// Constrains every coefficient of p to vanish.
    void require_zero(const AnsatzPoly& p, const std::string& context);
    void require_equal(const AnsatzPoly& lhs, const Polynomial& rhs, const std::string& context);

    size_t unknown_count() const { return names_.size(); }
    size_t equation_count() const { return equations_.size(); }
    const std::string& unknown_name(int v) const { return names_.at(static_cast<size_t>(v)); }

    struct Solution {
        std::vector<Rational> values;
        std::vector<int> free_unknowns;
    };
    Solution solve() const;

private:
    std::vector<std::string> names_;
    std::vector<std::pair<LinExpr, std::string>> equations_;  // expr == 0
};

}  // namespace carnot

#endif

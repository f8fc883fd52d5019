#ifndef CARNOT_VECTOR_FIELD_HPP
#define CARNOT_VECTOR_FIELD_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "carnot/polynomial.hpp"

namespace carnot {

/// Polynomial vector field on R^N: component k is the coefficient of the
/// coordinate derivation d/dx_k. All operations are exact and side-effect
/// free; values are safe to share across threads once built.
class VectorField {
public:
    /// Zero field on R^n.
    explicit VectorField(int n);

    explicit VectorField(std::vector<Polynomial> components);

    /// d/dx_k.
    static VectorField coordinate(int n, int k);

    int dimension() const { return n_; }
    const Polynomial& component(int k) const;  // 1-based
    void set_component(int k, Polynomial p);
    void add_to_component(int k, const Polynomial& p);

    bool is_zero() const;

    /// Derivation of p along this field: sum_j v_j dp/dx_j.
    Polynomial apply(const Polynomial& p) const;

    /// Exact componentwise evaluation.
    std::vector<Rational> evaluate(const std::vector<Rational>& point) const;

    VectorField operator-() const;
    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    VectorField scaled(const Rational& c) const;
    VectorField scaled(const Polynomial& p) const;

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.n_ == b.n_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    std::string to_string() const;

    /// Sparse coefficient vector keyed by (component, monomial); the exact
    /// rank/span machinery works on these.
    using FlatKey = std::pair<int, Monomial>;
    std::map<FlatKey, Rational> flattened() const;

private:
    void check_same_dimension(const VectorField& o) const;

    int n_;
    std::vector<Polynomial> comp_;
};

/// [v,w]_k = sum_j v_j dw_k/dx_j - w_j dv_k/dx_j, computed symbolically.
VectorField lie_bracket(const VectorField& v, const VectorField& w);

/// Outcome of a weight-homogeneity check, with the offending component and
/// term when it fails.
struct HomogeneityWitness {
    bool homogeneous = true;
    int component = 0;
    std::string detail;
};

/// A field has weight w when component k is weight-homogeneous of weighted
/// degree weight(k) - w for every nonzero component k.
HomogeneityWitness is_weight_homogeneous(const VectorField& v, const WeightVector& w,
                                         long expected_weight);

/// Ordered tuple of vector fields with display names, all sharing one ambient
/// dimension.
class Frame {
public:
    Frame(std::vector<VectorField> fields, std::vector<std::string> names);

    int dimension() const;
    int size() const { return static_cast<int>(fields_.size()); }
    const VectorField& field(int i) const;  // 1-based
    VectorField& field_mutable(int i);
    const std::string& name(int i) const;
    const std::vector<VectorField>& fields() const { return fields_; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<VectorField> fields_;
    std::vector<std::string> names_;
};

}  // namespace carnot

#endif

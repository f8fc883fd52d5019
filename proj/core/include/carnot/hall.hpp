#ifndef CARNOT_HALL_HPP
#define CARNOT_HALL_HPP

#include <string>
#include <vector>

#include "carnot/monomial.hpp"

namespace carnot {

/// One Hall basis element: either a generator (degree 1) or a bracket
/// [H_left, H_right] of earlier elements. Indices are 1-based positions in
/// Hall order; all degree-k elements precede all degree-(k+1) elements.
struct HallElement {
    int index = 0;
    int degree = 1;
    int generator = 0;  // > 0 for leaves
    int left = 0;       // Hall indices of the factors, 0 for leaves
    int right = 0;

    bool is_generator() const { return generator > 0; }
};

/// The Hall basis of the free Lie algebra on d generators, truncated at
/// bracket length r (M. Hall, Proc. AMS 1 (1950) 575-581).
///
/// Membership: [E,F] is a basis element iff E > F and, when E = [G,K],
/// F >= K, with comparisons in the Hall order. Within a degree, elements are
/// enumerated left-to-right over ordered pairs (E,F), E ascending then F
/// ascending, so indices are deterministic. The degree-i slice has exactly
/// witt_dimension(d,i) elements.
class HallBasis {
public:
    HallBasis(int num_generators, int step);

    int num_generators() const { return d_; }
    int step() const { return r_; }
    int size() const { return static_cast<int>(elems_.size()); }

    const HallElement& element(int hall_index) const;  // 1-based
    int degree_of(int hall_index) const { return element(hall_index).degree; }

    /// Hall indices of all elements of the given degree, in order.
    std::vector<int> slice(int degree) const;

    /// Layer (= bracket degree) per basis index, 1..r.
    std::vector<int> layers() const;

    /// Weight vector assigning each coordinate the layer of its element.
    WeightVector weights() const;

    /// Nested bracket text, e.g. "[[2,1],1]"; a bare generator prints as "2".
    std::string to_string(int hall_index) const;

    /// Same tree with X_i leaves, e.g. "[[X_{2},X_{1}],X_{1}]".
    std::string to_latex(int hall_index) const;

private:
    bool hall_pair(int e, int f) const;

    int d_, r_;
    std::vector<HallElement> elems_;
};

/// Convenience spelling matching the math: the basis of degree <= r.
inline HallBasis hall_basis(int d, int r) { return HallBasis(d, r); }

}  // namespace carnot

#endif

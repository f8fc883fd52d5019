#ifndef CARNOT_CARNOT_ALGEBRA_HPP
#define CARNOT_CARNOT_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "carnot/rational_matrix.hpp"
#include "carnot/report.hpp"
#include "carnot/vector_field.hpp"

namespace carnot {

/// One summand c * e_k of a bracket expansion.
struct BracketTerm {
    int k = 0;
    Rational c;

    friend bool operator==(const BracketTerm& a, const BracketTerm& b) {
        return a.k == b.k && a.c == b.c;
    }
};

/// Sparse combination of basis elements, sorted by index, no zero terms.
using SparseVec = std::vector<BracketTerm>;

/// Structure constants and layer decomposition of a graded nilpotent Lie
/// algebra. Only pairs i<j are stored, so antisymmetry is structural; the
/// axioms themselves (grading, Jacobi, generation by the first layer) are
/// checked by verify_carnot_axioms, not assumed.
class CarnotAlgebra {
public:
    CarnotAlgebra(std::vector<int> layers, std::map<std::pair<int, int>, SparseVec> table);

    int dimension() const { return n_; }
    int num_generators() const { return d_; }
    int step() const { return r_; }
    int layer_of(int i) const;  // 1-based basis index
    const std::vector<int>& layers() const { return layers_; }

    /// [e_i, e_j] for any i, j (handles sign and the diagonal).
    SparseVec bracket(int i, int j) const;

    /// Stored nonzero pairs (i<j), in (i,j) order.
    const std::map<std::pair<int, int>, SparseVec>& table() const { return table_; }

    friend bool operator==(const CarnotAlgebra& a, const CarnotAlgebra& b) {
        return a.layers_ == b.layers_ && a.table_ == b.table_;
    }

private:
    int n_, d_, r_;
    std::vector<int> layers_;
    std::map<std::pair<int, int>, SparseVec> table_;
};

/// Thrown when a frame bracket is not a constant-coefficient combination of
/// the frame fields.
struct FrameExpansionError : std::runtime_error {
    FrameExpansionError(int i, int j, std::string residual_text)
        : std::runtime_error("bracket of frame fields " + std::to_string(i) + "," +
                             std::to_string(j) +
                             " is not a constant combination of the frame; residual: " +
                             residual_text),
          i(i), j(j), residual(std::move(residual_text)) {}
    int i, j;
    std::string residual;
};

/// Expands every pairwise Lie bracket of the frame in the frame itself,
/// solving for constant rational coefficients and checking the residual is
/// identically zero. layers assigns each frame field its layer.
CarnotAlgebra structure_constants_from_frame(const Frame& frame, const std::vector<int>& layers);

/// Checks, over the stored constants: layer compatibility [L_i,L_j] in
/// L_{i+j} (zero beyond step r), the Jacobi identity on all triples, and the
/// generation property L_{i+1} = [L_1, L_i] as an exact span equality.
VerificationReport verify_carnot_axioms(const CarnotAlgebra& alg);

/// Flag ranks at a point: starts from the span of the generator fields and
/// repeatedly adds brackets with the generators, evaluating at the point and
/// taking exact ranks. Stops when the field module stabilizes; returns the
/// rank sequence.
std::vector<int> growth_vector_at_point(const Frame& frame, const std::vector<int>& generators,
                                        const std::vector<Rational>& point);

}  // namespace carnot

#endif

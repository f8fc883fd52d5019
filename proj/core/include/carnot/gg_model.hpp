#ifndef CARNOT_GG_MODEL_HPP
#define CARNOT_GG_MODEL_HPP

#include <utility>
#include <vector>

#include "carnot/hall.hpp"
#include "carnot/report.hpp"
#include "carnot/vector_field.hpp"

namespace carnot {

/// Coefficient monomials P_{2,k} of the Grayson-Grossman generator field H_2
/// for two generators, indexed by Hall index, together with the Hall basis
/// that carries the descent relation k -> (i,j) with H_k = [H_i, H_j].
///
/// Seed: P_{2,2} = 1. Descent step: for H_k = [H_i, H_j] of degree p,
///
///   P_{2,k} = (-1)^(p-1) * x_j * P_{2,i} / (deg_j P_{2,i} + 1),
///
/// where deg_j P is the highest power of x_j dividing P. The per-step sign
/// amounts to a diagonal coordinate flip and is the convention under which
/// the step-4 fields come out in their reference form (see gg_frame).
class GGMonomialTable {
public:
    explicit GGMonomialTable(int step);

    const HallBasis& basis() const { return basis_; }
    int dimension() const { return basis_.size(); }

    /// P_{2,k}; defined for k = 2 and every bracket element.
    const Polynomial& monomial(int hall_index) const;

    /// Descent (i, j) with H_k = [H_i, H_j]; {0,0} for generators.
    std::pair<int, int> descent(int hall_index) const;

    /// True when H_k lies below H_2 in the descent order (k = 2 or any
    /// bracket element, since every bracket bottoms out at [H_2, H_1]).
    bool descends_from_2(int hall_index) const;

private:
    HallBasis basis_;
    std::vector<Polynomial> p_;  // by hall index - 1; zero polynomial where undefined
};

GGMonomialTable gg_monomials(int r);

/// The two generator fields H_1 = d/dx_1 and
/// H_2 = d/dx_2 + sum_{k > 2} P_{2,k} d/dx_k on R^N, N = dim of the free
/// nilpotent algebra of step r on two generators. Both are homogeneous of
/// weight one for the Hall layer grading, and their Lie closure is the whole
/// algebra (Grayson & Grossman, "Models for free nilpotent Lie algebras").
std::pair<VectorField, VectorField> gg_generators(int r);

/// Full frame H_1..H_N obtained by bracketing along the Hall descent:
/// H_k = [H_i, H_j]. Names are "H1".."HN".
Frame gg_frame(int r);

/// Checks the model theorem at step r over the given frame's first two
/// fields: the closure of (H_1, H_2) under iterated brackets has exact rank
/// N over constant coefficients, every bracket of total degree r+1 vanishes
/// identically, and H_1, H_2 are weight-one homogeneous.
VerificationReport verify_free_nilpotent(const Frame& frame, int r);

}  // namespace carnot

#endif

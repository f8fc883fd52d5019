#ifndef CARNOT_SYM258_HPP
#define CARNOT_SYM258_HPP

#include <map>
#include <utility>

#include "carnot/carnot_algebra.hpp"
#include "carnot/report.hpp"
#include "carnot/vector_field.hpp"

namespace carnot {

/// The rotationally symmetric polynomial vector-field model of the rank-2
/// step-4 free nilpotent (Carnot) Lie algebra, growth vector (2,3,5,8):
/// eight fields X1..X8 on R^8 with the multiplication table
///   [X1,X2]=X3, [X1,X3]=X4, [X2,X3]=X5,
///   [X1,X4]=X6, [X1,X5]=[X2,X4]=X7, [X2,X5]=X8,
/// all other basis brackets zero. Coordinates carry weights (1,1,2,3,3,4,4,4).
struct SymmetricModel {
    Frame frame;
    WeightVector weights;
};

/// Infinitesimal rotation symmetry X0 of the structure spanned by {X1, X2}:
///   [X0,X1]=X2, [X0,X2]=-X1, [X0,X3]=0, [X0,X4]=X5, [X0,X5]=-X4,
///   [X0,X6]=2*X7, [X0,X7]=X8-X6, [X0,X8]=-2*X7.
struct SymmetryField {
    VectorField field;
};

/// The weights (1,1,2,3,3,4,4,4).
WeightVector weights_258();

/// The abstract (2,3,5,8) multiplication table over basis indices
/// (orientation of the symmetric model).
CarnotAlgebra table_258();

/// The table satisfied by the step-4 Grayson-Grossman frame H1..H8; it is the
/// same algebra under the diagonal sign change H_i -> +/- X_i.
CarnotAlgebra table_gg4();

SymmetricModel symmetric_model();
SymmetryField symmetry_field();

/// The step-3 restriction, growth vector (2,3,5): five fields X1..X5 on R^5
/// satisfying the first two rows of the table. Starting point of the
/// extension construction.
Frame symmetric_model_235();

/// Rotation symmetry of the step-3 model on R^5.
VectorField symmetry_field_235();

/// Verifies all 28 basis bracket pairs against the table, weight-one
/// homogeneity of X1 and X2, and the growth vector (2,3,5,8) at the origin.
VerificationReport verify_symmetric_model();
VerificationReport verify_symmetric_model_on(const SymmetricModel& model);

/// Verifies the eight bracket relations of the symmetry field exactly.
VerificationReport verify_symmetry();
VerificationReport verify_symmetry_on(const SymmetricModel& model, const SymmetryField& sym);

/// Outcome of the rotation-symmetry test: [v,F1] = c*F2 and [v,F2] = -c*F1
/// for one rational constant c.
struct SymmetryCheck {
    bool ok = false;
    Rational constant;
    std::string witness;
};
SymmetryCheck is_infinitesimal_symmetry(const VectorField& v, const VectorField& f1,
                                        const VectorField& f2);

/// Result of the constructive extension of the step-3 model to step 4.
/// coefficients maps (i, j) with i in 1..5, j in 6..8 to the solved
/// coefficient a_i^j of d/dx_j in X_i; determinant is the independence
/// determinant of the top-layer data (the 3x3 matrix of second partials of
/// a_3^6, a_3^7, a_3^8), normalized to 1 by the construction.
struct ModelAnsatzResult {
    SymmetricModel model;
    std::map<std::pair<int, int>, Polynomial> coefficients;
    Rational determinant;
};

/// Poses X1..X5 as the lifted base fields plus unknown weight-correct
/// coefficients toward d/dx_6..d/dx_8, X6..X8 as coordinate fields, imposes
/// the full multiplication table plus the symmetric normalizations
///   a_3^6 = x1^2/2, a_3^7 = x1*x2, a_3^8 = x2^2/2,
///   a_1^6 = 0, a_2^8 = 0, a_1^7 = -x1*x2^2/4, a_2^7 = x1^2*x2/4,
/// solves the affine system exactly (remaining free coefficients are
/// normalized to zero) and returns the step-4 model.
ModelAnsatzResult extend_model_ansatz(const Frame& base);

/// Result of continuing the step-3 rotation symmetry to step 4: the solved
/// field together with its d/dx_6, d/dx_7, d/dx_8 components.
struct SymmetryAnsatzResult {
    SymmetryField field;
    Polynomial p, q, r;
};

/// Poses the three top components of the symmetry as unknown polynomials of
/// weighted degree <= 4, imposes the eight bracket relations against the
/// symmetric model, solves exactly, and normalizes the free additive
/// constants so the components vanish at the origin.
SymmetryAnsatzResult continue_symmetry_ansatz(const VectorField& base_symmetry);

}  // namespace carnot

#endif

#ifndef CARNOT_RENDER_HPP
#define CARNOT_RENDER_HPP

#include <string>

#include "carnot/carnot_algebra.hpp"
#include "carnot/hall.hpp"
#include "carnot/vector_field.hpp"

namespace carnot {

/// LaTeX for a polynomial in canonical term order; fractions render with the
/// monomial in the numerator, e.g. \frac{x_1^{3}}{6}.
std::string to_latex(const Polynomial& p);

/// LaTeX sum of p_k(x) \frac{\partial}{\partial x_k} over nonzero components.
std::string to_latex(const VectorField& v);

/// One align* block with a line per frame field.
std::string to_latex(const Frame& f);

std::string to_latex(const CarnotAlgebra& alg);

}  // namespace carnot

#endif

#ifndef CARNOT_WITT_HPP
#define CARNOT_WITT_HPP

#include "carnot/rational.hpp"

namespace carnot {

/// Dimension l_d(i) of the degree-i homogeneous component of the free Lie
/// algebra on d generators, from the divisor-sum recursion
/// i*l_d(i) = d^i - sum_{j|i, j<i} j*l_d(j). Exact for any d, i.
Integer witt_dimension(int d, int i);

/// dim of the free nilpotent Lie algebra of step r: sum_{i<=r} l_d(i).
Integer cumulative_dimension(int d, int r);

}  // namespace carnot

#endif

#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

/// Basis of {v : Mv = 0}.
///
/// Rows are cleared to integers and reduced by fraction-free (Bareiss)
/// elimination. One basis vector is returned per free column f, in
/// increasing order of f: it has v_f = 1, zero at every other free column,
/// and the pivot coordinates solved by back-substitution.
std::vector<Vector> kernel_basis(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact determinant via fraction-free elimination. Throws ShapeError on a
/// non-square input.
Rational det(const Matrix& m);

/// Gauss-Jordan inverse. Throws InvertibilityError when m is singular.
Matrix inverse(const Matrix& m);

}  // namespace leibniz

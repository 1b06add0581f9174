#pragma once

namespace windlab {

/// The reflections x<->y, x->x^-1, y->y^-1.  They act on words by letter
/// substitution and on Laurent polynomials by coordinate substitution; the
/// three together generate the dihedral symmetry group of the grid.
enum class Symmetry { swap_xy, invert_x, invert_y };

}  // namespace windlab

#pragma once

#include <array>

#include "sl2rep/representation.hpp"

namespace sl2rep {

// <a,b | a^2 b^2 a^2 B a B, a^2 b^2 A b A b^2> (H_1 = Z/5 + Z/5).
const Presentation& weeks_presentation();

// Roots of x^6 + 2x^4 - x^3 + 2x^2 + 1, companion-matrix eigenvalues polished
// by Newton, sorted lexicographically by (Re, Im). Roots 0-3 lie off the unit
// circle (the discrete faithful representation and its conjugates); roots 4-5
// lie on it.
const std::array<cplx, 6>& weeks_sextic_roots();

// rho(a) = (x 1 / 0 1/x), rho(b) = (x 0 / r 1/x) with r = 2 - x - 1/x for the
// selected root; refined to relator residual < 1e-10.
Representation weeks_geometric(int root_index);

}  // namespace sl2rep

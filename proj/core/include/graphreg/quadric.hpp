#pragma once

#include "graphreg/incidence.hpp"

namespace graphreg {

// Classical generalized quadrangle of order (q, q^2) for q in {2,3,4}:
// projective zeros of the elliptic form x0x1 + x2x3 + f(x4,x5) over GF(q)^6,
// with f an irreducible binary quadratic, and the totally singular lines.
IncidenceStructure elliptic_quadric_gq(int q);

// Number of projective points of the quadric (diagnostic; equals the point
// count of elliptic_quadric_gq).
int elliptic_quadric_point_count(int q);

}  // namespace graphreg

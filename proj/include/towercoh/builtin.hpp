#pragma once

#include "towercoh/delta_complex.hpp"
#include "towercoh/local_system.hpp"

namespace towercoh {

// One vertex, one loop.
DeltaComplex make_circle_complex();
// One vertex, edges a, b, d and two triangles of the square-with-diagonal.
DeltaComplex make_torus_complex();
// Two vertices (one per boundary circle), loops a, b, vertical edge m,
// diagonal d, two triangles.
DeltaComplex make_cylinder_complex();
Subcomplex cylinder_boundary(const DeltaComplex& cylinder);
// Cube quotient with shear identification in the first coordinate: one
// vertex, 7 edges, 12 triangles, 6 tetrahedra.
DeltaComplex make_heisenberg_complex();
// Strict simplicial helpers.
DeltaComplex make_solid_triangle();
DeltaComplex make_hollow_triangle();

// Circle over a rank-1 tower, loop labeled by the given residue.
FlatDescriptor make_circle_descriptor(long long p, int depth, long long label);
// Torus over a rank-2 tower with a and b labeled by coordinate pairs
// (the diagonal gets the product).  (1,0),(0,1) winds fully; (1,0),(0,0)
// leaves the b direction untwisted.
FlatDescriptor make_torus_descriptor(long long p, int depth, std::pair<long long, long long> a,
                                     std::pair<long long, long long> b);
// Torus over a rank-1 tower, both loops mapped to scalars.
FlatDescriptor make_torus_scalar_descriptor(long long p, int depth, long long a, long long b);
// Cylinder over a rank-1 tower: both boundary loops wind once, rungs are
// untwisted.
FlatDescriptor make_cylinder_descriptor(long long p, int depth);
// Heisenberg nilmanifold: edge labels are coordinate differences of cube
// vertices under the group law, transported through the quotient.
FlatDescriptor make_heisenberg_descriptor(long long p, int depth);

}  // namespace towercoh

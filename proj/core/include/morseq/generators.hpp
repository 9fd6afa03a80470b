#ifndef MORSEQ_GENERATORS_HPP
#define MORSEQ_GENERATORS_HPP

#include "morseq/simplex_pool.hpp"

namespace morseq {

/// Closure of one (n-1)-simplex on vertex ids 0..n-1.
SimplexPool full_simplex(int n_vertices);

/// The same complex without its top cell (a combinatorial (n-2)-sphere).
SimplexPool simplex_boundary(int n_vertices);

/// A rows x cols grid of unit squares, each split into two triangles,
/// closed under faces. Vertex ids are row-major.
SimplexPool grid_complex(int rows, int cols);

/// The 7-vertex triangulation of the torus (21 edges, 14 triangles).
SimplexPool minimal_torus();

} // namespace morseq

#endif // MORSEQ_GENERATORS_HPP

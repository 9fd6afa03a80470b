#include "morseq/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace morseq {

SimplexPool full_simplex(int n_vertices)
{
    if (n_vertices < 1)
        throw std::domain_error("full_simplex: need at least one vertex");
    std::vector<Vertex> verts(n_vertices);
    std::iota(verts.begin(), verts.end(), 0);
    return closure(SimplexPool::from_simplexes({Simplex(std::move(verts))}));
}

SimplexPool simplex_boundary(int n_vertices)
{
    SimplexPool full = full_simplex(n_vertices);
    std::vector<Simplex> faces;
    for (const Simplex& s : full.simplexes())
        if (s.dim() < n_vertices - 1)
            faces.push_back(s);
    return SimplexPool::from_simplexes(std::move(faces));
}

SimplexPool grid_complex(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw std::domain_error("grid_complex: need at least one cell");
    const int stride = cols + 1;
    auto id = [&](int r, int c) { return static_cast<Vertex>(r * stride + c); };

    std::vector<Simplex> tris;
    tris.reserve(2 * rows * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            Vertex a = id(r, c), b = id(r, c + 1);
            Vertex d = id(r + 1, c), e = id(r + 1, c + 1);
            tris.push_back(Simplex{a, b, d});
            tris.push_back(Simplex{b, d, e});
        }
    }
    return closure(SimplexPool::from_simplexes(std::move(tris)));
}

SimplexPool minimal_torus()
{
    std::vector<Simplex> tris;
    for (Vertex i = 0; i < 7; ++i) {
        tris.push_back(Simplex{i, static_cast<Vertex>((i + 1) % 7),
                               static_cast<Vertex>((i + 3) % 7)});
        tris.push_back(Simplex{i, static_cast<Vertex>((i + 2) % 7),
                               static_cast<Vertex>((i + 3) % 7)});
    }
    return closure(SimplexPool::from_simplexes(std::move(tris)));
}

} // namespace morseq

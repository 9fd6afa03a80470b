#ifndef MORSEQ_TESTS_FIXTURES_HPP
#define MORSEQ_TESTS_FIXTURES_HPP

#include "morseq/generators.hpp"
#include "morseq/morse_sequence.hpp"
#include "morseq/simplex_pool.hpp"
#include "morseq/stacks.hpp"

namespace testsupport {

/// A 3x3-vertex triangulated square (vertex ids row-major):
///
///     6 7 8
///     3 4 5
///     0 1 2
///
/// with two weight basins, one around vertex 0 and one around vertex 8,
/// separated by a ridge through the center.
inline morseq::SimplexPool two_basin_square()
{
    return morseq::grid_complex(2, 2);
}

inline morseq::VertexMap two_basin_values()
{
    return morseq::VertexMap::from_pairs({
        {0, 0}, // basin a
        {8, 1}, // basin b
        {1, 2},
        {3, 3},
        {5, 4},
        {7, 5},
        {2, 6},
        {6, 7},
        {4, 8}, // ridge top
    });
}

inline morseq::Stack two_basin_stack(const morseq::SimplexPool& k)
{
    return morseq::induced_stack(two_basin_values(), k);
}

/// The classic cyclic pairing around a square's edge loop; a valid-looking
/// field that no Morse sequence can produce.
inline morseq::GradientVectorField cyclic_pairing_fixture()
{
    using morseq::Simplex;
    morseq::GradientVectorField v;
    v.pairs.emplace_back(Simplex{0}, Simplex{0, 1});
    v.pairs.emplace_back(Simplex{1}, Simplex{1, 2});
    v.pairs.emplace_back(Simplex{2}, Simplex{2, 3});
    v.pairs.emplace_back(Simplex{3}, Simplex{0, 3});
    return v;
}

inline morseq::SimplexPool square_loop()
{
    using morseq::Simplex;
    return morseq::closure(morseq::SimplexPool::from_simplexes(
        {Simplex{0, 1}, Simplex{1, 2}, Simplex{2, 3}, Simplex{0, 3}}));
}

} // namespace testsupport

#endif // MORSEQ_TESTS_FIXTURES_HPP

#include <doctest.h>

#include <random>

#include "morseq/generators.hpp"
#include "morseq/simplex_pool.hpp"
#include "support/random_complex.hpp"

using namespace morseq;

namespace {

SimplexPool pool_of(std::vector<Simplex> faces)
{
    return SimplexPool::from_simplexes(std::move(faces));
}

std::vector<Simplex> sorted(std::vector<Simplex> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("simplex canonicalization and invariants")
{
    Simplex s({3, 1, 2});
    CHECK(s.vertices() == std::vector<Vertex>{1, 2, 3});
    CHECK(s.dim() == 2);
    CHECK(s == Simplex{1, 2, 3});

    CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), std::domain_error);
    CHECK_THROWS_AS((Simplex{1, 1}), std::domain_error);
    CHECK_THROWS_AS((Simplex{-1, 2}), std::domain_error);

    CHECK(Simplex{1, 2}.has_face(Simplex{2}));
    CHECK(Simplex{1}.proper_face_of(Simplex{1, 2}));
    CHECK_FALSE(Simplex{1, 2}.proper_face_of(Simplex{1, 2}));
    CHECK(sorted(Simplex{1, 2, 3}.facets()) ==
          std::vector<Simplex>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("pool iteration order is by dimension then vertex sequence")
{
    SimplexPool p = pool_of({{2, 3}, {1}, {1, 2, 3}, {3}, {1, 2}});
    std::vector<Simplex> expect{{1}, {3}, {1, 2}, {2, 3}, {1, 2, 3}};
    CHECK(p.simplexes() == expect);
    CHECK(p.dimension() == 2);
    CHECK(p.index_of(Simplex{3}) == 1);
    CHECK(p.index_of(Simplex{9}) == kNoIndex);

    SimplexPool empty;
    CHECK(empty.dimension() == -1);
    CHECK(empty.size() == 0);
}

TEST_CASE("boundary on pools")
{
    SimplexPool full_edge = pool_of({{1}, {2}, {1, 2}});
    CHECK(boundary(Simplex{1, 2}, full_edge) ==
          std::vector<Simplex>{{1}, {2}});
    CHECK(boundary(Simplex{1}, full_edge).empty());
    CHECK_THROWS_AS(boundary(Simplex{7}, full_edge), std::domain_error);

    // Restriction to the pool: enumerate codimension-1 subsets and filter
    // by membership, independently of the adjacency tables.
    SimplexPool partial = pool_of({{1, 2}, {1, 2, 3}});
    std::vector<Simplex> expected;
    for (const Simplex& f : Simplex{1, 2, 3}.facets())
        if (partial.contains(f))
            expected.push_back(f);
    CHECK(expected == std::vector<Simplex>{{1, 2}});
    CHECK(boundary(Simplex{1, 2, 3}, partial) == expected);
}

TEST_CASE("coboundary lives in the closure")
{
    SimplexPool full_edge = pool_of({{1}, {2}, {1, 2}});
    CHECK(coboundary(Simplex{1}, full_edge) == std::vector<Simplex>{{1, 2}});

    SimplexPool tetra = full_simplex(4);
    // spec-free oracle: supersets of cardinality+1 inside the pool
    Simplex edge{0, 1};
    std::vector<Simplex> expected;
    for (const Simplex& s : tetra.simplexes())
        if (s.card() == edge.card() + 1 && s.has_face(edge))
            expected.push_back(s);
    CHECK(coboundary(edge, tetra) == expected);
    CHECK(expected == std::vector<Simplex>{{0, 1, 2}, {0, 1, 3}});

    // facet of the complex
    CHECK(coboundary(Simplex{0, 1, 2, 3}, tetra).empty());

    // non-cosimplicial pool: cofaces exist only in the closure
    SimplexPool gap = pool_of({{1}, {1, 2, 3}});
    CHECK(coboundary(Simplex{1}, gap) ==
          std::vector<Simplex>{{1, 2}, {1, 3}});
}

TEST_CASE("closure and underline")
{
    CHECK(closure(pool_of({{1, 2}})) == pool_of({{1}, {2}, {1, 2}}));
    CHECK(closure(SimplexPool()) == SimplexPool());
    CHECK(closure(pool_of({{1, 2, 3}})).size() == 7);

    CHECK(underline(pool_of({{1, 2}})) == pool_of({{1}, {2}}));
    CHECK(underline(pool_of({{1, 2}, {1, 2, 3}})) ==
          pool_of({{1}, {2}, {3}, {1, 3}, {2, 3}}));
    // a complex has empty underline
    CHECK(underline(full_simplex(3)).empty());
}

TEST_CASE("simplicial and cosimplicial predicates")
{
    CHECK(is_simplicial(pool_of({{1}, {2}, {1, 2}})));
    CHECK_FALSE(is_simplicial(pool_of({{1, 2}})));
    CHECK(is_simplicial(SimplexPool()));

    CHECK(is_cosimplicial(full_simplex(3)));
    CHECK_FALSE(is_cosimplicial(pool_of({{1}, {1, 2, 3}})));
    CHECK(is_cosimplicial(pool_of({{1, 2}, {1, 2, 3}})));
}

TEST_CASE("random pools: predicate equivalence and closure laws")
{
    std::mt19937 rng(20240901);
    SimplexPool five = full_simplex(6); // faces of a 5-simplex
    std::bernoulli_distribution keep(0.5);

    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Simplex> faces;
        for (const Simplex& s : five.simplexes())
            if (keep(rng))
                faces.push_back(s);
        SimplexPool pool = pool_of(std::move(faces));

        // the direct betweenness check agrees with the underline route
        CHECK(is_cosimplicial(pool) == is_simplicial(underline(pool)));

        // closure is idempotent and contains the pool
        SimplexPool closed = closure(pool);
        CHECK(closure(closed) == closed);
        for (const Simplex& s : pool.simplexes())
            CHECK(closed.contains(s));

        for (Index i = 0; i < pool.size(); ++i) {
            const Simplex& nu = pool.at(i);
            for (const Simplex& mu : boundary(nu, pool)) {
                CHECK(pool.contains(mu));
                CHECK(mu.dim() == nu.dim() - 1);
            }
        }
    }
}

TEST_CASE("cosimplicial pools: coboundary containment and adjointness")
{
    std::mt19937 rng(20240915);
    int nonempty = 0;
    for (int trial = 0; trial < 100; ++trial) {
        SimplexPool pool = testsupport::random_cosimplicial(rng, 6).s;
        REQUIRE(is_cosimplicial(pool));
        if (!pool.empty())
            ++nonempty;

        for (Index i = 0; i < pool.size(); ++i) {
            const Simplex& nu = pool.at(i);
            // coboundary stays inside a cosimplicial pool, and the two
            // operators are adjoint
            for (const Simplex& tau : coboundary(nu, pool)) {
                CHECK(pool.contains(tau));
                std::vector<Simplex> back = boundary(tau, pool);
                CHECK(std::find(back.begin(), back.end(), nu) != back.end());
            }
            for (const Simplex& mu : boundary(nu, pool)) {
                std::vector<Simplex> up = coboundary(mu, pool);
                CHECK(std::find(up.begin(), up.end(), nu) != up.end());
            }
        }
    }
    CHECK(nonempty > 0);
}

TEST_CASE("pool adjacency matches the set-level operators")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        SimplexPool k = testsupport::random_complex(rng, 6);
        for (Index i = 0; i < k.size(); ++i) {
            std::vector<Simplex> via_adj;
            for (Index j : k.faces_of(i))
                via_adj.push_back(k.at(j));
            CHECK(via_adj == boundary(k.at(i), k));

            std::vector<Simplex> cob_adj;
            for (Index j : k.cofaces_of(i))
                cob_adj.push_back(k.at(j));
            CHECK(cob_adj == coboundary(k.at(i), k));
        }
    }
}

TEST_CASE("euler characteristic")
{
    CHECK(euler_characteristic(full_simplex(3)) == 1);
    CHECK(euler_characteristic(simplex_boundary(4)) == 2); // 2-sphere
    CHECK(euler_characteristic(minimal_torus()) == 0);
    CHECK(euler_characteristic(SimplexPool()) == 0);
}

TEST_CASE("generators have the expected shape")
{
    SimplexPool g = grid_complex(2, 2);
    CHECK(g.counts_by_dim() == std::vector<std::size_t>{9, 16, 8});
    CHECK(is_simplicial(g));

    SimplexPool t = minimal_torus();
    CHECK(t.counts_by_dim() == std::vector<std::size_t>{7, 21, 14});
    CHECK(is_simplicial(t));
}

#include <doctest.h>

#include <random>

#include "morseq/generators.hpp"
#include "morseq/homology_oracle.hpp"
#include "morseq/morse_complex.hpp"
#include "morseq/schedulers.hpp"
#include "support/random_complex.hpp"

using namespace morseq;

namespace {

SimplexPool pool_of(std::vector<Simplex> faces)
{
    return SimplexPool::from_simplexes(std::move(faces));
}

std::vector<Simplex> reference_cells(const MorseReference& ref,
                                     const SimplexPool& k, const Simplex& s)
{
    std::vector<Simplex> out;
    for (Index i : ref.cells[k.index_of(s)])
        out.push_back(k.at(i));
    return out;
}

} // namespace

TEST_CASE("reference of a single critical vertex")
{
    SimplexPool point = pool_of({{1}});
    MorseSequence seq{SimplexPool(), {MorseItem::critical(Simplex{1})}};
    MorseReference ref = morse_reference(seq, point);
    CHECK(reference_cells(ref, point, Simplex{1}) ==
          std::vector<Simplex>{{1}});
}

TEST_CASE("reference along a path graph flows to the first vertex")
{
    SimplexPool path = closure(pool_of({{1, 2}, {2, 3}}));
    VertexMap f = VertexMap::from_pairs({{1, 0}, {2, 1}, {3, 2}});
    MorseSequence seq = max_lower_star(path, f);
    REQUIRE(critical_vector(seq) == std::vector<std::size_t>{1, 0});

    MorseReference ref = morse_reference(seq, path);
    CHECK(reference_cells(ref, path, Simplex{3}) == std::vector<Simplex>{{1}});
    CHECK(reference_cells(ref, path, Simplex{2}) == std::vector<Simplex>{{1}});
    // every critical cell references itself
    CHECK(reference_cells(ref, path, Simplex{1}) == std::vector<Simplex>{{1}});
}

TEST_CASE("circle: the critical edge has empty boundary")
{
    SimplexPool circle = simplex_boundary(3);
    Stack ones = Stack::constant(circle);
    MorseSequence seq = max_f(circle, ones);
    REQUIRE(critical_vector(seq) == std::vector<std::size_t>{1, 1});

    MorseBoundary mb = morse_boundary(seq, circle);
    REQUIRE(mb.criticals.size() == 2);
    for (const std::vector<std::size_t>& row : mb.boundary)
        CHECK(row.empty());

    CHECK(betti_mod2_from_morse(seq, circle) ==
          std::vector<std::size_t>{1, 1});
}

TEST_CASE("betti numbers through the Morse complex on known spaces")
{
    SimplexPool point = pool_of({{0}});
    MorseSequence p = max_f(point, Stack::constant(point));
    CHECK(betti_mod2_from_morse(p, point) == std::vector<std::size_t>{1});

    SimplexPool sphere = simplex_boundary(4);
    MorseSequence s = max_f(sphere, Stack::constant(sphere));
    CHECK(betti_mod2_from_morse(s, sphere) ==
          std::vector<std::size_t>{1, 0, 1});
    CHECK(oracle::betti_mod2(sphere) == std::vector<std::size_t>{1, 0, 1});

    SimplexPool torus = minimal_torus();
    MorseSequence t = max_f(torus, Stack::constant(torus));
    CHECK(betti_mod2_from_morse(t, torus) ==
          std::vector<std::size_t>{1, 2, 1});
    CHECK(oracle::betti_mod2(torus) == std::vector<std::size_t>{1, 2, 1});

    SimplexPool disk = full_simplex(3);
    MorseSequence d = min_f(disk, Stack::constant(disk));
    CHECK(betti_mod2_from_morse(d, disk) ==
          std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("reference parity equals exhaustive path counting")
{
    std::mt19937 rng(20240909);
    for (int trial = 0; trial < 40; ++trial) {
        SimplexPool k = testsupport::random_complex(rng, 5);
        if (k.size() > 20)
            continue; // exhaustive enumeration stays cheap
        Stack f = testsupport::random_stack(rng, k);
        MorseSequence seq = max_f(k, f);
        MorseReference ref = morse_reference(seq, k);
        GradientVectorField gvf = gradient_field(seq);

        for (Index i = 0; i < k.size(); ++i) {
            for (const Simplex& crit : critical_cells(seq)) {
                if (k.at(i).dim() != crit.dim())
                    continue;
                int parity = oracle::count_vpaths_mod2(gvf, k, k.at(i), crit);
                bool in_ref = false;
                for (Index c : ref.cells[i])
                    if (k.at(c) == crit)
                        in_ref = true;
                CHECK(parity == (in_ref ? 1 : 0));
            }
        }
    }
}

TEST_CASE("weak inequalities and oracle agreement across schedulers")
{
    std::mt19937 rng(20240910);
    for (int trial = 0; trial < 40; ++trial) {
        SimplexPool k = testsupport::random_complex(rng, 6);
        std::vector<std::size_t> truth = oracle::betti_mod2(k);

        Stack f = testsupport::random_stack(rng, k);
        for (MorseSequence seq : {max_f(k, f), min_f(k, f)}) {
            CHECK(betti_mod2_from_morse(seq, k) == truth);
            std::vector<std::size_t> cv = critical_vector(seq);
            for (std::size_t d = 0; d < truth.size(); ++d)
                CHECK(cv[d] >= truth[d]);
        }

        VertexMap vm = testsupport::random_injective_map(rng, k);
        MorseSequence stars = max_lower_star(k, vm);
        CHECK(betti_mod2_from_morse(stars, k) == truth);
    }
}

TEST_CASE("reference rejects sequences that are not rooted at the empty complex")
{
    SimplexPool s = pool_of({{3}, {1, 3}, {2, 3}, {1, 2, 3}});
    MorseSequence seq = max_f(s, Stack::constant(s));
    REQUIRE_FALSE(seq.base.empty());
    CHECK_THROWS_AS(morse_reference(seq, closure(s)), std::domain_error);
}

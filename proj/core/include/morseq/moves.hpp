#ifndef MORSEQ_MOVES_HPP
#define MORSEQ_MOVES_HPP

#include "morseq/simplex_pool.hpp"

namespace morseq {

/// A pair (sigma, tau) with sigma a codimension-1 face of tau.
struct FreePair {
    Simplex sigma;
    Simplex tau;

    FreePair(Simplex s, Simplex t);
};

/// True when tau is the unique member of `k` strictly containing sigma.
/// Requires sigma and tau in `k`.
bool is_free_pair(const Simplex& sigma, const Simplex& tau,
                  const SimplexPool& k);

/// These return new pools; every precondition is checked and a violation
/// raises move_error naming the failed condition. The sweep algorithms do
/// not go through these entry points: they mutate a PoolView directly and
/// maintain the preconditions through their counters.

/// K minus a free pair. Requires `k` simplicial and `pair` free for it.
SimplexPool elementary_collapse(const SimplexPool& k, const FreePair& pair);

/// L plus a pair; the result must be simplicial with `pair` free for it.
SimplexPool elementary_expansion(const SimplexPool& l, const FreePair& pair);

/// L plus one simplex; the result must be simplicial with `nu` a facet.
SimplexPool elementary_filling(const SimplexPool& l, const Simplex& nu);

/// K minus one facet.
SimplexPool elementary_perforation(const SimplexPool& k, const Simplex& nu);

/// Set-level counterparts on a cosimplicial pool. Each removes members of
/// `s` only, and preserves the cosimplicial property.

/// S minus {sigma, tau}; requires coboundary(sigma, s) == {tau}.
SimplexPool reduction(const SimplexPool& s, const Simplex& sigma,
                      const Simplex& tau);

/// S minus {nu}; requires coboundary(nu, s) empty.
SimplexPool perforation_set(const SimplexPool& s, const Simplex& nu);

/// S minus {sigma, tau}; requires boundary(tau, s) == {sigma}.
SimplexPool coreduction(const SimplexPool& s, const Simplex& sigma,
                        const Simplex& tau);

/// S minus {nu}; requires boundary(nu, s) empty.
SimplexPool coperforation(const SimplexPool& s, const Simplex& nu);

} // namespace morseq

#endif // MORSEQ_MOVES_HPP

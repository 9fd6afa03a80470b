#ifndef MORSEQ_MORSE_COMPLEX_HPP
#define MORSEQ_MORSE_COMPLEX_HPP

#include <cstddef>
#include <vector>

#include "morseq/morse_sequence.hpp"
#include "morseq/simplex_pool.hpp"

namespace morseq {

/// For each simplex of the complex, the set of critical cells of the same
/// dimension reachable from it by an odd number of gradient paths.
/// Entries are pool indexes into the complex the sequence was built on,
/// sorted ascending. Every critical cell references at least itself.
struct MorseReference {
    std::vector<std::vector<Index>> cells;
};

/// Single left-to-right pass over a valid sequence on `k` (empty base):
/// a critical cell nu gets {nu}; for a pair (sigma, tau) the reference of
/// sigma becomes the mod-2 sum of the references of the other faces of
/// tau, and tau gets the empty set.
MorseReference morse_reference(const MorseSequence& seq, const SimplexPool& k);

/// The critical cells with their mod-2 boundary in the Morse complex:
/// boundary[i] lists positions (into `criticals`) of the cells one
/// dimension lower hit by an odd number of gradient paths.
/// The boundary-of-boundary of every cell vanishes.
struct MorseBoundary {
    std::vector<Index> criticals; // pool indexes, ascending
    std::vector<std::vector<std::size_t>> boundary;
};

MorseBoundary morse_boundary(const MorseSequence& seq, const SimplexPool& k);

/// Mod-2 Betti numbers computed on the (small) Morse complex:
/// beta_d = dim ker of the d-boundary minus rank of the (d+1)-boundary.
std::vector<std::size_t> betti_mod2_from_morse(const MorseSequence& seq,
                                               const SimplexPool& k);

} // namespace morseq

#endif // MORSEQ_MORSE_COMPLEX_HPP

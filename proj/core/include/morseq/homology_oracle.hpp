#ifndef MORSEQ_HOMOLOGY_ORACLE_HPP
#define MORSEQ_HOMOLOGY_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "morseq/morse_sequence.hpp"
#include "morseq/simplex_pool.hpp"

namespace morseq::oracle {

/// Ground-truth mod-2 Betti numbers of a simplicial complex from the full
/// boundary matrices, ranks by bit-packed elimination. Not fast; meant to
/// cross-check the Morse-complex route.
std::vector<std::size_t> betti_mod2(const SimplexPool& k);

/// Parity of the number of gradient paths from `from` to the critical
/// cell `to`, by exhaustive path enumeration. Exponential; small inputs
/// only. The field must be acyclic.
int count_vpaths_mod2(const GradientVectorField& gvf, const SimplexPool& k,
                      const Simplex& from, const Simplex& to);

/// True when the field admits no closed gradient path (no directed cycle
/// in the per-dimension path digraph).
bool acyclicity(const GradientVectorField& gvf, const SimplexPool& k);

} // namespace morseq::oracle

#endif // MORSEQ_HOMOLOGY_ORACLE_HPP

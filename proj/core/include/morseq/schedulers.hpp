#ifndef MORSEQ_SCHEDULERS_HPP
#define MORSEQ_SCHEDULERS_HPP

#include "morseq/morse_sequence.hpp"
#include "morseq/simplex_pool.hpp"
#include "morseq/stacks.hpp"

namespace morseq {

/// Greedy increasing sweep over a cosimplicial pool `s` with stack `f`.
///
/// Simplexes are processed in (weight, dimension, vertex sequence) order.
/// A counter per simplex tracks how many of its boundary faces are still
/// unprocessed; whenever exactly one remains and the weights agree, the
/// two cells leave as a regular pair, otherwise the scan pointer emits the
/// lowest unprocessed cell as critical. The result is a simplex-wise
/// F-sequence on `s` (from underline(s) to closure(s)) in which no filling
/// happens while an F-expansion is available.
///
/// With O(d) face and coface access from the pool the sweep itself is
/// O(d*n); ordering the cells adds the usual sort cost.
///
/// Throws stack_error when `f` is not monotone and domain_error when `s`
/// is not cosimplicial, before any work.
MorseSequence max_f(const SimplexPool& s, const Stack& f);

/// Dual decreasing sweep: processes cells by decreasing weight and
/// dimension, pairs a cell with its unique remaining coface when weights
/// agree, and emits stuck cells as critical, building the sequence from
/// the right. The result is a minimal simplex-wise F-sequence on `s`.
MorseSequence min_f(const SimplexPool& s, const Stack& f);

/// Lower-star sweep for an injective vertex map on a simplicial complex:
/// partitions `k` into lower stars, runs the increasing sweep with a
/// constant stack on each block, and concatenates the per-block sequences
/// in the vertex order induced by f. Blocks are independent, so they are
/// processed by `jobs` worker threads (0 picks the hardware count); the
/// output does not depend on the schedule.
///
/// A non-injective map raises domain_error; in that case run
/// max_f(k, induced_stack(f, k)) instead.
MorseSequence max_lower_star(const SimplexPool& k, const VertexMap& f,
                             unsigned jobs = 0);

/// Reference implementations that work on whole complexes through the
/// move-admissibility predicates, with no counter machinery: at each step
/// they rescan the complex for the least admissible move under the same
/// (weight, dimension, vertex sequence) policy as the sweeps above, so
/// their output matches max_f / min_f item for item. Quadratic; intended
/// as slow oracles.
MorseSequence scheme_max(const SimplexPool& l, const SimplexPool& k,
                         const Stack& f);
MorseSequence scheme_min(const SimplexPool& l, const SimplexPool& k,
                         const Stack& f);

} // namespace morseq

#endif // MORSEQ_SCHEDULERS_HPP

#ifndef MORSEQ_MORSE_SEQUENCE_HPP
#define MORSEQ_MORSE_SEQUENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morseq/simplex_pool.hpp"
#include "morseq/stacks.hpp"

namespace morseq {

/// One step of a simplex-wise Morse sequence: either a critical cell or a
/// regular pair (sigma, tau) with tau covering sigma.
class MorseItem {
public:
    static MorseItem critical(Simplex nu)
    {
        return MorseItem(std::move(nu), std::nullopt);
    }

    static MorseItem pair(Simplex sigma, Simplex tau);

    bool is_pair() const { return tau_.has_value(); }
    bool is_critical() const { return !tau_.has_value(); }

    /// The critical cell, or the free face of a pair.
    const Simplex& sigma() const { return sigma_; }

    /// The covering simplex of a pair.
    const Simplex& tau() const;

    /// Largest dimension involved in this item.
    int top_dim() const { return is_pair() ? tau_->dim() : sigma_.dim(); }

    friend bool operator==(const MorseItem& a, const MorseItem& b)
    {
        return a.sigma_ == b.sigma_ && a.tau_ == b.tau_;
    }
    friend bool operator!=(const MorseItem& a, const MorseItem& b)
    {
        return !(a == b);
    }

    /// "C v1 v2 ..." or "P v1 .. | w1 w2 ..".
    std::string to_string() const;

private:
    MorseItem(Simplex sigma, std::optional<Simplex> tau)
        : sigma_(std::move(sigma)), tau_(std::move(tau))
    {
    }

    Simplex sigma_;
    std::optional<Simplex> tau_;
};

/// An ordered list of items rooted at a base complex. Replaying the items
/// from the base yields a chain of elementary expansions and fillings; a
/// valid sequence reaches exactly the target complex, touching each of its
/// simplexes outside the base once.
struct MorseSequence {
    SimplexPool base;
    std::vector<MorseItem> items;

    friend bool operator==(const MorseSequence& a, const MorseSequence& b)
    {
        return a.base == b.base && a.items == b.items;
    }
};

struct ValidationReport {
    bool ok = true;
    std::size_t index = static_cast<std::size_t>(-1);
    std::string reason;

    explicit operator bool() const { return ok; }

    static ValidationReport pass() { return {}; }
    static ValidationReport fail(std::size_t i, std::string why)
    {
        return {false, i, std::move(why)};
    }
};

/// Replay check against `k`: each pair must be a free pair for the grown
/// complex, each critical cell a facet of it, and the final complex must
/// equal `k`. On failure, pinpoints the first violating item.
ValidationReport validate(const MorseSequence& seq, const SimplexPool& k);

/// validate() plus the weight-equality check F(sigma) == F(tau) on every
/// pair; `f` is a stack on `k`.
ValidationReport validate_f(const MorseSequence& seq, const SimplexPool& k,
                            const Stack& f);

/// The regular pairs of a Morse sequence, in canonical order. No simplex
/// may occur in two pairs.
struct GradientVectorField {
    std::vector<std::pair<Simplex, Simplex>> pairs;

    friend bool operator==(const GradientVectorField& a,
                           const GradientVectorField& b)
    {
        return a.pairs == b.pairs;
    }
};

GradientVectorField gradient_field(const MorseSequence& seq);

/// The critical cells, in item order.
std::vector<Simplex> critical_cells(const MorseSequence& seq);

/// Two sequences are equivalent when they have the same gradient field.
bool equivalent(const MorseSequence& a, const MorseSequence& b);

/// Number of critical cells per dimension, sized by the largest dimension
/// the sequence touches.
std::vector<std::size_t> critical_vector(const MorseSequence& seq);

/// True when, before every filling, the grown complex admits no
/// F-expansion inside `k`. Exhaustive availability scan; quadratic, meant
/// for test-scale sequences. Requires `seq` valid on `k`.
bool audit_maximal(const MorseSequence& seq, const SimplexPool& k,
                   const Stack& f);

/// Dual audit for the decreasing construction: after every filling (that
/// is, at the complex from which the right-to-left pass perforated the
/// cell), no F-collapse keeping the base may exist.
bool audit_minimal(const MorseSequence& seq, const SimplexPool& k,
                   const Stack& f);

namespace detail {

/// Move admissibility relative to a membership view over k's adjacency.
/// These are the single source of truth for what the validator, the
/// audits, and the generic schemes consider a legal step.
bool filling_ok(const SimplexPool& k, const PoolView& view, Index nu);
bool expansion_ok(const SimplexPool& k, const PoolView& view, Index sigma,
                  Index tau);
bool perforation_ok(const SimplexPool& k, const PoolView& view, Index nu);
bool collapse_ok(const SimplexPool& k, const PoolView& view, Index sigma,
                 Index tau);

} // namespace detail

} // namespace morseq

#endif // MORSEQ_MORSE_SEQUENCE_HPP

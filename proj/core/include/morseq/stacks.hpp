#ifndef MORSEQ_STACKS_HPP
#define MORSEQ_STACKS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "morseq/simplex_pool.hpp"

namespace morseq {

using Weight = std::int32_t;

/// An integer weight per pool member, stored densely by pool index.
/// A stack is such a map that is monotone under face inclusion.
/// Immutable once validated; shareable read-only.
class Stack {
public:
    static Stack constant(const SimplexPool& pool, Weight value = 1)
    {
        Stack f;
        f.w_.assign(pool.size(), value);
        return f;
    }

    static Stack from_weights(std::vector<Weight> weights)
    {
        Stack f;
        f.w_ = std::move(weights);
        return f;
    }

    Weight at(Index i) const { return w_[i]; }
    Weight operator[](Index i) const { return w_[i]; }
    std::size_t size() const { return w_.size(); }

    friend bool operator==(const Stack& a, const Stack& b)
    {
        return a.w_ == b.w_;
    }

private:
    std::vector<Weight> w_;
};

/// True when f is monotone under face inclusion on `s`.
/// A weight vector not covering the pool raises domain_error.
bool validate_stack(const Stack& f, const SimplexPool& s);

/// First monotonicity violation in canonical order, as (face, coface),
/// or nothing when the stack is valid.
std::optional<std::pair<Simplex, Simplex>>
find_stack_violation(const Stack& f, const SimplexPool& s);

/// Sublevel set { nu | f(nu) <= lambda }, materialized.
SimplexPool cut(const Stack& f, const SimplexPool& s, Weight lambda);

/// Level set { nu | f(nu) == lambda }, materialized.
SimplexPool section(const Stack& f, const SimplexPool& s, Weight lambda);

/// Weights of `sub`'s members looked up in (`parent`, f).
Stack restrict_stack(const Stack& f, const SimplexPool& parent,
                     const SimplexPool& sub);

/// An integer value per vertex id. Must cover exactly the vertex set of
/// the complex it is used with.
class VertexMap {
public:
    static VertexMap from_pairs(
        const std::vector<std::pair<Vertex, Weight>>& pairs);

    bool defines(Vertex v) const { return values_.count(v) != 0; }
    Weight at(Vertex v) const;
    std::size_t size() const { return values_.size(); }
    bool is_injective() const;
    const std::map<Vertex, Weight>& values() const { return values_; }

private:
    std::map<Vertex, Weight> values_;
};

/// True when f maps distinct vertices to distinct values.
bool is_theta_map(const VertexMap& f);

/// The max-over-vertices extension of f to all of `k`; always a valid
/// stack. Requires `k` simplicial and f defined on exactly its vertex set.
Stack induced_stack(const VertexMap& f, const SimplexPool& k);

/// Cofaces of vertex `v` sharing its induced weight:
/// { tau in k | v in tau and F(tau) = f(v) }. Requires f injective.
CosimplicialComplex lower_star(Vertex v, const SimplexPool& k,
                               const VertexMap& f);

/// All lower stars in the vertex order induced by f (ascending values).
/// The blocks are pairwise disjoint and cover `k`. Requires f injective.
std::vector<CosimplicialComplex> lower_star_partition(const SimplexPool& k,
                                                      const VertexMap& f);

/// Vertices of `k` sorted by ascending f value. Requires f injective.
std::vector<Vertex> vertex_order(const VertexMap& f, const SimplexPool& k);

} // namespace morseq

#endif // MORSEQ_STACKS_HPP

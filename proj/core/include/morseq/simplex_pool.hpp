#ifndef MORSEQ_SIMPLEX_POOL_HPP
#define MORSEQ_SIMPLEX_POOL_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "morseq/simplex.hpp"

namespace morseq {

using Index = std::uint32_t;
inline constexpr Index kNoIndex = std::numeric_limits<Index>::max();

/// An indexed finite set of simplexes.
///
/// Simplexes are stored in (dimension, vertex sequence) order; the position
/// in that order is the stable index of the simplex. Boundary and coboundary
/// adjacency restricted to the pool is precomputed at construction, so the
/// per-simplex face/coface queries used by the sweep algorithms cost O(d).
///
/// Pools are immutable after construction and safe to share across threads.
class SimplexPool {
public:
    SimplexPool() = default;

    /// Builds a pool from an arbitrary list; duplicates are merged.
    static SimplexPool from_simplexes(std::vector<Simplex> simplexes);

    std::size_t size() const { return simplexes_.size(); }
    bool empty() const { return simplexes_.empty(); }

    /// Maximum simplex dimension, -1 for the empty pool.
    int dimension() const { return dimension_; }

    const Simplex& at(Index i) const { return simplexes_[i]; }

    bool contains(const Simplex& s) const
    {
        return index_.find(s) != index_.end();
    }

    /// Index of `s`, or kNoIndex when absent.
    Index index_of(const Simplex& s) const
    {
        auto it = index_.find(s);
        return it == index_.end() ? kNoIndex : it->second;
    }

    /// Codimension-1 faces of simplex `i` that belong to the pool,
    /// ascending by index.
    std::span<const Index> faces_of(Index i) const
    {
        return {faces_[i].data(), faces_[i].size()};
    }

    /// Codimension-1 cofaces of simplex `i` that belong to the pool,
    /// ascending by index. For a cosimplicial pool this is the full
    /// coboundary.
    std::span<const Index> cofaces_of(Index i) const
    {
        return {cofaces_[i].data(), cofaces_[i].size()};
    }

    /// All simplexes in canonical (dimension, vertex sequence) order.
    const std::vector<Simplex>& simplexes() const { return simplexes_; }

    /// Ids of the 0-simplexes, ascending.
    std::vector<Vertex> vertex_ids() const;

    /// Number of simplexes of each dimension, indexed by dimension.
    std::vector<std::size_t> counts_by_dim() const;

    friend bool operator==(const SimplexPool& a, const SimplexPool& b)
    {
        return a.simplexes_ == b.simplexes_;
    }
    friend bool operator!=(const SimplexPool& a, const SimplexPool& b)
    {
        return !(a == b);
    }

private:
    std::vector<Simplex> simplexes_;
    std::unordered_map<Simplex, Index, SimplexHash> index_;
    std::vector<std::vector<Index>> faces_;
    std::vector<std::vector<Index>> cofaces_;
    int dimension_ = -1;
};

/// Alternating sum of the face counts.
long long euler_characteristic(const SimplexPool& s);

/// The smallest simplicial complex containing every member of `s`
/// (all non-empty subsets of members).
SimplexPool closure(const SimplexPool& s);

/// closure(s) minus s.
SimplexPool underline(const SimplexPool& s);

/// True when every non-empty subset of every member is a member.
bool is_simplicial(const SimplexPool& s);

/// True when the pool is closed under betweenness: for sigma, tau in the
/// pool with sigma subset of tau, every nu with sigma subset of nu subset
/// of tau is also in the pool. Equivalent to underline(s) being simplicial.
bool is_cosimplicial(const SimplexPool& s);

/// Faces of `nu` of codimension 1 that belong to `s`.
/// Requires nu in s.
std::vector<Simplex> boundary(const Simplex& nu, const SimplexPool& s);

/// Cofaces of `nu` of codimension 1 inside the closure of `s`; for a
/// cosimplicial pool every such coface belongs to `s` itself.
/// Requires nu in s.
std::vector<Simplex> coboundary(const Simplex& nu, const SimplexPool& s);

/// A mutable membership bitmap over an immutable pool. The sweep
/// algorithms, validators, and audits grow or shrink one of these instead
/// of rebuilding pools. Single-owner; never shared across threads.
class PoolView {
public:
    static PoolView empty_view(const SimplexPool& pool)
    {
        return PoolView(pool, false);
    }
    static PoolView full_view(const SimplexPool& pool)
    {
        return PoolView(pool, true);
    }

    const SimplexPool& pool() const { return *pool_; }
    std::size_t size() const { return count_; }

    bool contains(Index i) const { return member_[i] != 0; }

    void insert(Index i)
    {
        if (!member_[i]) {
            member_[i] = 1;
            ++count_;
        }
    }

    void erase(Index i)
    {
        if (member_[i]) {
            member_[i] = 0;
            --count_;
        }
    }

    SimplexPool materialize() const;

private:
    PoolView(const SimplexPool& pool, bool full)
        : pool_(&pool),
          member_(pool.size(), full ? 1 : 0),
          count_(full ? pool.size() : 0)
    {
    }

    const SimplexPool* pool_;
    std::vector<char> member_;
    std::size_t count_ = 0;
};

/// A pool whose betweenness closure has been verified.
class CosimplicialComplex {
public:
    explicit CosimplicialComplex(SimplexPool pool);

    /// Wraps without re-checking; for pools that are cosimplicial by
    /// construction (cuts, sections, lower stars).
    static CosimplicialComplex trusted(SimplexPool pool)
    {
        return CosimplicialComplex(std::move(pool), TrustedTag{});
    }

    const SimplexPool& pool() const { return pool_; }

private:
    struct TrustedTag {};
    CosimplicialComplex(SimplexPool pool, TrustedTag) : pool_(std::move(pool)) {}

    SimplexPool pool_;
};

} // namespace morseq

#endif // MORSEQ_SIMPLEX_POOL_HPP

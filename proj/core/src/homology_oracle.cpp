#include "morseq/homology_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace morseq::oracle {

namespace {

using Row = std::vector<std::uint64_t>;

void row_xor(Row& a, const Row& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] ^= b[i];
}

int first_bit(const Row& r)
{
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i])
            return static_cast<int>(64 * i + __builtin_ctzll(r[i]));
    return -1;
}

std::size_t gf2_rank(std::vector<Row> rows)
{
    std::vector<int> pivot_of_bit;
    std::size_t rank = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int b = first_bit(rows[r]);
        while (b >= 0 && b < static_cast<int>(pivot_of_bit.size()) &&
               pivot_of_bit[b] >= 0) {
            row_xor(rows[r], rows[pivot_of_bit[b]]);
            b = first_bit(rows[r]);
        }
        if (b < 0)
            continue;
        if (b >= static_cast<int>(pivot_of_bit.size()))
            pivot_of_bit.resize(b + 1, -1);
        pivot_of_bit[b] = static_cast<int>(r);
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<std::size_t> betti_mod2(const SimplexPool& k)
{
    if (!is_simplicial(k))
        throw std::domain_error("betti_mod2: pool is not a simplicial complex");
    if (k.empty())
        return {};

    const int dmax = k.dimension();
    std::vector<std::size_t> counts = k.counts_by_dim();

    // Simplexes are stored by ascending dimension, so each dimension is a
    // contiguous index range.
    std::vector<Index> offset(dmax + 2, 0);
    for (int d = 0; d <= dmax; ++d)
        offset[d + 1] = offset[d] + static_cast<Index>(counts[d]);

    std::vector<std::size_t> rank(dmax + 2, 0);
    for (int d = 1; d <= dmax; ++d) {
        const std::size_t words = (counts[d - 1] + 63) / 64;
        std::vector<Row> rows;
        rows.reserve(counts[d]);
        for (Index i = offset[d]; i < offset[d + 1]; ++i) {
            Row row(words, 0);
            for (Index face : k.faces_of(i)) {
                Index bit = face - offset[d - 1];
                row[bit / 64] |= std::uint64_t(1) << (bit % 64);
            }
            rows.push_back(std::move(row));
        }
        rank[d] = gf2_rank(std::move(rows));
    }

    std::vector<std::size_t> betti(dmax + 1);
    for (int d = 0; d <= dmax; ++d)
        betti[d] = counts[d] - rank[d] - rank[d + 1];
    return betti;
}

namespace {

/// pair_up[i] = index of the coface i is paired with, or kNoIndex.
std::vector<Index> lower_to_upper(const GradientVectorField& gvf,
                                  const SimplexPool& k)
{
    std::vector<Index> up(k.size(), kNoIndex);
    std::vector<char> used(k.size(), 0);
    for (const auto& [sigma, tau] : gvf.pairs) {
        Index is = k.index_of(sigma);
        Index it = k.index_of(tau);
        if (is == kNoIndex || it == kNoIndex)
            throw std::domain_error("gradient field: pair member not in complex");
        if (used[is] || used[it])
            throw std::domain_error("gradient field: simplex in two pairs");
        used[is] = used[it] = 1;
        up[is] = it;
    }
    return up;
}

} // namespace

int count_vpaths_mod2(const GradientVectorField& gvf, const SimplexPool& k,
                      const Simplex& from, const Simplex& to)
{
    Index start = k.index_of(from);
    Index goal = k.index_of(to);
    if (start == kNoIndex || goal == kNoIndex)
        throw std::domain_error("count_vpaths: simplex not in complex");

    std::vector<Index> up = lower_to_upper(gvf, k);
    for (const auto& [sigma, tau] : gvf.pairs)
        if (tau == to || sigma == to)
            throw std::domain_error("count_vpaths: target cell is not critical");

    std::function<int(Index, std::size_t)> walk = [&](Index cur,
                                                      std::size_t depth) -> int {
        if (depth > k.size())
            throw std::logic_error("count_vpaths: path exceeds complex size; "
                                   "field has a cycle");
        if (cur == goal)
            return 1;
        Index tau = up[cur];
        if (tau == kNoIndex)
            return 0; // critical or upper half: the path ends elsewhere
        int parity = 0;
        for (Index face : k.faces_of(tau))
            if (face != cur)
                parity ^= walk(face, depth + 1);
        return parity;
    };
    return walk(start, 0);
}

bool acyclicity(const GradientVectorField& gvf, const SimplexPool& k)
{
    std::vector<Index> up = lower_to_upper(gvf, k);

    // Cycle detection on the path digraph: sigma steps to the other faces
    // of its pair. Only paired lower halves have outgoing edges.
    enum : char { White, Gray, Black };
    std::vector<char> color(k.size(), White);

    std::function<bool(Index)> has_cycle = [&](Index v) -> bool {
        color[v] = Gray;
        if (up[v] != kNoIndex) {
            for (Index face : k.faces_of(up[v])) {
                if (face == v || up[face] == kNoIndex)
                    continue;
                if (color[face] == Gray)
                    return true;
                if (color[face] == White && has_cycle(face))
                    return true;
            }
        }
        color[v] = Black;
        return false;
    };

    for (Index v = 0; v < k.size(); ++v)
        if (up[v] != kNoIndex && color[v] == White && has_cycle(v))
            return false;
    return true;
}

} // namespace morseq::oracle

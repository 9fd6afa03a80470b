#include "morseq/morse_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace morseq {

namespace {

std::vector<Index> symmetric_difference(const std::vector<Index>& a,
                                        const std::vector<Index>& b)
{
    std::vector<Index> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

void require_on_complex(const MorseSequence& seq, const SimplexPool& k,
                        const char* op)
{
    if (!seq.base.empty())
        throw std::domain_error(std::string(op) +
                                ": sequence must start from the empty complex");
    ValidationReport r = validate(seq, k);
    if (!r)
        throw std::domain_error(std::string(op) +
                                ": sequence is not valid: " + r.reason);
}

} // namespace

MorseReference morse_reference(const MorseSequence& seq, const SimplexPool& k)
{
    require_on_complex(seq, k, "morse_reference");

    MorseReference ref;
    ref.cells.resize(k.size());
    for (const MorseItem& item : seq.items) {
        if (item.is_critical()) {
            Index nu = k.index_of(item.sigma());
            ref.cells[nu] = {nu};
        } else {
            Index sigma = k.index_of(item.sigma());
            Index tau = k.index_of(item.tau());
            // All other faces of tau were added earlier, so their
            // references are final.
            std::vector<Index> acc;
            for (Index face : k.faces_of(tau))
                if (face != sigma)
                    acc = symmetric_difference(acc, ref.cells[face]);
            ref.cells[sigma] = std::move(acc);
            ref.cells[tau].clear();
        }
    }
    return ref;
}

MorseBoundary morse_boundary(const MorseSequence& seq, const SimplexPool& k)
{
    MorseReference ref = morse_reference(seq, k);

    MorseBoundary mb;
    for (const MorseItem& item : seq.items)
        if (item.is_critical())
            mb.criticals.push_back(k.index_of(item.sigma()));
    std::sort(mb.criticals.begin(), mb.criticals.end());

    std::vector<std::size_t> slot(k.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < mb.criticals.size(); ++i)
        slot[mb.criticals[i]] = i;

    mb.boundary.resize(mb.criticals.size());
    for (std::size_t i = 0; i < mb.criticals.size(); ++i) {
        std::vector<Index> acc;
        for (Index face : k.faces_of(mb.criticals[i]))
            acc = symmetric_difference(acc, ref.cells[face]);
        std::vector<std::size_t>& row = mb.boundary[i];
        row.reserve(acc.size());
        for (Index c : acc)
            row.push_back(slot[c]);
        std::sort(row.begin(), row.end());
    }

    // Chain complex law: the boundary of a boundary vanishes mod 2.
    for (std::size_t i = 0; i < mb.criticals.size(); ++i) {
        std::vector<std::size_t> acc;
        for (std::size_t j : mb.boundary[i]) {
            std::vector<std::size_t> out;
            std::set_symmetric_difference(acc.begin(), acc.end(),
                                          mb.boundary[j].begin(),
                                          mb.boundary[j].end(),
                                          std::back_inserter(out));
            acc = std::move(out);
        }
        if (!acc.empty())
            throw std::logic_error(
                "morse_boundary: boundary of boundary is non-zero");
    }
    return mb;
}

namespace {

/// Rank over the two-element field by plain elimination on dense
/// char-matrices; Morse complexes are small.
std::size_t small_gf2_rank(std::vector<std::vector<char>> rows)
{
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && !rows[pivot][col])
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != row && rows[r][col]) {
                for (std::size_t c = col; c < cols; ++c)
                    rows[r][c] ^= rows[row][c];
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<std::size_t> betti_mod2_from_morse(const MorseSequence& seq,
                                               const SimplexPool& k)
{
    MorseBoundary mb = morse_boundary(seq, k);
    if (k.empty())
        return {};
    const int dmax = k.dimension();

    // Split critical cells by dimension, keeping their slot order.
    std::vector<std::vector<std::size_t>> by_dim(dmax + 1);
    std::vector<std::size_t> pos_in_dim(mb.criticals.size());
    for (std::size_t i = 0; i < mb.criticals.size(); ++i) {
        int d = k.at(mb.criticals[i]).dim();
        pos_in_dim[i] = by_dim[d].size();
        by_dim[d].push_back(i);
    }

    std::vector<std::size_t> rank(dmax + 2, 0);
    for (int d = 1; d <= dmax; ++d) {
        if (by_dim[d].empty() || by_dim[d - 1].empty())
            continue;
        std::vector<std::vector<char>> rows(
            by_dim[d].size(), std::vector<char>(by_dim[d - 1].size(), 0));
        for (std::size_t r = 0; r < by_dim[d].size(); ++r)
            for (std::size_t j : mb.boundary[by_dim[d][r]])
                rows[r][pos_in_dim[j]] = 1;
        rank[d] = small_gf2_rank(std::move(rows));
    }

    std::vector<std::size_t> betti(dmax + 1);
    for (int d = 0; d <= dmax; ++d)
        betti[d] = by_dim[d].size() - rank[d] - rank[d + 1];
    return betti;
}

} // namespace morseq

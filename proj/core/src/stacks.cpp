#include "morseq/stacks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "morseq/errors.hpp"

namespace morseq {

namespace {

void require_total(const Stack& f, const SimplexPool& s, const char* op)
{
    if (f.size() != s.size())
        throw std::domain_error(std::string(op) +
                                ": weight vector does not cover the pool");
}

} // namespace

std::optional<std::pair<Simplex, Simplex>>
find_stack_violation(const Stack& f, const SimplexPool& s)
{
    require_total(f, s, "stack");
    // Compare each member against all its proper subsets present in the
    // pool; pools need not contain full codimension-1 chains.
    for (Index i = 0; i < s.size(); ++i) {
        const Simplex& tau = s.at(i);
        const std::vector<Vertex>& verts = tau.vertices();
        if (verts.size() < 2)
            continue;
        if (verts.size() > 25)
            throw std::domain_error("stack: simplex dimension too large");
        const std::uint32_t full = (1u << verts.size()) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            std::vector<Vertex> sub;
            for (std::size_t b = 0; b < verts.size(); ++b)
                if (mask & (1u << b))
                    sub.push_back(verts[b]);
            Index j = s.index_of(Simplex(std::move(sub)));
            if (j != kNoIndex && f.at(j) > f.at(i))
                return std::make_pair(s.at(j), tau);
        }
    }
    return std::nullopt;
}

bool validate_stack(const Stack& f, const SimplexPool& s)
{
    return !find_stack_violation(f, s).has_value();
}

SimplexPool cut(const Stack& f, const SimplexPool& s, Weight lambda)
{
    require_total(f, s, "cut");
    std::vector<Simplex> members;
    for (Index i = 0; i < s.size(); ++i)
        if (f.at(i) <= lambda)
            members.push_back(s.at(i));
    return SimplexPool::from_simplexes(std::move(members));
}

SimplexPool section(const Stack& f, const SimplexPool& s, Weight lambda)
{
    require_total(f, s, "section");
    std::vector<Simplex> members;
    for (Index i = 0; i < s.size(); ++i)
        if (f.at(i) == lambda)
            members.push_back(s.at(i));
    return SimplexPool::from_simplexes(std::move(members));
}

Stack restrict_stack(const Stack& f, const SimplexPool& parent,
                     const SimplexPool& sub)
{
    require_total(f, parent, "restrict_stack");
    std::vector<Weight> w;
    w.reserve(sub.size());
    for (const Simplex& s : sub.simplexes()) {
        Index i = parent.index_of(s);
        if (i == kNoIndex)
            throw std::domain_error("restrict_stack: " + s.to_string() +
                                    " is not in the parent pool");
        w.push_back(f.at(i));
    }
    return Stack::from_weights(std::move(w));
}

VertexMap VertexMap::from_pairs(
    const std::vector<std::pair<Vertex, Weight>>& pairs)
{
    VertexMap f;
    for (const auto& [v, value] : pairs) {
        if (!f.values_.emplace(v, value).second)
            throw std::domain_error("vertex map: duplicate entry for vertex " +
                                    std::to_string(v));
    }
    return f;
}

Weight VertexMap::at(Vertex v) const
{
    auto it = values_.find(v);
    if (it == values_.end())
        throw std::domain_error("vertex map: no value for vertex " +
                                std::to_string(v));
    return it->second;
}

bool VertexMap::is_injective() const
{
    std::vector<Weight> vals;
    vals.reserve(values_.size());
    for (const auto& [v, value] : values_)
        vals.push_back(value);
    std::sort(vals.begin(), vals.end());
    return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

bool is_theta_map(const VertexMap& f)
{
    return f.is_injective();
}

namespace {

void require_matches_vertices(const VertexMap& f, const SimplexPool& k,
                              const char* op)
{
    std::vector<Vertex> verts = k.vertex_ids();
    if (f.size() != verts.size())
        throw std::domain_error(
            std::string(op) + ": vertex map does not cover the vertex set");
    for (Vertex v : verts)
        if (!f.defines(v))
            throw std::domain_error(std::string(op) +
                                    ": vertex map misses vertex " +
                                    std::to_string(v));
}

Weight max_over_vertices(const VertexMap& f, const Simplex& tau)
{
    Weight m = f.at(tau.vertices()[0]);
    for (std::size_t i = 1; i < tau.card(); ++i)
        m = std::max(m, f.at(tau.vertices()[i]));
    return m;
}

void require_injective(const VertexMap& f, const char* op)
{
    if (!f.is_injective())
        throw std::domain_error(
            std::string(op) +
            ": vertex map is not injective; run max_f on the induced "
            "stack instead");
}

} // namespace

Stack induced_stack(const VertexMap& f, const SimplexPool& k)
{
    if (!is_simplicial(k))
        throw std::domain_error("induced_stack: pool is not a simplicial complex");
    require_matches_vertices(f, k, "induced_stack");
    std::vector<Weight> w;
    w.reserve(k.size());
    for (const Simplex& tau : k.simplexes())
        w.push_back(max_over_vertices(f, tau));
    return Stack::from_weights(std::move(w));
}

CosimplicialComplex lower_star(Vertex v, const SimplexPool& k,
                               const VertexMap& f)
{
    if (!is_simplicial(k))
        throw std::domain_error("lower_star: pool is not a simplicial complex");
    require_matches_vertices(f, k, "lower_star");
    require_injective(f, "lower_star");
    if (!k.contains(Simplex{v}))
        throw std::domain_error("lower_star: vertex " + std::to_string(v) +
                                " is not in the complex");
    const Weight value = f.at(v);
    std::vector<Simplex> members;
    for (const Simplex& tau : k.simplexes())
        if (tau.contains(v) && max_over_vertices(f, tau) == value)
            members.push_back(tau);
    return CosimplicialComplex::trusted(
        SimplexPool::from_simplexes(std::move(members)));
}

std::vector<Vertex> vertex_order(const VertexMap& f, const SimplexPool& k)
{
    require_matches_vertices(f, k, "vertex_order");
    require_injective(f, "vertex_order");
    std::vector<Vertex> verts = k.vertex_ids();
    std::sort(verts.begin(), verts.end(),
              [&](Vertex a, Vertex b) { return f.at(a) < f.at(b); });
    return verts;
}

std::vector<CosimplicialComplex> lower_star_partition(const SimplexPool& k,
                                                      const VertexMap& f)
{
    if (!is_simplicial(k))
        throw std::domain_error(
            "lower_star_partition: pool is not a simplicial complex");
    require_matches_vertices(f, k, "lower_star_partition");
    require_injective(f, "lower_star_partition");

    std::vector<Vertex> order = vertex_order(f, k);
    std::unordered_map<Vertex, std::size_t> block_of;
    block_of.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        block_of.emplace(order[i], i);

    // Each simplex lands in the block of its heaviest vertex, which is
    // unique because f is injective.
    std::vector<std::vector<Simplex>> blocks(order.size());
    for (const Simplex& tau : k.simplexes()) {
        Vertex top = tau.vertices()[0];
        for (Vertex v : tau.vertices())
            if (f.at(v) > f.at(top))
                top = v;
        blocks[block_of.at(top)].push_back(tau);
    }

    std::vector<CosimplicialComplex> out;
    out.reserve(blocks.size());
    for (std::vector<Simplex>& b : blocks)
        out.push_back(CosimplicialComplex::trusted(
            SimplexPool::from_simplexes(std::move(b))));
    return out;
}

} // namespace morseq

#include "morseq/simplex_pool.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace morseq {

SimplexPool SimplexPool::from_simplexes(std::vector<Simplex> simplexes)
{
    std::sort(simplexes.begin(), simplexes.end());
    simplexes.erase(std::unique(simplexes.begin(), simplexes.end()),
                    simplexes.end());

    SimplexPool pool;
    pool.simplexes_ = std::move(simplexes);
    const std::size_t n = pool.simplexes_.size();
    pool.index_.reserve(2 * n);
    for (Index i = 0; i < n; ++i) {
        pool.index_.emplace(pool.simplexes_[i], i);
        pool.dimension_ = std::max(pool.dimension_, pool.simplexes_[i].dim());
    }

    pool.faces_.resize(n);
    pool.cofaces_.resize(n);
    for (Index i = 0; i < n; ++i) {
        const Simplex& s = pool.simplexes_[i];
        if (s.dim() == 0)
            continue;
        for (const Simplex& f : s.facets()) {
            Index j = pool.index_of(f);
            if (j != kNoIndex) {
                pool.faces_[i].push_back(j);
                pool.cofaces_[j].push_back(i);
            }
        }
        std::sort(pool.faces_[i].begin(), pool.faces_[i].end());
    }
    // cofaces_ lists are already ascending: cofaces are discovered in
    // increasing order of i.
    return pool;
}

std::vector<Vertex> SimplexPool::vertex_ids() const
{
    std::vector<Vertex> out;
    for (const Simplex& s : simplexes_) {
        if (s.dim() > 0)
            break;
        out.push_back(s.vertices()[0]);
    }
    return out;
}

std::vector<std::size_t> SimplexPool::counts_by_dim() const
{
    std::vector<std::size_t> counts(dimension_ < 0 ? 0 : dimension_ + 1, 0);
    for (const Simplex& s : simplexes_)
        ++counts[static_cast<std::size_t>(s.dim())];
    return counts;
}

long long euler_characteristic(const SimplexPool& s)
{
    long long chi = 0;
    for (const Simplex& f : s.simplexes())
        chi += (f.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

namespace {

void collect_subsets(const std::vector<Vertex>& verts, std::size_t pos,
                     std::vector<Vertex>& current, std::set<Simplex>& out)
{
    if (pos == verts.size()) {
        if (!current.empty())
            out.insert(Simplex(current));
        return;
    }
    collect_subsets(verts, pos + 1, current, out);
    current.push_back(verts[pos]);
    collect_subsets(verts, pos + 1, current, out);
    current.pop_back();
}

} // namespace

SimplexPool closure(const SimplexPool& s)
{
    std::set<Simplex> faces;
    std::vector<Vertex> scratch;
    for (const Simplex& f : s.simplexes())
        collect_subsets(f.vertices(), 0, scratch, faces);
    return SimplexPool::from_simplexes(
        std::vector<Simplex>(faces.begin(), faces.end()));
}

SimplexPool underline(const SimplexPool& s)
{
    SimplexPool bar = closure(s);
    std::vector<Simplex> rest;
    for (const Simplex& f : bar.simplexes())
        if (!s.contains(f))
            rest.push_back(f);
    return SimplexPool::from_simplexes(std::move(rest));
}

bool is_simplicial(const SimplexPool& s)
{
    // Closure under codimension-1 faces implies closure under all subsets.
    for (Index i = 0; i < s.size(); ++i) {
        const Simplex& f = s.at(i);
        if (f.dim() == 0)
            continue;
        if (s.faces_of(i).size() != f.card())
            return false;
    }
    return true;
}

bool is_cosimplicial(const SimplexPool& s)
{
    if (is_simplicial(s))
        return true;
    // Direct betweenness check. One-vertex extensions of the lower end of
    // every nested pair suffice: deeper intermediates follow by induction.
    for (Index i = 0; i < s.size(); ++i) {
        const Simplex& lo = s.at(i);
        for (Index j = 0; j < s.size(); ++j) {
            const Simplex& hi = s.at(j);
            if (hi.dim() < lo.dim() + 2)
                continue;
            if (!hi.has_face(lo))
                continue;
            for (Vertex v : hi.vertices()) {
                if (!lo.contains(v) && !s.contains(lo.joined_with(v)))
                    return false;
            }
        }
    }
    return true;
}

std::vector<Simplex> boundary(const Simplex& nu, const SimplexPool& s)
{
    Index i = s.index_of(nu);
    if (i == kNoIndex)
        throw std::domain_error("boundary: simplex " + nu.to_string() +
                                " is not in the pool");
    std::vector<Simplex> out;
    for (Index j : s.faces_of(i))
        out.push_back(s.at(j));
    return out;
}

std::vector<Simplex> coboundary(const Simplex& nu, const SimplexPool& s)
{
    if (!s.contains(nu))
        throw std::domain_error("coboundary: simplex " + nu.to_string() +
                                " is not in the pool");
    // Cofaces inside the closure: nu + v is in the closure exactly when
    // some member of s contains both nu and v.
    std::set<Simplex> out;
    for (const Simplex& rho : s.simplexes()) {
        if (rho.card() <= nu.card() || !rho.has_face(nu))
            continue;
        for (Vertex v : rho.vertices())
            if (!nu.contains(v))
                out.insert(nu.joined_with(v));
    }
    return {out.begin(), out.end()};
}

SimplexPool PoolView::materialize() const
{
    std::vector<Simplex> members;
    members.reserve(count_);
    for (Index i = 0; i < pool_->size(); ++i)
        if (member_[i])
            members.push_back(pool_->at(i));
    return SimplexPool::from_simplexes(std::move(members));
}

CosimplicialComplex::CosimplicialComplex(SimplexPool pool)
    : pool_(std::move(pool))
{
    if (!is_cosimplicial(pool_))
        throw std::domain_error(
            "cosimplicial complex: pool is not closed under betweenness");
}

} // namespace morseq

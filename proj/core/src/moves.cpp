#include "morseq/moves.hpp"

#include <algorithm>

#include "morseq/errors.hpp"

namespace morseq {

FreePair::FreePair(Simplex s, Simplex t) : sigma(std::move(s)), tau(std::move(t))
{
    if (tau.dim() != sigma.dim() + 1 || !tau.has_face(sigma))
        throw std::domain_error("free pair: " + tau.to_string() +
                                " does not cover " + sigma.to_string());
}

bool is_free_pair(const Simplex& sigma, const Simplex& tau,
                  const SimplexPool& k)
{
    if (!k.contains(sigma))
        throw std::domain_error("is_free_pair: " + sigma.to_string() +
                                " is not in the complex");
    if (!k.contains(tau))
        throw std::domain_error("is_free_pair: " + tau.to_string() +
                                " is not in the complex");
    // Count every strict superset, not only cofaces, so the predicate is
    // meaningful on arbitrary pools.
    for (const Simplex& rho : k.simplexes()) {
        if (rho.card() <= sigma.card())
            continue;
        if (rho.has_face(sigma) && rho != tau)
            return false;
    }
    return tau.card() > sigma.card() && tau.has_face(sigma);
}

namespace {

SimplexPool without(const SimplexPool& pool,
                    const std::vector<const Simplex*>& removed)
{
    std::vector<Simplex> kept;
    kept.reserve(pool.size());
    for (const Simplex& s : pool.simplexes()) {
        bool drop = false;
        for (const Simplex* r : removed)
            if (s == *r)
                drop = true;
        if (!drop)
            kept.push_back(s);
    }
    return SimplexPool::from_simplexes(std::move(kept));
}

SimplexPool with(const SimplexPool& pool,
                 const std::vector<const Simplex*>& added)
{
    std::vector<Simplex> all(pool.simplexes());
    for (const Simplex* a : added)
        all.push_back(*a);
    return SimplexPool::from_simplexes(std::move(all));
}

bool is_facet_of(const Simplex& nu, const SimplexPool& k)
{
    for (const Simplex& rho : k.simplexes())
        if (rho.card() > nu.card() && rho.has_face(nu))
            return false;
    return true;
}

} // namespace

SimplexPool elementary_collapse(const SimplexPool& k, const FreePair& pair)
{
    if (!is_simplicial(k))
        throw move_error("collapse: complex is not simplicial");
    if (!k.contains(pair.sigma) || !k.contains(pair.tau))
        throw move_error("collapse: pair is not in the complex");
    if (!is_free_pair(pair.sigma, pair.tau, k))
        throw move_error("collapse: (" + pair.sigma.to_string() + "," +
                         pair.tau.to_string() + ") is not free");
    return without(k, {&pair.sigma, &pair.tau});
}

SimplexPool elementary_expansion(const SimplexPool& l, const FreePair& pair)
{
    if (l.contains(pair.sigma) || l.contains(pair.tau))
        throw move_error("expansion: pair member already present");
    SimplexPool k = with(l, {&pair.sigma, &pair.tau});
    if (!is_simplicial(k))
        throw move_error("expansion: result is not simplicial");
    if (!is_free_pair(pair.sigma, pair.tau, k))
        throw move_error("expansion: (" + pair.sigma.to_string() + "," +
                         pair.tau.to_string() + ") is not free for the result");
    return k;
}

SimplexPool elementary_filling(const SimplexPool& l, const Simplex& nu)
{
    if (l.contains(nu))
        throw move_error("filling: " + nu.to_string() + " already present");
    SimplexPool k = with(l, {&nu});
    if (!is_simplicial(k))
        throw move_error("filling: result is not simplicial");
    if (!is_facet_of(nu, k))
        throw move_error("filling: " + nu.to_string() +
                         " is not a facet of the result");
    return k;
}

SimplexPool elementary_perforation(const SimplexPool& k, const Simplex& nu)
{
    if (!k.contains(nu))
        throw move_error("perforation: " + nu.to_string() + " is not present");
    if (!is_facet_of(nu, k))
        throw move_error("perforation: " + nu.to_string() + " is not a facet");
    return without(k, {&nu});
}

namespace {

void require_cosimplicial(const SimplexPool& s, const char* op)
{
    if (!is_cosimplicial(s))
        throw move_error(std::string(op) + ": pool is not cosimplicial");
}

} // namespace

SimplexPool reduction(const SimplexPool& s, const Simplex& sigma,
                      const Simplex& tau)
{
    require_cosimplicial(s, "reduction");
    std::vector<Simplex> cob = coboundary(sigma, s);
    if (cob.size() != 1 || cob[0] != tau)
        throw move_error("reduction: coboundary of " + sigma.to_string() +
                         " is not exactly {" + tau.to_string() + "}");
    return without(s, {&sigma, &tau});
}

SimplexPool perforation_set(const SimplexPool& s, const Simplex& nu)
{
    require_cosimplicial(s, "perforation");
    if (!coboundary(nu, s).empty())
        throw move_error("perforation: coboundary of " + nu.to_string() +
                         " is not empty");
    return without(s, {&nu});
}

SimplexPool coreduction(const SimplexPool& s, const Simplex& sigma,
                        const Simplex& tau)
{
    require_cosimplicial(s, "coreduction");
    std::vector<Simplex> bnd = boundary(tau, s);
    if (bnd.size() != 1 || bnd[0] != sigma)
        throw move_error("coreduction: boundary of " + tau.to_string() +
                         " is not exactly {" + sigma.to_string() + "}");
    return without(s, {&sigma, &tau});
}

SimplexPool coperforation(const SimplexPool& s, const Simplex& nu)
{
    require_cosimplicial(s, "coperforation");
    if (!boundary(nu, s).empty())
        throw move_error("coperforation: boundary of " + nu.to_string() +
                         " is not empty");
    return without(s, {&nu});
}

} // namespace morseq

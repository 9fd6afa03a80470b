#include "morseq/schedulers.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <thread>

#include "morseq/errors.hpp"

namespace morseq {

namespace {

void require_stack(const Stack& f, const SimplexPool& s, const char* op)
{
    if (f.size() != s.size())
        throw std::domain_error(std::string(op) +
                                ": stack does not cover the pool");
    if (auto bad = find_stack_violation(f, s))
        throw stack_error(std::string(op) + ": weights not monotone: F(" +
                          bad->first.to_string() + ") > F(" +
                          bad->second.to_string() + ")");
}

/// Increasing processing order: weight ascending, ties by pool index,
/// which is (dimension, vertex sequence) order.
std::vector<Index> max_order(const SimplexPool& s, const Stack& f)
{
    std::vector<Index> arr(s.size());
    std::iota(arr.begin(), arr.end(), 0u);
    std::stable_sort(arr.begin(), arr.end(),
                     [&](Index a, Index b) { return f.at(a) < f.at(b); });
    return arr;
}

/// Decreasing processing order: weight descending, then dimension
/// descending, ties by vertex sequence ascending.
std::vector<Index> min_order(const SimplexPool& s, const Stack& f)
{
    std::vector<Index> arr(s.size());
    std::iota(arr.begin(), arr.end(), 0u);
    std::sort(arr.begin(), arr.end(), [&](Index a, Index b) {
        if (f.at(a) != f.at(b))
            return f.at(a) > f.at(b);
        int da = s.at(a).dim(), db = s.at(b).dim();
        if (da != db)
            return da > db;
        return a < b;
    });
    return arr;
}

#ifdef MORSEQ_HEAVY_CHECKS

/// Replays the emitted steps against the closure of the input and
/// recomputes the boundary counters from scratch after each one.
class SweepAudit {
public:
    SweepAudit(const SimplexPool& s, bool increasing)
        : s_(&s), bar_(closure(s)), view_(PoolView::empty_view(bar_)),
          increasing_(increasing)
    {
        to_bar_.resize(s.size());
        for (Index i = 0; i < s.size(); ++i)
            to_bar_[i] = bar_.index_of(s.at(i));
        for (Index b = 0; b < bar_.size(); ++b)
            if (!s.contains(bar_.at(b)))
                view_.insert(b); // start from underline(s)
        if (!increasing_)
            for (Index b = 0; b < bar_.size(); ++b)
                view_.insert(b); // start from closure(s)
    }

    void on_pair(Index sigma, Index tau)
    {
        Index bs = to_bar_[sigma], bt = to_bar_[tau];
        if (increasing_) {
            if (!detail::expansion_ok(bar_, view_, bs, bt))
                throw std::logic_error("sweep audit: emitted pair is not an "
                                       "elementary expansion");
            view_.insert(bs);
            view_.insert(bt);
        } else {
            if (!detail::collapse_ok(bar_, view_, bs, bt))
                throw std::logic_error("sweep audit: removed pair is not an "
                                       "elementary collapse");
            view_.erase(bs);
            view_.erase(bt);
        }
    }

    void on_critical(Index nu)
    {
        Index bn = to_bar_[nu];
        if (increasing_) {
            if (!detail::filling_ok(bar_, view_, bn))
                throw std::logic_error(
                    "sweep audit: emitted cell is not an elementary filling");
            view_.insert(bn);
        } else {
            if (!detail::perforation_ok(bar_, view_, bn))
                throw std::logic_error(
                    "sweep audit: removed cell is not an elementary perforation");
            view_.erase(bn);
        }
    }

    void check_counters(const std::vector<char>& taken,
                        const std::vector<std::int32_t>& rho)
    {
        for (Index i = 0; i < s_->size(); ++i) {
            if (taken[i])
                continue;
            std::span<const Index> adj =
                increasing_ ? s_->faces_of(i) : s_->cofaces_of(i);
            std::int32_t live = 0;
            for (Index j : adj)
                if (!taken[j])
                    ++live;
            if (live != rho[i])
                throw std::logic_error("sweep audit: stale boundary counter");
        }
    }

private:
    const SimplexPool* s_;
    SimplexPool bar_;
    PoolView view_;
    std::vector<Index> to_bar_;
    bool increasing_;
};

#endif // MORSEQ_HEAVY_CHECKS

/// Core of the increasing sweep; `s` must be cosimplicial and `f` a stack.
std::vector<MorseItem> run_max_items(const SimplexPool& s, const Stack& f)
{
    const std::size_t n = s.size();
    std::vector<Index> arr = max_order(s, f);
    std::vector<Index> pos(n);
    for (Index k = 0; k < n; ++k)
        pos[arr[k]] = k;

    // rho[i] = boundary faces of i not yet taken, maintained incrementally.
    std::vector<std::int32_t> rho(n);
    for (Index i = 0; i < n; ++i)
        rho[i] = static_cast<std::int32_t>(s.faces_of(i).size());

    // Candidate cells whose counter reached one, keyed by processing
    // position so extraction always yields the least available candidate.
    std::priority_queue<Index, std::vector<Index>, std::greater<Index>> u;
    for (Index k = 0; k < n; ++k)
        if (rho[arr[k]] == 1)
            u.push(k);

    std::vector<char> taken(n, 0);
    std::vector<MorseItem> items;
    items.reserve(n);

#ifdef MORSEQ_HEAVY_CHECKS
    SweepAudit audit(s, true);
#endif

    auto on_taken = [&](Index i) {
        for (Index c : s.cofaces_of(i)) {
            --rho[c];
            if (rho[c] == 1)
                u.push(pos[c]);
        }
    };

    std::size_t scan = 0;
    while (true) {
        while (!u.empty()) {
            Index tau = arr[u.top()];
            u.pop();
            if (taken[tau] || rho[tau] != 1)
                continue; // stale entry
            Index sigma = kNoIndex;
            for (Index face : s.faces_of(tau))
                if (!taken[face]) {
                    sigma = face;
                    break;
                }
            if (f.at(sigma) != f.at(tau))
                continue; // weight gap: the cell waits for the scan pointer
#ifdef MORSEQ_HEAVY_CHECKS
            audit.on_pair(sigma, tau);
#endif
            items.push_back(MorseItem::pair(s.at(sigma), s.at(tau)));
            taken[sigma] = taken[tau] = 1;
            on_taken(sigma);
            on_taken(tau);
#ifdef MORSEQ_HEAVY_CHECKS
            audit.check_counters(taken, rho);
#endif
        }
        while (scan < n && taken[arr[scan]])
            ++scan;
        if (scan == n)
            break;
        Index nu = arr[scan];
#ifdef MORSEQ_HEAVY_CHECKS
        audit.on_critical(nu);
#endif
        items.push_back(MorseItem::critical(s.at(nu)));
        taken[nu] = 1;
        on_taken(nu);
#ifdef MORSEQ_HEAVY_CHECKS
        audit.check_counters(taken, rho);
#endif
    }
    return items;
}

/// Core of the decreasing sweep; builds the sequence right to left.
std::vector<MorseItem> run_min_items(const SimplexPool& s, const Stack& f)
{
    const std::size_t n = s.size();
    std::vector<Index> arr = min_order(s, f);
    std::vector<Index> pos(n);
    for (Index k = 0; k < n; ++k)
        pos[arr[k]] = k;

    // rho[i] = cofaces of i not yet removed.
    std::vector<std::int32_t> rho(n);
    for (Index i = 0; i < n; ++i)
        rho[i] = static_cast<std::int32_t>(s.cofaces_of(i).size());

    std::priority_queue<Index, std::vector<Index>, std::greater<Index>> u;
    for (Index k = 0; k < n; ++k)
        if (rho[arr[k]] == 1)
            u.push(k);

    std::vector<char> taken(n, 0);
    std::vector<MorseItem> collected; // reversed at the end
    collected.reserve(n);

#ifdef MORSEQ_HEAVY_CHECKS
    SweepAudit audit(s, false);
#endif

    auto on_taken = [&](Index i) {
        for (Index face : s.faces_of(i)) {
            --rho[face];
            if (rho[face] == 1)
                u.push(pos[face]);
        }
    };

    std::size_t scan = 0;
    while (true) {
        while (!u.empty()) {
            Index sigma = arr[u.top()];
            u.pop();
            if (taken[sigma] || rho[sigma] != 1)
                continue;
            Index tau = kNoIndex;
            for (Index c : s.cofaces_of(sigma))
                if (!taken[c]) {
                    tau = c;
                    break;
                }
            if (f.at(sigma) != f.at(tau))
                continue;
#ifdef MORSEQ_HEAVY_CHECKS
            audit.on_pair(sigma, tau);
#endif
            collected.push_back(MorseItem::pair(s.at(sigma), s.at(tau)));
            taken[sigma] = taken[tau] = 1;
            on_taken(sigma);
            on_taken(tau);
#ifdef MORSEQ_HEAVY_CHECKS
            audit.check_counters(taken, rho);
#endif
        }
        while (scan < n && taken[arr[scan]])
            ++scan;
        if (scan == n)
            break;
        Index nu = arr[scan];
#ifdef MORSEQ_HEAVY_CHECKS
        audit.on_critical(nu);
#endif
        collected.push_back(MorseItem::critical(s.at(nu)));
        taken[nu] = 1;
        on_taken(nu);
#ifdef MORSEQ_HEAVY_CHECKS
        audit.check_counters(taken, rho);
#endif
    }
    std::reverse(collected.begin(), collected.end());
    return collected;
}

/// Validates scheduler input and computes the base complex of the result.
SimplexPool checked_base(const SimplexPool& s, const char* op)
{
    bool simplicial = is_simplicial(s);
    if (!simplicial && !is_cosimplicial(s))
        throw std::domain_error(std::string(op) +
                                ": input pool is not cosimplicial");
    return simplicial ? SimplexPool() : underline(s);
}

} // namespace

MorseSequence max_f(const SimplexPool& s, const Stack& f)
{
    require_stack(f, s, "max_f");
    SimplexPool base = checked_base(s, "max_f");
    return {std::move(base), run_max_items(s, f)};
}

MorseSequence min_f(const SimplexPool& s, const Stack& f)
{
    require_stack(f, s, "min_f");
    SimplexPool base = checked_base(s, "min_f");
    return {std::move(base), run_min_items(s, f)};
}

MorseSequence max_lower_star(const SimplexPool& k, const VertexMap& f,
                             unsigned jobs)
{
    // Validation (simplicial, coverage, injectivity) happens inside the
    // partition; each block is a cosimplicial section and the constant
    // stack is trivially monotone, so the blocks run unchecked.
    std::vector<CosimplicialComplex> blocks = lower_star_partition(k, f);

    std::vector<std::vector<MorseItem>> results(blocks.size());
    unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, blocks.size()));

    auto run_block = [&](std::size_t i) {
        const SimplexPool& block = blocks[i].pool();
        results[i] = run_max_items(block, Stack::constant(block));
    };

    if (workers <= 1) {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            run_block(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < blocks.size();)
                    run_block(i);
            });
        for (std::thread& t : pool)
            t.join();
    }

    MorseSequence seq;
    for (std::vector<MorseItem>& r : results)
        for (MorseItem& item : r)
            seq.items.push_back(std::move(item));
    return seq;
}

namespace {

void require_subcomplex(const SimplexPool& l, const SimplexPool& k,
                        const char* op)
{
    if (!is_simplicial(k))
        throw std::domain_error(std::string(op) + ": target is not simplicial");
    if (!is_simplicial(l))
        throw std::domain_error(std::string(op) + ": base is not simplicial");
    for (const Simplex& s : l.simplexes())
        if (!k.contains(s))
            throw std::domain_error(std::string(op) +
                                    ": base is not a subcomplex of the target");
}

} // namespace

MorseSequence scheme_max(const SimplexPool& l, const SimplexPool& k,
                         const Stack& f)
{
    require_stack(f, k, "scheme_max");
    require_subcomplex(l, k, "scheme_max");

    std::vector<char> in_base(k.size(), 0);
    PoolView view = PoolView::empty_view(k);
    for (const Simplex& s : l.simplexes()) {
        Index i = k.index_of(s);
        in_base[i] = 1;
        view.insert(i);
    }

    std::vector<Index> all = max_order(k, f);
    std::vector<Index> arr;
    arr.reserve(k.size() - l.size());
    for (Index i : all)
        if (!in_base[i])
            arr.push_back(i);

    MorseSequence seq{l, {}};
    while (view.size() < k.size()) {
        bool advanced = false;
        // Least admissible expansion, scanning targets in processing order.
        for (Index tau : arr) {
            if (view.contains(tau))
                continue;
            Index missing = kNoIndex;
            int missing_count = 0;
            for (Index face : k.faces_of(tau))
                if (!view.contains(face)) {
                    missing = face;
                    if (++missing_count > 1)
                        break;
                }
            if (missing_count != 1 || f.at(missing) != f.at(tau))
                continue;
            if (!detail::expansion_ok(k, view, missing, tau))
                continue;
            seq.items.push_back(MorseItem::pair(k.at(missing), k.at(tau)));
            view.insert(missing);
            view.insert(tau);
            advanced = true;
            break;
        }
        if (advanced)
            continue;
        // No expansion available: fill the least unprocessed cell.
        for (Index nu : arr) {
            if (view.contains(nu))
                continue;
            if (!detail::filling_ok(k, view, nu))
                throw std::logic_error(
                    "scheme_max: least unprocessed cell is not fillable");
            seq.items.push_back(MorseItem::critical(k.at(nu)));
            view.insert(nu);
            advanced = true;
            break;
        }
        if (!advanced)
            throw std::logic_error("scheme_max: no admissible move");
    }
    return seq;
}

MorseSequence scheme_min(const SimplexPool& l, const SimplexPool& k,
                         const Stack& f)
{
    require_stack(f, k, "scheme_min");
    require_subcomplex(l, k, "scheme_min");

    std::vector<char> in_base(k.size(), 0);
    for (const Simplex& s : l.simplexes())
        in_base[k.index_of(s)] = 1;

    std::vector<Index> all = min_order(k, f);
    std::vector<Index> arr;
    arr.reserve(k.size() - l.size());
    for (Index i : all)
        if (!in_base[i])
            arr.push_back(i);

    PoolView view = PoolView::full_view(k);
    std::vector<MorseItem> collected;
    while (view.size() > l.size()) {
        bool advanced = false;
        // Least admissible collapse, scanning free faces in processing order.
        for (Index sigma : arr) {
            if (!view.contains(sigma))
                continue;
            Index unique_coface = kNoIndex;
            int count = 0;
            for (Index c : k.cofaces_of(sigma))
                if (view.contains(c)) {
                    unique_coface = c;
                    if (++count > 1)
                        break;
                }
            if (count != 1 || in_base[unique_coface])
                continue;
            if (f.at(sigma) != f.at(unique_coface))
                continue;
            if (!detail::collapse_ok(k, view, sigma, unique_coface))
                continue;
            collected.push_back(
                MorseItem::pair(k.at(sigma), k.at(unique_coface)));
            view.erase(sigma);
            view.erase(unique_coface);
            advanced = true;
            break;
        }
        if (advanced)
            continue;
        // No collapse available: perforate the least remaining cell.
        for (Index nu : arr) {
            if (!view.contains(nu))
                continue;
            if (!detail::perforation_ok(k, view, nu))
                throw std::logic_error(
                    "scheme_min: least remaining cell is not a facet");
            collected.push_back(MorseItem::critical(k.at(nu)));
            view.erase(nu);
            advanced = true;
            break;
        }
        if (!advanced)
            throw std::logic_error("scheme_min: no admissible move");
    }
    std::reverse(collected.begin(), collected.end());
    return {l, std::move(collected)};
}

} // namespace morseq

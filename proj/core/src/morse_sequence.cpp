#include "morseq/morse_sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace morseq {

MorseItem MorseItem::pair(Simplex sigma, Simplex tau)
{
    if (tau.dim() != sigma.dim() + 1 || !tau.has_face(sigma))
        throw std::domain_error("morse item: " + tau.to_string() +
                                " does not cover " + sigma.to_string());
    return MorseItem(std::move(sigma), std::move(tau));
}

const Simplex& MorseItem::tau() const
{
    if (!tau_)
        throw std::logic_error("morse item: critical item has no tau");
    return *tau_;
}

std::string MorseItem::to_string() const
{
    std::string s = is_pair() ? "P" : "C";
    for (Vertex v : sigma_.vertices())
        s += ' ' + std::to_string(v);
    if (is_pair()) {
        s += " |";
        for (Vertex v : tau_->vertices())
            s += ' ' + std::to_string(v);
    }
    return s;
}

namespace detail {

bool filling_ok(const SimplexPool& k, const PoolView& view, Index nu)
{
    if (view.contains(nu))
        return false;
    for (Index f : k.faces_of(nu))
        if (!view.contains(f))
            return false;
    for (Index c : k.cofaces_of(nu))
        if (view.contains(c))
            return false;
    return true;
}

bool expansion_ok(const SimplexPool& k, const PoolView& view, Index sigma,
                  Index tau)
{
    if (view.contains(sigma) || view.contains(tau))
        return false;
    std::span<const Index> tau_faces = k.faces_of(tau);
    if (std::find(tau_faces.begin(), tau_faces.end(), sigma) == tau_faces.end())
        return false;
    for (Index f : tau_faces)
        if (f != sigma && !view.contains(f))
            return false;
    for (Index f : k.faces_of(sigma))
        if (!view.contains(f))
            return false;
    // tau is the only superset of sigma in the result: the view stays
    // simplicial along a replay, so checking cofaces is enough.
    for (Index c : k.cofaces_of(sigma))
        if (view.contains(c))
            return false;
    return true;
}

bool perforation_ok(const SimplexPool& k, const PoolView& view, Index nu)
{
    if (!view.contains(nu))
        return false;
    for (Index c : k.cofaces_of(nu))
        if (view.contains(c))
            return false;
    return true;
}

bool collapse_ok(const SimplexPool& k, const PoolView& view, Index sigma,
                 Index tau)
{
    if (!view.contains(sigma) || !view.contains(tau))
        return false;
    std::span<const Index> tau_faces = k.faces_of(tau);
    if (std::find(tau_faces.begin(), tau_faces.end(), sigma) == tau_faces.end())
        return false;
    for (Index c : k.cofaces_of(sigma))
        if (view.contains(c) && c != tau)
            return false;
    return true;
}

} // namespace detail

namespace {

ValidationReport replay(const MorseSequence& seq, const SimplexPool& k,
                        const Stack* f)
{
    constexpr std::size_t kPre = static_cast<std::size_t>(-1);
    if (!is_simplicial(k))
        return ValidationReport::fail(kPre, "target is not a simplicial complex");
    if (!is_simplicial(seq.base))
        return ValidationReport::fail(kPre, "base is not a simplicial complex");
    if (f && f->size() != k.size())
        throw std::domain_error("validate_f: stack does not cover the complex");

    PoolView view = PoolView::empty_view(k);
    for (const Simplex& s : seq.base.simplexes()) {
        Index i = k.index_of(s);
        if (i == kNoIndex)
            return ValidationReport::fail(
                kPre, "base simplex " + s.to_string() + " is not in the target");
        view.insert(i);
    }

    for (std::size_t idx = 0; idx < seq.items.size(); ++idx) {
        const MorseItem& item = seq.items[idx];
        if (item.is_pair()) {
            Index is = k.index_of(item.sigma());
            Index it = k.index_of(item.tau());
            if (is == kNoIndex || it == kNoIndex)
                return ValidationReport::fail(idx, "pair member is not in the target");
            if (!detail::expansion_ok(k, view, is, it))
                return ValidationReport::fail(
                    idx, "(" + item.sigma().to_string() + "," +
                             item.tau().to_string() +
                             ") is not an elementary expansion here");
            if (f && f->at(is) != f->at(it))
                return ValidationReport::fail(
                    idx, "pair weights differ: F(" + item.sigma().to_string() +
                             ") != F(" + item.tau().to_string() + ")");
            view.insert(is);
            view.insert(it);
        } else {
            Index iv = k.index_of(item.sigma());
            if (iv == kNoIndex)
                return ValidationReport::fail(idx,
                                              "critical cell is not in the target");
            if (!detail::filling_ok(k, view, iv))
                return ValidationReport::fail(
                    idx, item.sigma().to_string() +
                             " is not an elementary filling here");
            view.insert(iv);
        }
    }

    if (view.size() != k.size())
        return ValidationReport::fail(seq.items.size(),
                                      "replay does not reach the target complex");
    return ValidationReport::pass();
}

} // namespace

ValidationReport validate(const MorseSequence& seq, const SimplexPool& k)
{
    return replay(seq, k, nullptr);
}

ValidationReport validate_f(const MorseSequence& seq, const SimplexPool& k,
                            const Stack& f)
{
    return replay(seq, k, &f);
}

GradientVectorField gradient_field(const MorseSequence& seq)
{
    GradientVectorField v;
    std::vector<Simplex> used;
    for (const MorseItem& item : seq.items) {
        if (!item.is_pair())
            continue;
        v.pairs.emplace_back(item.sigma(), item.tau());
        used.push_back(item.sigma());
        used.push_back(item.tau());
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        throw std::domain_error("gradient field: a simplex occurs in two pairs");
    std::sort(v.pairs.begin(), v.pairs.end());
    return v;
}

std::vector<Simplex> critical_cells(const MorseSequence& seq)
{
    std::vector<Simplex> out;
    for (const MorseItem& item : seq.items)
        if (item.is_critical())
            out.push_back(item.sigma());
    return out;
}

bool equivalent(const MorseSequence& a, const MorseSequence& b)
{
    return gradient_field(a) == gradient_field(b);
}

std::vector<std::size_t> critical_vector(const MorseSequence& seq)
{
    int top = -1;
    for (const MorseItem& item : seq.items)
        top = std::max(top, item.top_dim());
    std::vector<std::size_t> counts(top < 0 ? 0 : top + 1, 0);
    for (const MorseItem& item : seq.items)
        if (item.is_critical())
            ++counts[static_cast<std::size_t>(item.sigma().dim())];
    return counts;
}

namespace {

void require_valid(const MorseSequence& seq, const SimplexPool& k,
                   const char* op)
{
    ValidationReport r = validate(seq, k);
    if (!r)
        throw std::domain_error(std::string(op) +
                                ": sequence is not valid: " + r.reason);
}

bool expansion_available(const SimplexPool& k, const PoolView& view,
                         const Stack& f)
{
    for (Index tau = 0; tau < k.size(); ++tau) {
        if (view.contains(tau))
            continue;
        Index missing = kNoIndex;
        int missing_count = 0;
        for (Index face : k.faces_of(tau)) {
            if (!view.contains(face)) {
                missing = face;
                if (++missing_count > 1)
                    break;
            }
        }
        if (missing_count != 1)
            continue;
        if (f.at(missing) == f.at(tau) &&
            detail::expansion_ok(k, view, missing, tau))
            return true;
    }
    return false;
}

bool collapse_available(const SimplexPool& k, const PoolView& view,
                        const std::vector<char>& in_base, const Stack& f)
{
    for (Index sigma = 0; sigma < k.size(); ++sigma) {
        if (!view.contains(sigma) || in_base[sigma])
            continue;
        Index unique_coface = kNoIndex;
        int count = 0;
        for (Index c : k.cofaces_of(sigma)) {
            if (view.contains(c)) {
                unique_coface = c;
                if (++count > 1)
                    break;
            }
        }
        if (count != 1 || in_base[unique_coface])
            continue;
        if (f.at(sigma) == f.at(unique_coface) &&
            detail::collapse_ok(k, view, sigma, unique_coface))
            return true;
    }
    return false;
}

} // namespace

bool audit_maximal(const MorseSequence& seq, const SimplexPool& k,
                   const Stack& f)
{
    require_valid(seq, k, "audit_maximal");
    if (f.size() != k.size())
        throw std::domain_error("audit_maximal: stack does not cover the complex");

    PoolView view = PoolView::empty_view(k);
    for (const Simplex& s : seq.base.simplexes())
        view.insert(k.index_of(s));

    for (const MorseItem& item : seq.items) {
        if (item.is_critical()) {
            if (expansion_available(k, view, f))
                return false;
            view.insert(k.index_of(item.sigma()));
        } else {
            view.insert(k.index_of(item.sigma()));
            view.insert(k.index_of(item.tau()));
        }
    }
    return true;
}

bool audit_minimal(const MorseSequence& seq, const SimplexPool& k,
                   const Stack& f)
{
    require_valid(seq, k, "audit_minimal");
    if (f.size() != k.size())
        throw std::domain_error("audit_minimal: stack does not cover the complex");

    std::vector<char> in_base(k.size(), 0);
    for (const Simplex& s : seq.base.simplexes())
        in_base[k.index_of(s)] = 1;

    PoolView view = PoolView::empty_view(k);
    for (const Simplex& s : seq.base.simplexes())
        view.insert(k.index_of(s));

    // The decreasing construction perforates a critical cell from the
    // complex that still contains it, so the availability check runs just
    // after each critical insertion.
    for (const MorseItem& item : seq.items) {
        if (item.is_critical()) {
            view.insert(k.index_of(item.sigma()));
            if (collapse_available(k, view, in_base, f))
                return false;
        } else {
            view.insert(k.index_of(item.sigma()));
            view.insert(k.index_of(item.tau()));
        }
    }
    return true;
}

} // namespace morseq

#include "morseq/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "morseq/errors.hpp"

namespace morseq::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                          s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view token, long long& out)
{
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                     out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> tokens_of(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void bad_line(std::size_t number, const std::string& why)
{
    throw io_error("line " + std::to_string(number) + ": " + why);
}

} // namespace

ParsedComplex parse_complex(std::string_view text)
{
    std::vector<Simplex> listed;
    std::vector<Weight> weights;
    bool any_weight = false;
    bool any_simplex = false;
    std::optional<int> declared_dim;

    std::vector<std::string_view> lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string_view line = trim(lines[ln]);
        if (line.empty() || line.front() == '#')
            continue;

        std::vector<std::string_view> toks = tokens_of(line);
        if (!any_simplex && !declared_dim && toks.size() == 2 &&
            toks[0] == "dim") {
            long long d;
            if (!parse_int(toks[1], d) || d < 0)
                bad_line(ln + 1, "malformed dim header");
            declared_dim = static_cast<int>(d);
            continue;
        }

        std::vector<Vertex> verts;
        std::optional<Weight> w;
        bool after_colon = false;
        for (std::string_view t : toks) {
            if (t == ":") {
                if (after_colon)
                    bad_line(ln + 1, "more than one ':'");
                after_colon = true;
                continue;
            }
            long long value;
            if (!parse_int(t, value))
                bad_line(ln + 1, "not an integer: '" + std::string(t) + "'");
            if (after_colon) {
                if (w)
                    bad_line(ln + 1, "more than one weight");
                w = static_cast<Weight>(value);
            } else {
                if (value < 0)
                    bad_line(ln + 1, "negative vertex id");
                verts.push_back(static_cast<Vertex>(value));
            }
        }
        if (after_colon && !w)
            bad_line(ln + 1, "':' without a weight");
        if (verts.empty())
            bad_line(ln + 1, "empty simplex");

        Simplex s = [&]() {
            try {
                return Simplex(std::move(verts));
            } catch (const std::domain_error& e) {
                bad_line(ln + 1, e.what());
            }
        }();

        if (any_simplex && any_weight != w.has_value())
            bad_line(ln + 1, "mixed weighted and unweighted lines");
        any_simplex = true;
        any_weight = w.has_value();
        listed.push_back(std::move(s));
        if (w)
            weights.push_back(*w);
    }

    ParsedComplex out;
    if (!any_weight) {
        out.pool = closure(SimplexPool::from_simplexes(std::move(listed)));
    } else {
        // Explicit pool: every member carries its own weight, so the list
        // must be duplicate-free and is not closed.
        out.pool = SimplexPool::from_simplexes(listed);
        if (out.pool.size() != listed.size())
            throw io_error("weighted file lists a simplex twice");
        std::vector<Weight> by_index(out.pool.size());
        for (std::size_t i = 0; i < listed.size(); ++i)
            by_index[out.pool.index_of(listed[i])] = weights[i];
        Stack stack = Stack::from_weights(std::move(by_index));
        if (auto bad = find_stack_violation(stack, out.pool))
            throw stack_error("weights not monotone: F(" +
                              bad->first.to_string() + ") > F(" +
                              bad->second.to_string() + ")");
        out.weights = std::move(stack);
    }

    if (declared_dim && out.pool.dimension() != *declared_dim)
        throw io_error("dim header says " + std::to_string(*declared_dim) +
                       " but the complex has dimension " +
                       std::to_string(out.pool.dimension()));
    out.declared_dim = declared_dim;
    return out;
}

std::string serialize_complex(const SimplexPool& pool, const Stack* weights)
{
    if (weights && weights->size() != pool.size())
        throw std::domain_error(
            "serialize_complex: weights do not cover the pool");
    std::string out = "dim " + std::to_string(pool.dimension()) + "\n";
    for (Index i = 0; i < pool.size(); ++i) {
        const std::vector<Vertex>& vs = pool.at(i).vertices();
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j)
                out += ' ';
            out += std::to_string(vs[j]);
        }
        if (weights)
            out += " : " + std::to_string(weights->at(i));
        out += '\n';
    }
    return out;
}

VertexMap parse_vertex_values(std::string_view text)
{
    std::vector<std::pair<Vertex, Weight>> pairs;
    std::vector<std::string_view> lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string_view line = trim(lines[ln]);
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<std::string_view> toks = tokens_of(line);
        long long v, value;
        if (toks.size() != 2 || !parse_int(toks[0], v) ||
            !parse_int(toks[1], value) || v < 0)
            bad_line(ln + 1, "expected 'vertex_id value'");
        pairs.emplace_back(static_cast<Vertex>(v), static_cast<Weight>(value));
    }
    try {
        return VertexMap::from_pairs(pairs);
    } catch (const std::domain_error& e) {
        throw io_error(e.what());
    }
}

std::string serialize_vertex_values(const VertexMap& f)
{
    std::string out;
    for (const auto& [v, value] : f.values())
        out += std::to_string(v) + ' ' + std::to_string(value) + '\n';
    return out;
}

std::string serialize_sequence(const MorseSequence& seq)
{
    ordered_json j;
    j["items"] = ordered_json::array();
    for (const MorseItem& item : seq.items)
        j["items"].push_back(item.to_string());

    std::size_t pairs = 0;
    for (const MorseItem& item : seq.items)
        if (item.is_pair())
            ++pairs;
    ordered_json summary;
    summary["critical_vector"] = critical_vector(seq);
    summary["criticals"] = seq.items.size() - pairs;
    summary["item_count"] = seq.items.size();
    summary["pairs"] = pairs;
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

namespace {

Simplex parse_vertex_list(const std::vector<std::string_view>& toks,
                          std::size_t from, std::size_t to)
{
    std::vector<Vertex> verts;
    for (std::size_t i = from; i < to; ++i) {
        long long v;
        if (!parse_int(toks[i], v) || v < 0)
            throw io_error("sequence item: bad vertex id '" +
                           std::string(toks[i]) + "'");
        verts.push_back(static_cast<Vertex>(v));
    }
    if (verts.empty())
        throw io_error("sequence item: empty vertex list");
    return Simplex(std::move(verts));
}

MorseItem parse_item(const std::string& text)
{
    std::vector<std::string_view> toks = tokens_of(text);
    if (toks.empty())
        throw io_error("sequence item: empty");
    if (toks[0] == "C")
        return MorseItem::critical(parse_vertex_list(toks, 1, toks.size()));
    if (toks[0] != "P")
        throw io_error("sequence item: expected 'C' or 'P', got '" +
                       std::string(toks[0]) + "'");
    std::size_t bar = 0;
    for (std::size_t i = 1; i < toks.size(); ++i)
        if (toks[i] == "|")
            bar = i;
    if (bar == 0)
        throw io_error("sequence item: pair without '|'");
    try {
        return MorseItem::pair(parse_vertex_list(toks, 1, bar),
                               parse_vertex_list(toks, bar + 1, toks.size()));
    } catch (const std::domain_error& e) {
        throw io_error(std::string("sequence item: ") + e.what());
    }
}

} // namespace

MorseSequence parse_sequence(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("sequence file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("items") || !j["items"].is_array())
        throw io_error("sequence file: missing items array");

    MorseSequence seq;
    for (const ordered_json& item : j["items"]) {
        if (!item.is_string())
            throw io_error("sequence file: items must be strings");
        seq.items.push_back(parse_item(item.get<std::string>()));
    }

    if (j.contains("summary")) {
        const ordered_json& s = j["summary"];
        if (s.contains("item_count") &&
            s["item_count"].get<std::size_t>() != seq.items.size())
            throw io_error("sequence file: summary item_count mismatch");
        if (s.contains("critical_vector") &&
            s["critical_vector"].get<std::vector<std::size_t>>() !=
                critical_vector(seq))
            throw io_error("sequence file: summary critical_vector mismatch");
    }
    return seq;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write " + path);
    out << content;
    if (!out)
        throw io_error("write failed for " + path);
}

} // namespace morseq::io

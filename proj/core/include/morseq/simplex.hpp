#ifndef MORSEQ_SIMPLEX_HPP
#define MORSEQ_SIMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace morseq {

using Vertex = std::int32_t;

/// A simplex is a non-empty finite set of vertex ids, stored sorted
/// ascending so that set equality is structural equality.
/// dim(s) = number of vertices - 1.
class Simplex {
public:
    explicit Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices))
    {
        if (v_.empty())
            throw std::domain_error("simplex: vertex set must be non-empty");
        std::sort(v_.begin(), v_.end());
        if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
            throw std::domain_error("simplex: duplicate vertex id");
        if (v_.front() < 0)
            throw std::domain_error("simplex: vertex ids must be non-negative");
    }

    Simplex(std::initializer_list<Vertex> vertices)
        : Simplex(std::vector<Vertex>(vertices))
    {
    }

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t card() const { return v_.size(); }
    const std::vector<Vertex>& vertices() const { return v_; }

    bool contains(Vertex v) const
    {
        return std::binary_search(v_.begin(), v_.end(), v);
    }

    /// True when `other` is a (not necessarily proper) subset of this simplex.
    bool has_face(const Simplex& other) const
    {
        return std::includes(v_.begin(), v_.end(),
                             other.v_.begin(), other.v_.end());
    }

    bool proper_face_of(const Simplex& other) const
    {
        return card() < other.card() && other.has_face(*this);
    }

    /// The codimension-1 faces (empty for a vertex).
    std::vector<Simplex> facets() const
    {
        std::vector<Simplex> out;
        if (v_.size() < 2)
            return out;
        out.reserve(v_.size());
        for (std::size_t skip = 0; skip < v_.size(); ++skip) {
            std::vector<Vertex> face;
            face.reserve(v_.size() - 1);
            for (std::size_t i = 0; i < v_.size(); ++i)
                if (i != skip)
                    face.push_back(v_[i]);
            out.emplace_back(std::move(face));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// This simplex extended by one vertex not already present.
    Simplex joined_with(Vertex v) const
    {
        std::vector<Vertex> ext(v_);
        ext.push_back(v);
        return Simplex(std::move(ext));
    }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(v_[i]);
        }
        s += '}';
        return s;
    }

    friend bool operator==(const Simplex& a, const Simplex& b)
    {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Simplex& a, const Simplex& b)
    {
        return !(a == b);
    }

    /// Orders by (dimension, vertex sequence); this is the canonical
    /// iteration order everywhere in the library.
    friend bool operator<(const Simplex& a, const Simplex& b)
    {
        if (a.card() != b.card())
            return a.card() < b.card();
        return a.v_ < b.v_;
    }

private:
    std::vector<Vertex> v_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Vertex v : s.vertices()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
                 (h >> 2);
        }
        return h;
    }
};

} // namespace morseq

#endif // MORSEQ_SIMPLEX_HPP

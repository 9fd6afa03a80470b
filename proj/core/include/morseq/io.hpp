#ifndef MORSEQ_IO_HPP
#define MORSEQ_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "morseq/morse_sequence.hpp"
#include "morseq/simplex_pool.hpp"
#include "morseq/stacks.hpp"

namespace morseq::io {

/// Complex files are line oriented: one simplex per line as space-separated
/// vertex ids, an optional " : <weight>" suffix, full-line comments
/// starting with '#', and an optional leading "dim <d>" header.
///
/// Without weights the listed simplexes are generators and the parsed pool
/// is their closure. With weights every simplex must be listed explicitly
/// (weights are never invented for inferred faces), weights must be given
/// on every line, and the resulting stack must be monotone (stack_error
/// otherwise).
struct ParsedComplex {
    SimplexPool pool;
    std::optional<Stack> weights;
    std::optional<int> declared_dim;
};

ParsedComplex parse_complex(std::string_view text);
std::string serialize_complex(const SimplexPool& pool,
                              const Stack* weights = nullptr);

/// Vertex value files: one "vertex_id value" pair per line, '#' comments.
/// Duplicate vertex ids are rejected.
VertexMap parse_vertex_values(std::string_view text);
std::string serialize_vertex_values(const VertexMap& f);

/// Sequence files are canonical JSON: an "items" array of strings
/// ("C v1 v2 ..." for a critical cell, "P v1 .. | w1 .." for a pair) and a
/// "summary" block with the critical vector and item counts. Serialization
/// is deterministic and parse/serialize round-trips byte-identically.
std::string serialize_sequence(const MorseSequence& seq);
MorseSequence parse_sequence(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace morseq::io

#endif // MORSEQ_IO_HPP

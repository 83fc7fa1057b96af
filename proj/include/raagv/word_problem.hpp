#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "raagv/graph.hpp"
#include "raagv/partition.hpp"

namespace raagv {

/// A generator (sign +1) or its inverse (sign -1).
struct Letter {
    Vertex vertex = 0;
    int sign = 1;

    Letter inverse() const { return {vertex, -sign}; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);

/// Thrown when the word problem is requested for a graph whose group does
/// not split as a direct product of free groups.
class NotEmbeddableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Letters whose generator lies in `block`, in order. `block` is sorted.
Word project(const Word& w, const VertexSet& block);

/// Free reduction by a single stack sweep.
Word free_reduce(const Word& w);

struct NormalForm {
    VertexSet p0;
    std::vector<std::int64_t> abelian_exponents;  // aligned with p0
    std::vector<VertexSet> parts;
    std::vector<Word> part_words;  // aligned with parts, freely reduced

    bool is_identity() const;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Coordinates of w in the direct-product decomposition given by p.
NormalForm normal_form(const CommutingPartition& p, const Word& w);

/// Throws NotEmbeddableError when g has a forbidden triple.
NormalForm normal_form(const Graph& g, const Word& w);

bool is_trivial(const Graph& g, const Word& w);
bool is_trivial(const CommutingPartition& p, const Word& w);

/// Whitespace-separated nonzero signed 1-based generator numbers, e.g.
/// "1 3 -1 -3". Throws std::invalid_argument on bad tokens, zero, or a
/// generator above n.
Word parse_word(std::string_view text, std::size_t n);

/// Inverse of parse_word: "1 3 -1 -3".
std::string format_word(const Word& w);

}  // namespace raagv

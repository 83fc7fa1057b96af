#include "raagv/word_problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <variant>

#include "raagv/partitioner.hpp"

namespace raagv {

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Word project(const Word& w, const VertexSet& block) {
    Word out;
    for (const Letter& l : w) {
        if (std::binary_search(block.begin(), block.end(), l.vertex)) out.push_back(l);
    }
    return out;
}

Word free_reduce(const Word& w) {
    Word stack;
    stack.reserve(w.size());
    for (const Letter& l : w) {
        if (!stack.empty() && stack.back() == l.inverse()) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return stack;
}

bool NormalForm::is_identity() const {
    return std::all_of(abelian_exponents.begin(), abelian_exponents.end(), [](auto e) { return e == 0; }) &&
           std::all_of(part_words.begin(), part_words.end(), [](const Word& w) { return w.empty(); });
}

NormalForm normal_form(const CommutingPartition& p, const Word& w) {
    NormalForm nf;
    nf.p0 = p.p0;
    nf.parts = p.parts;
    nf.abelian_exponents.assign(p.p0.size(), 0);
    for (const Letter& l : w) {
        const auto it = std::lower_bound(p.p0.begin(), p.p0.end(), l.vertex);
        if (it != p.p0.end() && *it == l.vertex) nf.abelian_exponents[static_cast<std::size_t>(it - p.p0.begin())] += l.sign;
    }
    nf.part_words.reserve(p.parts.size());
    for (const auto& part : p.parts) nf.part_words.push_back(free_reduce(project(w, part)));
    return nf;
}

namespace {

CommutingPartition require_partition(const Graph& g) {
    auto result = canonical_partition(g);
    if (auto* t = std::get_if<ForbiddenTriple>(&result)) {
        throw NotEmbeddableError("word problem is only implemented for graphs without a forbidden triple; (" +
                                 std::to_string(t->a) + "," + std::to_string(t->b) + ") is an edge and " +
                                 std::to_string(t->c) + " is adjacent to neither");
    }
    return std::get<CommutingPartition>(std::move(result));
}

void check_letters(const Graph& g, const Word& w) {
    for (const Letter& l : w) {
        if (l.vertex >= g.order()) throw std::invalid_argument("word uses a generator outside the graph");
    }
}

}  // namespace

NormalForm normal_form(const Graph& g, const Word& w) {
    check_letters(g, w);
    return normal_form(require_partition(g), w);
}

bool is_trivial(const CommutingPartition& p, const Word& w) { return normal_form(p, w).is_identity(); }

bool is_trivial(const Graph& g, const Word& w) { return normal_form(g, w).is_identity(); }

Word parse_word(std::string_view text, std::size_t n) {
    Word out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view token = text.substr(pos, end - pos);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad generator token '" + std::string(token) + "'");
        }
        if (value == 0) throw std::invalid_argument("generator 0 is not allowed; generators are numbered from 1");
        const auto magnitude = value < 0 ? 0ULL - static_cast<unsigned long long>(value) : static_cast<unsigned long long>(value);
        if (magnitude > n) {
            throw std::invalid_argument("generator " + std::string(token) + " exceeds the " + std::to_string(n) +
                                        " generators of the graph");
        }
        out.push_back(Letter{static_cast<Vertex>(magnitude - 1), value < 0 ? -1 : 1});
        pos = end;
    }
    return out;
}

std::string format_word(const Word& w) {
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += ' ';
        if (l.sign < 0) out += '-';
        out += std::to_string(l.vertex + 1);
    }
    return out;
}

}  // namespace raagv

#include "raagv/group_decomp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "raagv/partitioner.hpp"

namespace raagv {

GroupDecomposition decompose(const CommutingPartition& p) {
    GroupDecomposition d;
    d.abelian_rank = p.p0.size();
    d.free_ranks.reserve(p.parts.size());
    for (const auto& part : p.parts) d.free_ranks.push_back(part.size());
    return d;
}

GroupDecomposition canonical_form(GroupDecomposition d) {
    const auto ones = std::count(d.free_ranks.begin(), d.free_ranks.end(), std::size_t{1});
    d.abelian_rank += static_cast<std::size_t>(ones);
    std::erase(d.free_ranks, std::size_t{1});
    std::erase(d.free_ranks, std::size_t{0});
    std::sort(d.free_ranks.begin(), d.free_ranks.end(), std::greater<>());
    return d;
}

std::string to_string(const GroupDecomposition& d) {
    std::string out;
    auto append = [&out](const std::string& factor) {
        if (!out.empty()) out += " x ";
        out += factor;
    };
    if (d.abelian_rank > 0) append("Z^" + std::to_string(d.abelian_rank));
    for (std::size_t r : d.free_ranks) append("F_" + std::to_string(r));
    return out.empty() ? "1" : out;
}

Verdict verdict(const Graph& g, bool cross_check) {
    auto result = canonical_partition(g);
    if (cross_check) {
        const auto greedy = greedy_partition(g);
        if (greedy.index() != result.index()) {
            throw std::logic_error("greedy construction and complement recognizer disagree on membership");
        }
        if (const auto* p = std::get_if<CommutingPartition>(&greedy);
            p && *p != std::get<CommutingPartition>(result)) {
            throw std::logic_error("greedy construction produced a different partition");
        }
    }
    if (auto* t = std::get_if<ForbiddenTriple>(&result)) return NotEmbeddable{*t};
    auto& p = std::get<CommutingPartition>(result);
    auto group = canonical_form(decompose(p));
    return Embeddable{std::move(p), std::move(group)};
}

std::string emit_presentation(const Graph& g) {
    std::string out = "⟨";
    for (Vertex v = 0; v < g.order(); ++v) {
        if (v > 0) out += ',';
        out += 'x' + std::to_string(v);
    }
    out += " | ";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) out += ", ";
        first = false;
        const std::string a = 'x' + std::to_string(u);
        const std::string b = 'x' + std::to_string(v);
        out += a + b + '=' + b + a;
    }
    out += "⟩";
    return out;
}

}  // namespace raagv

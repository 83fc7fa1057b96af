#include "raagv/classifier.hpp"

#include <algorithm>

namespace raagv {

ForbiddenTriple make_triple(Vertex edge_u, Vertex edge_v, Vertex isolated) {
    return edge_u < edge_v ? ForbiddenTriple{edge_u, edge_v, isolated}
                           : ForbiddenTriple{edge_v, edge_u, isolated};
}

bool is_valid_triple(const Graph& g, const ForbiddenTriple& t) {
    const std::size_t n = g.order();
    if (t.a >= n || t.b >= n || t.c >= n) return false;
    if (t.a == t.b || t.a == t.c || t.b == t.c) return false;
    if (t.a > t.b) return false;
    return g.adjacent(t.a, t.b) && !g.adjacent(t.a, t.c) && !g.adjacent(t.b, t.c);
}

std::optional<ForbiddenTriple> find_forbidden_triple(const Graph& g) {
    const std::size_t n = g.order();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (!g.adjacent(a, c) && !g.adjacent(b, c)) return ForbiddenTriple{a, b, c};
            }
        }
    }
    return std::nullopt;
}

bool is_nb(const Graph& g) { return !find_forbidden_triple(g).has_value(); }

std::optional<CommutingPartition> recognize_multipartite(const Graph& g) {
    const std::size_t n = g.order();
    const Graph co = complement(g);
    CommutingPartition out;
    for (auto& comp : connected_components(co)) {
        if (!is_clique(co, comp)) return std::nullopt;
        // A singleton complement component is a vertex adjacent to all others,
        // which has eccentricity one unless it is the only vertex.
        if (comp.size() == 1 && n >= 2) {
            out.p0.push_back(comp.front());
        } else {
            out.parts.push_back(std::move(comp));
        }
    }
    return out;
}

CommutingPartition normalized(CommutingPartition p) {
    std::sort(p.p0.begin(), p.p0.end());
    for (auto& part : p.parts) std::sort(part.begin(), part.end());
    std::sort(p.parts.begin(), p.parts.end(),
              [](const VertexSet& x, const VertexSet& y) { return x.front() < y.front(); });
    return p;
}

}  // namespace raagv

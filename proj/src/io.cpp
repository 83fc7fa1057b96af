#include "raagv/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <variant>

#include <json.hpp>

namespace raagv {

LabelMap LabelMap::identity(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return LabelMap(std::move(labels));
}

LabelMap::LabelMap(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (Vertex v = 0; v < labels_.size(); ++v) {
        if (labels_[v].empty()) throw std::invalid_argument("empty vertex label");
        if (!index_.emplace(labels_[v], v).second) {
            throw std::invalid_argument("duplicate vertex label '" + labels_[v] + "'");
        }
    }
}

std::optional<Vertex> LabelMap::find(std::string_view label) const {
    const auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool LabelMap::is_identity() const {
    for (Vertex v = 0; v < labels_.size(); ++v) {
        if (labels_[v] != std::to_string(v)) return false;
    }
    return true;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos == line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        out.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

std::optional<std::size_t> parse_index(std::string_view token) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

struct LabelUse {
    std::string label;
    std::size_t line;
};

struct EdgeUse {
    std::string u;
    std::string v;
    std::size_t line;
};

}  // namespace

LabeledGraph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> count;
    std::vector<LabelUse> uses;
    std::vector<EdgeUse> edge_uses;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        const std::string_view directive = tokens[0];
        if (!count) {
            if (directive != "n") throw ParseError("expected header 'n <count>'", line_no);
            if (tokens.size() != 2) throw ParseError("header takes exactly one vertex count", line_no);
            count = parse_index(tokens[1]);
            if (!count) throw ParseError("bad vertex count '" + std::string(tokens[1]) + "'", line_no);
            continue;
        }
        if (directive == "n") {
            throw ParseError("repeated header", line_no);
        } else if (directive == "e") {
            if (tokens.size() != 3) throw ParseError("edge line takes two labels", line_no);
            if (tokens[1] == tokens[2]) throw ParseError("loop at vertex '" + std::string(tokens[1]) + "'", line_no);
            uses.push_back({std::string(tokens[1]), line_no});
            uses.push_back({std::string(tokens[2]), line_no});
            edge_uses.push_back({std::string(tokens[1]), std::string(tokens[2]), line_no});
        } else if (directive == "v") {
            if (tokens.size() != 2) throw ParseError("vertex line takes one label", line_no);
            uses.push_back({std::string(tokens[1]), line_no});
        } else {
            throw ParseError("unknown directive '" + std::string(directive) + "'", line_no);
        }
    }
    if (!count) throw ParseError("missing header 'n <count>'");
    const std::size_t n = *count;

    const bool numeric = std::all_of(uses.begin(), uses.end(), [n](const LabelUse& u) {
        const auto idx = parse_index(u.label);
        return idx && *idx < n && std::to_string(*idx) == u.label;
    });

    LabelMap labels;
    if (numeric) {
        labels = LabelMap::identity(n);
    } else {
        std::vector<std::string> names;
        std::unordered_map<std::string, Vertex> seen;
        for (const auto& use : uses) {
            if (seen.contains(use.label)) continue;
            if (names.size() == n) {
                throw ParseError("more distinct labels than the declared " + std::to_string(n) + " vertices",
                                 use.line);
            }
            seen.emplace(use.label, names.size());
            names.push_back(use.label);
        }
        // vertices never mentioned keep their index as label
        for (Vertex v = names.size(); v < n; ++v) {
            std::string name = std::to_string(v);
            while (seen.contains(name)) name += '\'';
            seen.emplace(name, v);
            names.push_back(std::move(name));
        }
        labels = LabelMap(std::move(names));
    }

    std::vector<Edge> edges;
    edges.reserve(edge_uses.size());
    for (const auto& e : edge_uses) {
        const Vertex u = *labels.find(e.u);
        const Vertex v = *labels.find(e.v);
        if (u == v) throw ParseError("loop at vertex '" + e.u + "'", e.line);
        edges.emplace_back(u, v);
    }
    return {Graph(n, edges), std::move(labels)};
}

std::string emit_edge_list(const Graph& g, const LabelMap& labels) {
    if (labels.size() != g.order()) throw std::invalid_argument("label map does not match the graph order");
    std::ostringstream os;
    os << "n " << g.order() << '\n';
    if (!labels.is_identity()) {
        for (Vertex v = 0; v < g.order(); ++v) os << "v " << labels.label(v) << '\n';
    }
    for (const auto& [u, v] : g.edges()) os << "e " << labels.label(u) << ' ' << labels.label(v) << '\n';
    return os.str();
}

std::string emit_edge_list(const Graph& g) { return emit_edge_list(g, LabelMap::identity(g.order())); }

namespace {

constexpr int kGraph6Bias = 63;
constexpr std::size_t kGraph6MaxOrder = 62;

}  // namespace

Graph parse_graph6(std::string_view bytes) {
    if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
    if (!bytes.empty() && bytes.back() == '\r') bytes.remove_suffix(1);
    if (bytes.empty()) throw ParseError("graph6: empty input");
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        const auto c = static_cast<unsigned char>(bytes[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(i) + " out of range 63..126");
    }
    const auto head = static_cast<unsigned char>(bytes[0]);
    if (head == 126) throw ParseError("graph6: orders above 62 are not supported");
    const std::size_t n = head - kGraph6Bias;
    const std::size_t bits = pair_count(n);
    const std::size_t groups = (bits + 5) / 6;
    if (bytes.size() - 1 != groups) {
        throw ParseError("graph6: expected " + std::to_string(groups) + " adjacency bytes for n=" + std::to_string(n) +
                         ", got " + std::to_string(bytes.size() - 1));
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    auto bit_at = [&](std::size_t idx) {
        const int group = static_cast<unsigned char>(bytes[1 + idx / 6]) - kGraph6Bias;
        return (group >> (5 - idx % 6)) & 1;
    };
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            if (bit_at(k)) edges.emplace_back(i, j);
        }
    }
    for (; k < groups * 6; ++k) {
        if (bit_at(k)) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6 output is limited to n <= 62");
    std::string out(1, static_cast<char>(n + kGraph6Bias));
    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kGraph6Bias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kGraph6Bias));
    return out;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

constexpr const char* kClusterColors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "teal", "magenta"};

}  // namespace

std::string emit_dot(const Graph& g, const CommutingPartition* partition, const LabelMap* labels) {
    std::ostringstream os;
    os << "graph G {\n";
    auto node = [&](Vertex v, const char* indent) {
        os << indent << v;
        if (labels) os << " [label=" << quoted(labels->label(v)) << "]";
        os << ";\n";
    };
    if (partition) {
        auto cluster = [&](const std::string& id, const std::string& title, const char* color, const VertexSet& block) {
            os << "  subgraph cluster_" << id << " {\n";
            os << "    label=" << quoted(title) << ";\n";
            os << "    color=" << color << ";\n";
            for (Vertex v : block) node(v, "    ");
            os << "  }\n";
        };
        if (!partition->p0.empty()) {
            cluster("p0", "P0", "black", partition->p0);
        }
        for (std::size_t k = 0; k < partition->parts.size(); ++k) {
            cluster(std::to_string(k + 1), "P" + std::to_string(k + 1),
                    kClusterColors[k % std::size(kClusterColors)], partition->parts[k]);
        }
    } else {
        for (Vertex v = 0; v < g.order(); ++v) node(v, "  ");
    }
    for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string verdict_json(const Verdict& v) {
    using nlohmann::ordered_json;
    ordered_json j;
    if (const auto* e = std::get_if<Embeddable>(&v)) {
        j["embeddable"] = true;
        j["witness"] = nullptr;
        j["partition"] = {{"p0", e->partition.p0}, {"parts", e->partition.parts}};
        j["group"] = {{"abelian_rank", e->group.abelian_rank}, {"free_ranks", e->group.free_ranks}};
        j["canonical"] = to_string(e->group);
    } else {
        const auto& t = std::get<NotEmbeddable>(v).witness;
        j["embeddable"] = false;
        j["witness"] = {{"edge", {t.a, t.b}}, {"nonadjacent", t.c}};
        j["partition"] = nullptr;
        j["group"] = nullptr;
        j["canonical"] = nullptr;
    }
    return j.dump(2) + '\n';
}

std::string report_json(const std::vector<CrossCheckReport>& reports) {
    using nlohmann::ordered_json;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back({{"n", r.n},
                       {"total_graphs", r.total_graphs},
                       {"nb_count", r.nb_count},
                       {"gp_count", r.gp_count},
                       {"recognizer_count", r.recognizer_count},
                       {"mismatches", r.mismatches}});
    }
    return arr.dump(2) + '\n';
}

std::string report_table(const std::vector<CrossCheckReport>& reports) {
    std::ostringstream os;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%3s %12s %10s %10s %10s %11s\n", "n", "graphs", "NB", "GP", "recognized",
                  "mismatches");
    os << buf;
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%3zu %12llu %10llu %10llu %10llu %11zu\n", r.n,
                      static_cast<unsigned long long>(r.total_graphs), static_cast<unsigned long long>(r.nb_count),
                      static_cast<unsigned long long>(r.gp_count), static_cast<unsigned long long>(r.recognizer_count),
                      r.mismatches.size());
        os << buf;
    }
    return os.str();
}

}  // namespace raagv

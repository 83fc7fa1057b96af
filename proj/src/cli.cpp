#include "raagv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "raagv/group_decomp.hpp"
#include "raagv/harness.hpp"
#include "raagv/io.hpp"
#include "raagv/partitioner.hpp"
#include "raagv/word_problem.hpp"

namespace raagv {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

LabeledGraph load(const std::string& path, const std::string& format) {
    const std::string text = slurp(path);
    bool graph6 = format == "graph6";
    if (format == "auto") graph6 = path.size() > 3 && path.ends_with(".g6");
    if (graph6) {
        Graph g = parse_graph6(text);
        auto labels = LabelMap::identity(g.order());
        return {std::move(g), std::move(labels)};
    }
    return parse_edge_list(text);
}

std::string render_set(const VertexSet& s, const LabelMap& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += labels.label(s[i]);
    }
    return out + '}';
}

std::string render_partition(const CommutingPartition& p, const LabelMap& labels) {
    std::string out = "P0=" + render_set(p.p0, labels);
    for (std::size_t k = 0; k < p.parts.size(); ++k) {
        out += " P" + std::to_string(k + 1) + '=' + render_set(p.parts[k], labels);
    }
    return out;
}

std::string render_witness(const ForbiddenTriple& t, const LabelMap& labels) {
    return "edge (" + labels.label(t.a) + "," + labels.label(t.b) + "), vertex " + labels.label(t.c) +
           " adjacent to neither";
}

struct FileArgs {
    std::string path;
    std::string format = "auto";
};

void add_file_args(CLI::App* cmd, FileArgs& f) {
    cmd->add_option("file", f.path, "graph file ('-' for stdin)")->required();
    cmd->add_option("--format", f.format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
        ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide which graph groups embed in Thompson's group V", "raagv"};
    app.require_subcommand(1);

    FileArgs classify_file;
    bool classify_json = false;
    bool classify_verify = false;
    bool classify_dot = false;
    auto* classify = app.add_subcommand("classify", "embeddability verdict with witness or partition");
    add_file_args(classify, classify_file);
    classify->add_flag("--json", classify_json, "machine-readable record");
    classify->add_flag("--verify", classify_verify, "cross-check against the greedy construction");
    classify->add_flag("--dot", classify_dot, "append a Graphviz rendering");

    FileArgs partition_file;
    bool partition_greedy = false;
    bool partition_dot = false;
    auto* partition = app.add_subcommand("partition", "commuting partition or forbidden triple");
    add_file_args(partition, partition_file);
    partition->add_flag("--greedy", partition_greedy, "use the greedy pivot construction");
    partition->add_flag("--dot", partition_dot, "emit Graphviz with one cluster per block");

    FileArgs decompose_file;
    auto* decompose_cmd = app.add_subcommand("decompose", "direct-product decomposition and presentation");
    add_file_args(decompose_cmd, decompose_file);

    FileArgs word_file;
    std::vector<std::string> word_tokens;
    auto* word = app.add_subcommand("word", "solve the word problem");
    add_file_args(word, word_file);
    word->add_option("generators", word_tokens, "signed 1-based generators, e.g. 1 2 -1 -2");

    std::size_t max_n = 6;
    bool enum_json = false;
    bool enum_serial = false;
    int enum_threads = 0;
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive cross-check over all labeled graphs");
    enumerate->add_option("--max-n", max_n, "largest vertex count")
        ->required()
        ->check(CLI::Range(std::size_t{1}, kMaxEnumerationOrder));
    enumerate->add_flag("--json", enum_json, "machine-readable records");
    enumerate->add_flag("--serial", enum_serial, "single-threaded reference scan");
    enumerate->add_option("--threads", enum_threads, "OpenMP threads (0 = default)");

    std::size_t rand_n = 0;
    double rand_p = 0.5;
    std::uint64_t rand_seed = 0;
    bool rand_nb = false;
    std::string rand_format = "edgelist";
    auto* random = app.add_subcommand("random", "emit a random graph");
    random->add_option("--n", rand_n, "vertex count")->required();
    random->add_option("--p", rand_p, "edge probability")->check(CLI::Range(0.0, 1.0));
    random->add_option("--seed", rand_seed, "generator seed")->required();
    random->add_flag("--nb", rand_nb, "sample from the embeddable class instead");
    random->add_option("--format", rand_format, "output format")->check(CLI::IsMember({"edgelist", "graph6"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInputError;
    }

    try {
        if (classify->parsed()) {
            const auto [g, labels] = load(classify_file.path, classify_file.format);
            const auto v = verdict(g, classify_verify);
            if (classify_json) {
                out << verdict_json(v);
            } else if (const auto* e = std::get_if<Embeddable>(&v)) {
                out << "embeddable: yes\n";
                out << "partition: " << render_partition(e->partition, labels) << '\n';
                out << "group: " << to_string(e->group) << '\n';
            } else {
                out << "embeddable: no\n";
                out << "witness: " << render_witness(std::get<NotEmbeddable>(v).witness, labels) << '\n';
            }
            if (classify_dot) {
                const auto* e = std::get_if<Embeddable>(&v);
                out << emit_dot(g, e ? &e->partition : nullptr, &labels);
            }
            return embeds(v) ? kExitEmbeddable : kExitNotEmbeddable;
        }

        if (partition->parsed()) {
            const auto [g, labels] = load(partition_file.path, partition_file.format);
            const auto result = partition_greedy ? greedy_partition(g) : canonical_partition(g);
            if (const auto* p = std::get_if<CommutingPartition>(&result)) {
                if (partition_dot) {
                    out << emit_dot(g, p, &labels);
                } else {
                    out << render_partition(*p, labels) << '\n';
                }
                return kExitEmbeddable;
            }
            out << "witness: " << render_witness(std::get<ForbiddenTriple>(result), labels) << '\n';
            return kExitNotEmbeddable;
        }

        if (decompose_cmd->parsed()) {
            const auto [g, labels] = load(decompose_file.path, decompose_file.format);
            const auto v = verdict(g);
            if (const auto* e = std::get_if<Embeddable>(&v)) {
                out << to_string(e->group) << '\n';
                out << emit_presentation(g) << '\n';
                return kExitEmbeddable;
            }
            out << "not a direct product of free groups; witness: "
                << render_witness(std::get<NotEmbeddable>(v).witness, labels) << '\n';
            out << emit_presentation(g) << '\n';
            return kExitNotEmbeddable;
        }

        if (word->parsed()) {
            const auto [g, labels] = load(word_file.path, word_file.format);
            std::string joined;
            for (const auto& t : word_tokens) joined += t + ' ';
            const Word w = parse_word(joined, g.order());
            NormalForm nf;
            try {
                nf = normal_form(g, w);
            } catch (const NotEmbeddableError& e) {
                err << "error: " << e.what() << '\n';
                return kExitNotEmbeddable;
            }
            out << (nf.is_identity() ? "trivial" : "nontrivial") << '\n';
            for (std::size_t i = 0; i < nf.p0.size(); ++i) {
                if (nf.abelian_exponents[i] != 0) {
                    out << "  " << labels.label(nf.p0[i]) << "^" << nf.abelian_exponents[i] << '\n';
                }
            }
            for (std::size_t k = 0; k < nf.parts.size(); ++k) {
                if (!nf.part_words[k].empty()) {
                    out << "  " << render_set(nf.parts[k], labels) << ": " << format_word(nf.part_words[k]) << '\n';
                }
            }
            return 0;
        }

        if (enumerate->parsed()) {
            std::vector<CrossCheckReport> reports;
            for (std::size_t n = 1; n <= max_n; ++n) {
                reports.push_back(enum_serial ? cross_check_serial(n) : cross_check(n, enum_threads));
            }
            out << (enum_json ? report_json(reports) : report_table(reports));
            const bool clean = std::all_of(reports.begin(), reports.end(),
                                           [](const CrossCheckReport& r) { return r.mismatches.empty(); });
            return clean ? 0 : 1;
        }

        if (random->parsed()) {
            const Graph g = rand_nb ? random_nb_graph(rand_n, rand_seed) : random_graph(rand_n, rand_p, rand_seed);
            out << (rand_format == "graph6" ? emit_graph6(g) + '\n' : emit_edge_list(g));
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace raagv

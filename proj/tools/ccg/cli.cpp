#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ccg/delta.hpp"
#include "ccg/gamma.hpp"
#include "ccg/io.hpp"
#include "ccg/lambda.hpp"
#include "ccg/oracle.hpp"
#include "ccg/projective.hpp"
#include "json.hpp"

namespace ccg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint32_t kMaxGammaExportP = 5;
constexpr std::uint32_t kMaxDeltaVerifyP = 7;

const std::map<std::string, GraphKind> kGraphNames = {
    {"lambda", GraphKind::Lambda}, {"gamma", GraphKind::Gamma}, {"delta", GraphKind::Delta}, {"m2", GraphKind::M2}};

const std::map<std::string, Format> kFormatNames = {
    {"dot", Format::Dot},   {"graphml", Format::Graphml}, {"edgelist", Format::Edgelist},
    {"csv", Format::Csv},   {"json", Format::Json},       {"json-stats", Format::Json},
    {"pbm", Format::Pbm},   {"text", Format::Text}};

std::string p_text(std::uint32_t p) { return "p = " + std::to_string(p); }

bool is_graph_format(Format f) {
    return f == Format::Dot || f == Format::Graphml || f == Format::Edgelist || f == Format::Csv ||
           f == Format::Json;
}

void write_graph(std::ostream& os, Format f, const ExportView& view) {
    switch (f) {
        case Format::Dot: write_dot(os, view); break;
        case Format::Graphml: write_graphml(os, view); break;
        case Format::Edgelist: write_edgelist(os, view); break;
        case Format::Csv: write_csv(os, view); break;
        default: throw std::logic_error("not a graph format");
    }
}

int do_build(const RunConfig& c, std::ostream& os) {
    switch (c.graph) {
        case GraphKind::Lambda: {
            const auto g = build_lambda(c.p);
            if (c.format == Format::Json) {
                write_stats_json(os, count_report(g));
            } else {
                write_graph(os, c.format, export_view(g));
            }
            break;
        }
        case GraphKind::Delta: {
            const auto g = build_delta(c.p);
            if (c.format == Format::Json) {
                write_stats_json(os, g);
            } else {
                write_graph(os, c.format, export_view(g));
            }
            break;
        }
        case GraphKind::Gamma: {
            const auto g = blow_up(build_lambda(c.p));
            if (c.format == Format::Json) {
                const auto comps = components(g);
                write_stats_json(os, g, census(comps));
            } else {
                write_graph(os, c.format, export_view(g));
            }
            break;
        }
        case GraphKind::M2:
            throw std::logic_error("unreachable");
    }
    return kExitOk;
}

struct Verdict {
    bool match = false;
    std::string summary;
    ordered_json report;
};

Verdict verify_lambda(const RunConfig& c) {
    const auto index = CompressionIndex::build(c.p, c.threads);
    const auto brute = brute_lambda(index);
    const auto synthetic = build_lambda(c.p);
    const auto cmp = compare_lambda(synthetic, brute);
    const auto diffs = compare_with_tables(count_report(synthetic));

    Verdict v;
    v.match = cmp.match && diffs.empty();
    v.summary = cmp.match ? (diffs.empty() ? "MATCH" : "MISMATCH: " + diffs.front()) : "MISMATCH: " + cmp.message;
    v.report["vertices"] = synthetic.vertex_count();
    v.report["edges"] = synthetic.edge_count();
    v.report["oracle_vertices"] = brute.vertex_count();
    v.report["oracle_edges"] = brute.edge_count();
    v.report["isomorphism"] = cmp.match;
    v.report["isomorphism_message"] = cmp.message;
    v.report["table_differences"] = diffs;
    return v;
}

Verdict verify_gamma(const RunConfig& c) {
    const auto synthetic = blow_up(build_lambda(c.p));
    const auto index = CompressionIndex::build(c.p, c.threads);
    const auto lists = generator_lists(index);
    const auto labelled = blow_up(brute_lambda(index), lists);
    const auto brute = brute_gamma(c.p, c.threads);

    const auto eq = compare_gamma_labelled(labelled, brute);
    const auto deg = compare_gamma_degrees(synthetic, brute);
    const auto cen = census(components(synthetic));

    const auto t1 = table1(c.p);
    const std::uint64_t clique_size = std::uint64_t{c.p} * c.p * c.p - c.p;
    const std::uint64_t clique_count = t1[index_of(MatrixType::G)].vertex_count;
    const bool census_ok = cen.clique_sizes.size() == 1 && cen.clique_sizes[0].first == clique_size &&
                           cen.clique_sizes[0].second == clique_count && cen.other_sizes.size() == 1;

    Verdict v;
    v.match = eq.match && deg.match && census_ok;
    if (!eq.match) {
        v.summary = "MISMATCH: " + eq.message;
    } else if (!deg.match) {
        v.summary = "MISMATCH: " + deg.message;
    } else if (!census_ok) {
        v.summary = "MISMATCH: component census differs from the expected cliques plus one component";
    } else {
        v.summary = "MATCH";
    }
    v.report["vertices"] = synthetic.vertex_count();
    v.report["edges"] = synthetic.edge_count();
    v.report["oracle_edges"] = brute.edge_count();
    v.report["labelled_equality"] = eq.match;
    v.report["labelled_message"] = eq.message;
    v.report["degree_sequence"] = deg.match;
    v.report["degree_message"] = deg.message;
    ordered_json cliques = ordered_json::array();
    for (const auto& [size, count] : cen.clique_sizes) cliques.push_back({{"size", size}, {"count", count}});
    v.report["components"] = {{"total", cen.total}, {"cliques", cliques}, {"other", cen.other_sizes}};
    v.report["census"] = census_ok;
    return v;
}

Verdict verify_delta(const RunConfig& c) {
    const ProjectivePlane plane(c.p);
    const std::uint32_t n = plane.order() * plane.order();
    std::vector<PointLinePair> pairs;
    std::vector<Mat3> images;
    for (std::uint32_t i = 0; i < n; ++i) {
        pairs.push_back(pair_at(plane, i));
        images.push_back(psi(plane, pairs.back()));
    }
    std::uint64_t checked = 0, disagreements = 0;
    std::string first;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            ++checked;
            const bool edge = delta_edge(plane, pairs[i], pairs[j]);
            const bool commute = images[i].commutes_with(images[j]);
            if (edge != commute) {
                if (disagreements++ == 0) {
                    first = to_string(plane, pairs[i]) + " and " + to_string(plane, pairs[j]) +
                            (edge ? ": edge but images do not commute" : ": images commute but no edge");
                }
            }
        }
    }
    Verdict v;
    v.match = disagreements == 0;
    v.summary = v.match ? "MATCH" : "MISMATCH: " + first;
    v.report["ordered_pairs"] = checked;
    v.report["disagreements"] = disagreements;
    if (!v.match) v.report["first_disagreement"] = first;
    return v;
}

Verdict verify_m2(const RunConfig& c) {
    const auto s = m2_star_check(c.p);
    Verdict v;
    v.match = s.match;
    v.summary = s.message;
    v.report["vertices"] = s.vertices;
    v.report["centres"] = s.centres;
    v.report["leaves"] = s.leaves;
    return v;
}

int do_verify(const RunConfig& c, std::ostream& os, std::ostream& err) {
    Verdict v;
    switch (c.graph) {
        case GraphKind::Lambda: v = verify_lambda(c); break;
        case GraphKind::Gamma: v = verify_gamma(c); break;
        case GraphKind::Delta: v = verify_delta(c); break;
        case GraphKind::M2: v = verify_m2(c); break;
    }
    ordered_json j;
    j["graph"] = to_string(c.graph);
    j["p"] = c.p;
    j["match"] = v.match;
    j["summary"] = v.summary;
    for (auto& [key, value] : v.report.items()) j[key] = value;
    os << j.dump(2) << '\n';
    err << "verify " << to_string(c.graph) << ' ' << p_text(c.p) << ": " << v.summary << '\n';
    return v.match ? kExitOk : kExitMismatch;
}

int do_incidence(const RunConfig& c, std::ostream& os) {
    const auto t = build_Tp(c.p);
    switch (c.format) {
        case Format::Text: write_incidence_text(os, t); break;
        case Format::Csv: write_incidence_csv(os, t); break;
        case Format::Pbm: write_incidence_pbm(os, t); break;
        default: throw std::logic_error("unreachable");
    }
    return kExitOk;
}

int dispatch(const RunConfig& c, std::ostream& os, std::ostream& err) {
    switch (c.command) {
        case Command::Build: return do_build(c, os);
        case Command::Verify: return do_verify(c, os, err);
        case Command::Stats:
            write_tables_json(os, c.p);
            return kExitOk;
        case Command::Incidence: return do_incidence(c, os);
    }
    return kExitInternal;
}

unsigned threads_from_env() {
    const char* s = std::getenv("CCG_THREADS");
    if (s == nullptr || *s == '\0') return 0;
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (*end != '\0' || v == 0 || v > 1024) throw UsageError(std::string("CCG_THREADS must be 1..1024, got '") + s + "'");
    return static_cast<unsigned>(v);
}

}  // namespace

const char* to_string(GraphKind g) {
    switch (g) {
        case GraphKind::Lambda: return "lambda";
        case GraphKind::Gamma: return "gamma";
        case GraphKind::Delta: return "delta";
        case GraphKind::M2: return "m2";
    }
    return "?";
}

const char* to_string(Format f) {
    switch (f) {
        case Format::Dot: return "dot";
        case Format::Graphml: return "graphml";
        case Format::Edgelist: return "edgelist";
        case Format::Csv: return "csv";
        case Format::Json: return "json";
        case Format::Pbm: return "pbm";
        case Format::Text: return "text";
    }
    return "?";
}

void validate(const RunConfig& c) {
    if (!is_prime(c.p)) throw UsageError(p_text(c.p) + " is not prime");
    if (c.threads == 0) throw UsageError("thread count must be positive");
    auto bad_format = [&c]() {
        return UsageError(std::string("format ") + to_string(c.format) + " is not available here");
    };
    switch (c.command) {
        case Command::Build:
            if (c.graph == GraphKind::M2) throw UsageError("build supports lambda, gamma and delta");
            if (!is_graph_format(c.format)) throw bad_format();
            if (c.graph == GraphKind::Gamma && c.format != Format::Json && c.p > kMaxGammaExportP) {
                throw UsageError("gamma edge export is limited to p <= " + std::to_string(kMaxGammaExportP) +
                                 "; use --format json-stats");
            }
            break;
        case Command::Verify: {
            if (c.format != Format::Json) throw bad_format();
            std::uint32_t limit = 0;
            switch (c.graph) {
                case GraphKind::Lambda: limit = kMaxLambdaOracleP; break;
                case GraphKind::Gamma: limit = kMaxGammaOracleP; break;
                case GraphKind::Delta: limit = kMaxDeltaVerifyP; break;
                case GraphKind::M2: limit = kMaxLambdaOracleP; break;
            }
            if (c.p > limit) {
                throw UsageError(std::string("verify ") + to_string(c.graph) + " refuses " + p_text(c.p) +
                                 ": exhaustive enumeration is limited to p <= " + std::to_string(limit));
            }
            break;
        }
        case Command::Stats:
            if (c.graph != GraphKind::Lambda) throw UsageError("stats describes the lambda graph only");
            if (c.format != Format::Json) throw bad_format();
            break;
        case Command::Incidence:
            if (c.format != Format::Text && c.format != Format::Csv && c.format != Format::Pbm) throw bad_format();
            break;
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
    } catch (const UsageError& e) {
        err << "ccg: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    if (!config.output.empty()) {
        file.open(config.output, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "ccg: cannot open " << config.output << " for writing\n";
            return kExitIo;
        }
    }
    std::ostream& os = config.output.empty() ? out : file;

    int status = kExitInternal;
    try {
        status = dispatch(config, os, err);
    } catch (const std::invalid_argument& e) {
        err << "ccg: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "ccg: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    os.flush();
    if (!os) {
        err << "ccg: write failed" << (config.output.empty() ? "" : " for " + config.output) << '\n';
        return kExitIo;
    }
    return status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Commuting graphs of 3x3 matrices over GF(p)", "ccg"};
    app.require_subcommand(1);

    RunConfig config;
    std::optional<unsigned> threads;
    std::string graph_name = "lambda";
    std::string format_name;

    auto add_common = [&](CLI::App* sub, bool with_graph) {
        sub->add_option("--p", config.p, "prime modulus")->required();
        if (with_graph) {
            sub->add_option("--graph", graph_name, "lambda, gamma, delta or m2")
                ->check(CLI::IsMember({"lambda", "gamma", "delta", "m2"}));
        }
        sub->add_option("--format", format_name, "dot, graphml, edgelist, csv, json, json-stats, pbm or text")
            ->check(CLI::IsMember({"dot", "graphml", "edgelist", "csv", "json", "json-stats", "pbm", "text"}));
        sub->add_option("-o,--output", config.output, "output file (default stdout)");
        sub->add_option("--threads", threads, "worker threads (default CCG_THREADS, else hardware)");
    };
    auto* build = app.add_subcommand("build", "construct a graph and export it");
    auto* verify = app.add_subcommand("verify", "compare a construction against brute force");
    auto* stats = app.add_subcommand("stats", "closed-form vertex and neighbourhood tables as JSON");
    auto* incidence = app.add_subcommand("incidence", "the block incidence matrix T_p");
    add_common(build, true);
    add_common(verify, true);
    add_common(stats, true);
    add_common(incidence, false);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string default_format;
    if (build->parsed()) {
        config.command = Command::Build;
        default_format = "edgelist";
    } else if (verify->parsed()) {
        config.command = Command::Verify;
        default_format = "json";
    } else if (stats->parsed()) {
        config.command = Command::Stats;
        default_format = "json";
    } else {
        config.command = Command::Incidence;
        default_format = "text";
    }
    config.graph = kGraphNames.at(graph_name);
    config.format = kFormatNames.at(format_name.empty() ? default_format : format_name);

    try {
        if (threads) {
            config.threads = *threads;
        } else if (auto env = threads_from_env(); env != 0) {
            config.threads = env;
        } else {
            config.threads = std::max(1u, std::thread::hardware_concurrency());
        }
    } catch (const UsageError& e) {
        err << "ccg: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(config, out, err);
}

}  // namespace ccg::cli

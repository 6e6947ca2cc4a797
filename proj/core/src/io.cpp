#include "ccg/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "json.hpp"

namespace ccg {

using ordered_json = nlohmann::ordered_json;

ExportView export_view(const LambdaGraph& g) {
    ExportView v;
    v.name = "lambda";
    v.p = g.modulus();
    v.vertex_count = g.vertex_count();
    v.loops = true;
    v.type = [&g](std::uint64_t x) { return type_char(g.type(static_cast<VertexId>(x))); };
    v.label = [&g](std::uint64_t x) { return g.label_string(static_cast<VertexId>(x)); };
    v.edges = [&g](const ExportView::EdgeSink& sink) {
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            for (auto w : g.adjacency().neighbours(u)) {
                if (w > u) sink(u, w);
            }
        }
    };
    return v;
}

ExportView export_view(const DeltaGraph& g) {
    ExportView v;
    v.name = "delta";
    v.p = g.modulus();
    v.vertex_count = g.vertex_count();
    v.loops = true;
    v.type = [&g](std::uint64_t x) { return g.kind(static_cast<VertexId>(x)) == PairKind::B ? 'B' : 'E'; };
    v.label = [&g](std::uint64_t x) { return to_string(g.plane(), g.pair(static_cast<VertexId>(x))); };
    v.edges = [&g](const ExportView::EdgeSink& sink) {
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            for (auto w : g.adjacency().neighbours(u)) {
                if (w > u) sink(u, w);
            }
        }
    };
    return v;
}

ExportView export_view(const GammaGraph& g) {
    ExportView v;
    v.name = "gamma";
    v.p = g.modulus();
    v.vertex_count = g.vertex_count();
    v.loops = false;
    v.type = [&g](std::uint64_t x) { return type_char(g.block_type(g.block_of(x))); };
    v.label = [&g](std::uint64_t x) {
        if (g.labeling() == Labeling::Matrix) return Mat3::from_code(g.label(x), g.modulus()).to_string();
        const auto b = g.block_of(x);
        std::ostringstream os;
        os << type_char(g.block_type(b)) << '#' << b << '.' << (x - g.first_slot(b));
        return os.str();
    };
    v.edges = [&g](const ExportView::EdgeSink& sink) { g.for_each_edge(sink); };
    return v;
}

const char* type_colour(char type) {
    switch (type) {
        case 'A': return "#bdbdbd";
        case 'B': return "#1f77b4";
        case 'C': return "#ff7f0e";
        case 'D': return "#2ca02c";
        case 'E': return "#d62728";
        case 'F': return "#9467bd";
        case 'G': return "#8c564b";
        case 'H': return "#e377c2";
        default: return "#000000";
    }
}

namespace {

std::string escape_quoted(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string escape_xml(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// Rows are neighbour types, columns vertex types, both in A..H order.
ordered_json matrix_json(const NeighbourhoodTable& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t) rows.push_back(row);
    return rows;
}

}  // namespace

void write_dot(std::ostream& os, const ExportView& g) {
    os << "graph " << g.name << "_p" << g.p << " {\n";
    os << "  node [style=filled];\n";
    for (std::uint64_t v = 0; v < g.vertex_count; ++v) {
        const char t = g.type(v);
        os << "  " << v << " [label=\"" << escape_quoted(g.label(v)) << "\", type=\"" << t << "\", fillcolor=\""
           << type_colour(t) << "\"];\n";
    }
    if (g.loops) {
        for (std::uint64_t v = 0; v < g.vertex_count; ++v) os << "  " << v << " -- " << v << ";\n";
    }
    g.edges([&os](std::uint64_t u, std::uint64_t v) { os << "  " << u << " -- " << v << ";\n"; });
    os << "}\n";
}

void write_graphml(std::ostream& os, const ExportView& g) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
       << "  <key id=\"type\" for=\"node\" attr.name=\"type\" attr.type=\"string\"/>\n"
       << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
       << "  <graph id=\"" << g.name << "_p" << g.p << "\" edgedefault=\"undirected\">\n";
    for (std::uint64_t v = 0; v < g.vertex_count; ++v) {
        os << "    <node id=\"n" << v << "\"><data key=\"type\">" << g.type(v) << "</data><data key=\"label\">"
           << escape_xml(g.label(v)) << "</data></node>\n";
    }
    if (g.loops) {
        for (std::uint64_t v = 0; v < g.vertex_count; ++v) {
            os << "    <edge source=\"n" << v << "\" target=\"n" << v << "\"/>\n";
        }
    }
    g.edges([&os](std::uint64_t u, std::uint64_t v) {
        os << "    <edge source=\"n" << u << "\" target=\"n" << v << "\"/>\n";
    });
    os << "  </graph>\n</graphml>\n";
}

void write_edgelist(std::ostream& os, const ExportView& g) {
    os << "# graph " << g.name << '\n'
       << "# p " << g.p << '\n'
       << "# vertices " << g.vertex_count << '\n'
       << "# loops " << (g.loops ? "implicit" : "none") << '\n';
    g.edges([&os](std::uint64_t u, std::uint64_t v) { os << u << ' ' << v << '\n'; });
}

void write_csv(std::ostream& os, const ExportView& g) {
    os << "source,target\n";
    g.edges([&os](std::uint64_t u, std::uint64_t v) { os << u << ',' << v << '\n'; });
}

EdgeList read_edgelist(std::istream& is) {
    EdgeList out;
    bool have_vertices = false;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&lineno](const std::string& what) {
        throw std::runtime_error("edgelist line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string hash, key, value;
            ls >> hash >> key >> value;
            auto number = [&](auto parse) {
                try {
                    std::size_t used = 0;
                    auto n = parse(value, &used);
                    if (used != value.size()) fail("malformed " + key + " header");
                    return n;
                } catch (const std::logic_error&) {
                    fail("malformed " + key + " header");
                }
                return decltype(parse(value, nullptr)){};
            };
            if (key == "graph") {
                out.graph = value;
            } else if (key == "p") {
                out.p = static_cast<std::uint32_t>(
                    number([](const std::string& t, std::size_t* n) { return std::stoul(t, n); }));
            } else if (key == "vertices") {
                out.vertex_count = number([](const std::string& t, std::size_t* n) { return std::stoull(t, n); });
                have_vertices = true;
            } else if (key == "loops") {
                if (value != "implicit" && value != "none") fail("loops must be implicit or none");
                out.loops = value == "implicit";
            }
            continue;
        }
        std::uint64_t u = 0, v = 0;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest)) fail("expected two vertex ids");
        if (!have_vertices) fail("edge before the vertices header");
        if (u >= out.vertex_count || v >= out.vertex_count) fail("vertex id out of range");
        if (u == v) fail("loop listed explicitly");
        out.edges.emplace_back(u, v);
    }
    if (!have_vertices) throw std::runtime_error("edgelist: missing vertices header");
    return out;
}

// ---------------------------------------------------------------------------

void write_stats_json(std::ostream& os, const CountReport& r) {
    ordered_json j;
    j["graph"] = "lambda";
    j["p"] = r.p;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["loops"] = r.loops;
    ordered_json counts = ordered_json::object();
    for (auto t : kAllTypes) counts[std::string(1, type_char(t))] = r.counts[index_of(t)];
    j["counts"] = counts;
    j["neighborhood"] = matrix_json(r.neighbourhood);
    os << j.dump(2) << '\n';
}

void write_stats_json(std::ostream& os, const DeltaGraph& g) {
    std::uint64_t b = 0, e = 0, deg_b = 0, deg_e = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.kind(v) == PairKind::B) {
            ++b;
            deg_b = g.adjacency().degree(v);
        } else {
            ++e;
            deg_e = g.adjacency().degree(v);
        }
    }
    ordered_json j;
    j["graph"] = "delta";
    j["p"] = g.modulus();
    j["vertices"] = g.vertex_count();
    j["edges"] = g.adjacency().edge_count();
    j["loops"] = g.vertex_count();
    j["counts"] = {{"B", b}, {"E", e}};
    j["degrees"] = {{"B", deg_b}, {"E", deg_e}};
    os << j.dump(2) << '\n';
}

void write_stats_json(std::ostream& os, const GammaGraph& g, const ComponentCensus& census) {
    ordered_json j;
    j["graph"] = "gamma";
    j["p"] = g.modulus();
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["loops"] = 0;
    ordered_json cliques = ordered_json::array();
    for (const auto& [size, count] : census.clique_sizes) cliques.push_back({{"size", size}, {"count", count}});
    j["components"] = {{"total", census.total}, {"cliques", cliques}, {"other", census.other_sizes}};
    os << j.dump(2) << '\n';
}

void write_tables_json(std::ostream& os, std::uint32_t p) {
    const auto t1 = table1(p);
    const auto t2 = table2(p);
    ordered_json j;
    j["p"] = p;
    ordered_json types = ordered_json::object();
    std::uint64_t mass = 0;
    for (auto t : kAllTypes) {
        const auto& s = t1[index_of(t)];
        mass += s.vertex_count * s.generator_count;
        types[std::string(1, type_char(t))] = {
            {"vertices", s.vertex_count}, {"generators", s.generator_count}, {"dimension", s.dimension}};
    }
    j["table1"] = types;
    j["table2"] = matrix_json(t2);
    j["mass"] = mass;
    j["matrices"] = matrix_space_size(p);
    os << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

void write_incidence_text(std::ostream& os, const IncidenceMatrix& m) {
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) os << (c ? " " : "") << int(m(r, c));
        os << '\n';
    }
}

void write_incidence_csv(std::ostream& os, const IncidenceMatrix& m) {
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) os << (c ? "," : "") << int(m(r, c));
        os << '\n';
    }
}

void write_incidence_pbm(std::ostream& os, const IncidenceMatrix& m) {
    os << "P1\n" << m.size() << ' ' << m.size() << '\n';
    write_incidence_text(os, m);
}

}  // namespace ccg

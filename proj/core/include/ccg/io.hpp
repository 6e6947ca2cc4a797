#pragma once

// Text exporters (DOT, GraphML, edge list, CSV, JSON statistics, incidence
// matrices) and the edge-list reader.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ccg/delta.hpp"
#include "ccg/gamma.hpp"
#include "ccg/lambda.hpp"
#include "ccg/projective.hpp"

namespace ccg {

/// Uniform read-only view used by the graph writers.
struct ExportView {
    using EdgeSink = std::function<void(std::uint64_t, std::uint64_t)>;

    std::string name;
    std::uint32_t p = 0;
    std::uint64_t vertex_count = 0;
    /// Every vertex carries a loop that is not listed among the edges.
    bool loops = false;
    std::function<char(std::uint64_t)> type;
    std::function<std::string(std::uint64_t)> label;
    /// Streams each edge once as (u, v), u < v, in ascending order.
    std::function<void(const EdgeSink&)> edges;
};

ExportView export_view(const LambdaGraph& g);
ExportView export_view(const DeltaGraph& g);
ExportView export_view(const GammaGraph& g);

/// Fill colour used for a type letter in DOT output.
const char* type_colour(char type);

void write_dot(std::ostream& os, const ExportView& g);
void write_graphml(std::ostream& os, const ExportView& g);
/// '#' header lines (graph, p, vertices, loops) then one "u v" line per edge.
void write_edgelist(std::ostream& os, const ExportView& g);
/// "source,target" header then one line per edge.
void write_csv(std::ostream& os, const ExportView& g);

struct EdgeList {
    std::string graph;
    std::uint32_t p = 0;
    std::uint64_t vertex_count = 0;
    bool loops = false;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

/// Parses write_edgelist output. Throws std::runtime_error with the line
/// number on malformed input.
EdgeList read_edgelist(std::istream& is);

/// Measured statistics as JSON. The lambda "neighborhood" entry is an 8x8
/// array: row X, column Y holds the number of type-X neighbours of a type-Y
/// vertex, types in A..H order.
void write_stats_json(std::ostream& os, const CountReport& report);
void write_stats_json(std::ostream& os, const DeltaGraph& g);
void write_stats_json(std::ostream& os, const GammaGraph& g, const ComponentCensus& census);

/// Closed-form vertex and neighbourhood tables as JSON.
void write_tables_json(std::ostream& os, std::uint32_t p);

/// Rows of space-separated 0/1 digits.
void write_incidence_text(std::ostream& os, const IncidenceMatrix& m);
void write_incidence_csv(std::ostream& os, const IncidenceMatrix& m);
/// Plain (ASCII) PBM, 1 = black.
void write_incidence_pbm(std::ostream& os, const IncidenceMatrix& m);

}  // namespace ccg

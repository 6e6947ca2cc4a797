#pragma once

// The unital compressed commuting graph of M_3(GF(p)), assembled from the
// point-line graph by attaching the remaining vertex types.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccg/classify.hpp"
#include "ccg/delta.hpp"
#include "ccg/graph.hpp"

namespace ccg {

/// Canonical label, interpreted by vertex type. Pair ids are Delta vertex
/// ids (point * (p^2+p+1) + line).
///
///   A  unit, all zero
///   B  a = point, b = line (off the line)
///   E  a = point, b = line (on the line)
///   C  a < b < c, the pair ids of the three B corners of its triangle
///   F  a = B pair id, b = E pair id of its B-E edge
///   H  a = B pair id, b = index < p(p-1)/2
///   D  a = E pair id, b = index < p-1
///   G  a = index < (p^3-p)(p^3-p^2)/3
///
/// Graphs built from matrices instead carry the generating matrix code of a
/// representative in (a, b) as low and high 32 bits.
struct VertexLabel {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t c = 0;

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

struct LambdaVertex {
    MatrixType type = MatrixType::A;
    VertexLabel label;

    friend bool operator==(const LambdaVertex&, const LambdaVertex&) = default;
};

enum class Labeling : std::uint8_t { Synthetic, Matrix };

/// Vertices with type and label; adjacency excluding loops. Every vertex has
/// a loop, so loops are implicit.
class LambdaGraph {
public:
    LambdaGraph(std::uint32_t p, Labeling labeling, std::vector<LambdaVertex> vertices, Adjacency adjacency,
                std::shared_ptr<const ProjectivePlane> plane = nullptr);

    std::uint32_t modulus() const { return p_; }
    Labeling labeling() const { return labeling_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return adjacency_.edge_count(); }
    std::size_t loop_count() const { return vertices_.size(); }

    const std::vector<LambdaVertex>& vertices() const { return vertices_; }
    const LambdaVertex& vertex(VertexId v) const { return vertices_[v]; }
    MatrixType type(VertexId v) const { return vertices_[v].type; }
    const Adjacency& adjacency() const { return adjacency_; }
    bool adjacent(VertexId u, VertexId v) const { return u == v || adjacency_.has_edge(u, v); }

    /// Lookup by (type, label). B and E vertices of a synthetic graph sit at
    /// their pair ids; every other type must form one block sorted by label,
    /// as build_lambda produces them.
    std::optional<VertexId> find(MatrixType type, const VertexLabel& label) const;

    /// Matrix code of the representative (matrix-labelled graphs).
    std::uint64_t representative(VertexId v) const;

    /// Plane used by synthetic labels (null for matrix-labelled graphs).
    const ProjectivePlane* plane() const { return plane_.get(); }

    /// Human-readable canonical label, e.g. "B(1,0,0)|[0,1,0]".
    std::string label_string(VertexId v) const;

private:
    std::uint32_t p_;
    Labeling labeling_;
    std::vector<LambdaVertex> vertices_;
    Adjacency adjacency_;
    std::shared_ptr<const ProjectivePlane> plane_;
    TypeTable<std::pair<VertexId, VertexId>> type_range_{};
    bool type_ranges_sorted_ = false;
};

/// Sorted triples of B vertices (Delta ids) that are pairwise adjacent; these
/// anchor the type-C vertices. Empty when p = 2, where no type-C vertex exists
/// and the step is skipped.
std::vector<std::array<VertexId, 3>> enumerate_b_triangles(const DeltaGraph& delta);

/// Every 3-clique of the B-induced subgraph, regardless of p.
std::vector<std::array<VertexId, 3>> b_subgraph_triangles(const DeltaGraph& delta);

/// Construction:
///   1. the point-line graph as the B/E core
///   2. one C vertex per B-triangle joined to its corners (skipped for p = 2)
///   3. one F vertex per B-E edge joined to both ends
///   4. p(p-1)/2 H vertices per B vertex, each joined to it
///   5. p-1 D vertices per E vertex, each joined to it
///   6. (p^3-p)(p^3-p^2)/3 isolated G vertices
///   7. one A vertex joined to everything
///   8. loops everywhere (implicit)
LambdaGraph build_lambda(std::uint32_t p);
LambdaGraph build_lambda(const DeltaGraph& delta);

/// Measured per-type counts and neighbourhood profile.
struct CountReport {
    std::uint32_t p = 0;
    TypeTable<std::uint64_t> counts{};
    /// neighbourhood[X][Y] = type-X neighbours (self included) of a type-Y
    /// vertex; columns of absent types are zero.
    NeighbourhoodTable neighbourhood{};
    TypeTable<bool> present{};
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t loops = 0;
};

/// Throws std::runtime_error("neighbourhood table violated: ...") when two vertices of
/// the same type have different typed neighbourhoods.
CountReport count_report(const LambdaGraph& g);

/// Empty when the report equals the closed-form tables; otherwise one line
/// per disagreement.
std::vector<std::string> compare_with_tables(const CountReport& report);

}  // namespace ccg

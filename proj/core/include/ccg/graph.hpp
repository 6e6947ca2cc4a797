#pragma once

// Compressed sparse row adjacency for undirected graphs.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ccg {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple adjacency without loops. Loops, where a graph has them,
/// are carried by the owning graph type. Neighbour lists are sorted.
class Adjacency {
public:
    Adjacency() = default;

    /// Builds from an edge list; each undirected edge listed once in either
    /// orientation. Duplicate edges and loops are rejected.
    static Adjacency from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return targets_.size() / 2; }

    std::span<const VertexId> neighbours(VertexId v) const {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(VertexId u, VertexId v) const;

    /// Edges (u, v) with u < v, ascending.
    std::vector<Edge> edges() const;

    friend bool operator==(const Adjacency&, const Adjacency&) = default;

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<VertexId> targets_;
};

}  // namespace ccg

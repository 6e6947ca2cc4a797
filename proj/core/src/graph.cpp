#include "ccg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccg {

Adjacency Adjacency::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Adjacency g;
    g.offsets_.assign(vertex_count + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop in edge list at vertex " + std::to_string(u));
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < vertex_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(g.offsets_.back());
    std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }
    for (std::size_t i = 0; i < vertex_count; ++i) {
        auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
        auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) {
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(i));
        }
    }
    return g;
}

bool Adjacency::has_edge(VertexId u, VertexId v) const {
    const auto n = neighbours(u);
    return std::binary_search(n.begin(), n.end(), v);
}

std::vector<Edge> Adjacency::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (auto v : neighbours(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

}  // namespace ccg

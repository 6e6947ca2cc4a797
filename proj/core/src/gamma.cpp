#include "ccg/gamma.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ccg {

GammaGraph::GammaGraph(std::uint32_t p, Labeling labeling, std::vector<MatrixType> block_types,
                       std::vector<std::uint64_t> block_sizes, Adjacency blocks,
                       std::vector<std::uint64_t> slot_labels)
    : p_(p),
      labeling_(labeling),
      types_(std::move(block_types)),
      blocks_(std::move(blocks)),
      slot_labels_(std::move(slot_labels)) {
    if (types_.size() != block_sizes.size() || blocks_.vertex_count() != types_.size()) {
        throw std::invalid_argument("gamma graph: block arrays differ in length");
    }
    offsets_.assign(types_.size() + 1, 0);
    for (std::size_t b = 0; b < types_.size(); ++b) {
        if (block_sizes[b] == 0) throw std::invalid_argument("gamma graph: empty block");
        offsets_[b + 1] = offsets_[b] + block_sizes[b];
    }
    if (labeling_ == Labeling::Matrix && slot_labels_.size() != offsets_.back()) {
        throw std::invalid_argument("gamma graph: one label per slot required");
    }
}

VertexId GammaGraph::block_of(std::uint64_t slot) const {
    if (slot >= vertex_count()) throw std::out_of_range("gamma graph: slot out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), slot);
    return static_cast<VertexId>(it - offsets_.begin() - 1);
}

std::uint64_t GammaGraph::label(std::uint64_t slot) const {
    if (labeling_ != Labeling::Matrix) throw std::logic_error("synthetic slots carry no matrix");
    return slot_labels_.at(slot);
}

std::uint64_t GammaGraph::block_degree(VertexId b) const {
    std::uint64_t d = block_size(b) - 1;
    for (auto nb : blocks_.neighbours(b)) d += block_size(nb);
    return d;
}

std::uint64_t GammaGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (VertexId b = 0; b < block_count(); ++b) twice += block_size(b) * block_degree(b);
    return twice / 2;
}

std::vector<std::uint64_t> GammaGraph::degree_sequence() const {
    std::vector<std::uint64_t> out;
    out.reserve(vertex_count());
    for (VertexId b = 0; b < block_count(); ++b) out.insert(out.end(), block_size(b), block_degree(b));
    std::sort(out.begin(), out.end());
    return out;
}

void GammaGraph::collect_upper_neighbours(std::uint64_t u, std::vector<std::uint64_t>& out) const {
    out.clear();
    for_each_neighbour(u, [&](std::uint64_t v) {
        if (v > u) out.push_back(v);
    });
    std::sort(out.begin(), out.end());
}

namespace {

GammaGraph blow_up_impl(const LambdaGraph& g, std::span<const std::vector<std::uint64_t>> generators) {
    const bool labelled = !generators.empty();
    if (labelled && generators.size() != g.vertex_count()) {
        throw std::invalid_argument("blow_up: one generator list per vertex required");
    }
    const auto t1 = table1(g.modulus());

    // Drop the central vertex; renumber the rest.
    constexpr VertexId kDropped = UINT32_MAX;
    std::vector<VertexId> block_id(g.vertex_count(), kDropped);
    std::vector<MatrixType> types;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint64_t> labels;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto t = g.type(v);
        if (t == MatrixType::A) continue;
        block_id[v] = static_cast<VertexId>(types.size());
        types.push_back(t);
        if (labelled) {
            sizes.push_back(generators[v].size());
            labels.insert(labels.end(), generators[v].begin(), generators[v].end());
        } else {
            sizes.push_back(t1[index_of(t)].generator_count);
        }
    }

    std::vector<Edge> edges;
    for (const auto& [u, v] : g.adjacency().edges()) {
        if (block_id[u] == kDropped || block_id[v] == kDropped) continue;
        edges.emplace_back(block_id[u], block_id[v]);
    }
    auto adj = Adjacency::from_edges(types.size(), edges);
    return GammaGraph(g.modulus(), labelled ? Labeling::Matrix : Labeling::Synthetic, std::move(types),
                      std::move(sizes), std::move(adj), std::move(labels));
}

}  // namespace

GammaGraph blow_up(const LambdaGraph& g) { return blow_up_impl(g, {}); }

GammaGraph blow_up(const LambdaGraph& g, std::span<const std::vector<std::uint64_t>> generators) {
    if (generators.empty()) throw std::invalid_argument("blow_up: generator lists are empty");
    return blow_up_impl(g, generators);
}

std::vector<Component> components(const GammaGraph& g) {
    // Slots of a block are mutually adjacent, so connectivity is decided on
    // blocks; a block stands for all of its slots.
    const std::size_t n = g.block_count();
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&parent](VertexId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [u, v] : g.blocks().edges()) {
        auto ru = find(u), rv = find(v);
        if (ru == rv) continue;
        if (ru < rv) std::swap(ru, rv);
        parent[ru] = rv;  // smaller id wins, so roots are first blocks
    }

    std::map<VertexId, Component> by_root;
    std::vector<bool> clique_ok(n, true);
    for (VertexId b = 0; b < n; ++b) {
        const auto r = find(b);
        auto& c = by_root[r];
        if (c.size == 0) c.first_slot = g.first_slot(r);
        c.size += g.block_size(b);
    }
    for (VertexId b = 0; b < n; ++b) {
        const auto& c = by_root[find(b)];
        if (g.block_degree(b) != c.size - 1) clique_ok[find(b)] = false;
    }
    std::vector<Component> out;
    out.reserve(by_root.size());
    for (auto& [root, c] : by_root) {
        c.is_clique = clique_ok[root];
        out.push_back(c);
    }
    return out;
}

ComponentCensus census(std::span<const Component> comps) {
    ComponentCensus c;
    std::map<std::uint64_t, std::uint64_t> cliques;
    for (const auto& comp : comps) {
        ++c.total;
        if (comp.is_clique) {
            ++cliques[comp.size];
        } else {
            c.other_sizes.push_back(comp.size);
        }
    }
    c.clique_sizes.assign(cliques.begin(), cliques.end());
    std::sort(c.other_sizes.rbegin(), c.other_sizes.rend());
    return c;
}

}  // namespace ccg

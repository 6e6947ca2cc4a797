#pragma once

// The ordinary commuting graph of M_3(GF(p)), obtained by blowing up every
// non-central vertex of the compressed graph into a clique of its generators.

#include <cstdint>
#include <span>
#include <vector>

#include "ccg/lambda.hpp"

namespace ccg {

/// Adjacency is implicit: slots of one block form a clique, and slots of
/// adjacent blocks are fully joined. A block is a non-central vertex of the
/// compressed graph; its slots are its generators.
class GammaGraph {
public:
    GammaGraph(std::uint32_t p, Labeling labeling, std::vector<MatrixType> block_types,
               std::vector<std::uint64_t> block_sizes, Adjacency blocks, std::vector<std::uint64_t> slot_labels);

    std::uint32_t modulus() const { return p_; }
    Labeling labeling() const { return labeling_; }

    std::uint64_t vertex_count() const { return offsets_.back(); }
    std::uint64_t edge_count() const;

    std::size_t block_count() const { return types_.size(); }
    MatrixType block_type(VertexId b) const { return types_[b]; }
    std::uint64_t block_size(VertexId b) const { return offsets_[b + 1] - offsets_[b]; }
    std::uint64_t first_slot(VertexId b) const { return offsets_[b]; }
    const Adjacency& blocks() const { return blocks_; }
    VertexId block_of(std::uint64_t slot) const;

    /// Matrix code of a slot (matrix-labelled mode only).
    std::uint64_t label(std::uint64_t slot) const;

    std::uint64_t degree(std::uint64_t slot) const { return block_degree(block_of(slot)); }
    std::uint64_t block_degree(VertexId b) const;

    template <typename Fn>
    void for_each_neighbour(std::uint64_t slot, Fn&& fn) const {
        const VertexId b = block_of(slot);
        for (auto s = offsets_[b]; s < offsets_[b + 1]; ++s) {
            if (s != slot) fn(s);
        }
        for (auto nb : blocks_.neighbours(b)) {
            for (auto s = offsets_[nb]; s < offsets_[nb + 1]; ++s) fn(s);
        }
    }

    /// Calls fn(u, v) once per edge with u < v, ordered by u then v.
    template <typename Fn>
    void for_each_edge(Fn&& fn) const {
        for (std::uint64_t u = 0; u < vertex_count(); ++u) {
            collect_upper_neighbours(u, scratch_);
            for (auto v : scratch_) fn(u, v);
        }
    }

    /// Sorted degree of every slot.
    std::vector<std::uint64_t> degree_sequence() const;

private:
    void collect_upper_neighbours(std::uint64_t u, std::vector<std::uint64_t>& out) const;

    std::uint32_t p_;
    Labeling labeling_;
    std::vector<MatrixType> types_;
    std::vector<std::uint64_t> offsets_;
    Adjacency blocks_;
    std::vector<std::uint64_t> slot_labels_;
    mutable std::vector<std::uint64_t> scratch_;
};

/// Synthetic slots: gen_(X) per vertex of type X.
GammaGraph blow_up(const LambdaGraph& g);

/// Matrix-labelled slots: generators[v] lists the generator matrix codes of
/// vertex v, so the result is labelled by actual matrices.
GammaGraph blow_up(const LambdaGraph& g, std::span<const std::vector<std::uint64_t>> generators);

struct Component {
    std::uint64_t size = 0;
    bool is_clique = false;
    std::uint64_t first_slot = 0;

    friend bool operator==(const Component&, const Component&) = default;
};

/// Connected components ordered by their smallest slot.
std::vector<Component> components(const GammaGraph& g);

/// Summary of a component list: cliques grouped by size plus the
/// non-clique components.
struct ComponentCensus {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> clique_sizes;  // (size, count), ascending size
    std::vector<std::uint64_t> other_sizes;                              // descending
    std::uint64_t total = 0;
};

ComponentCensus census(std::span<const Component> comps);

}  // namespace ccg

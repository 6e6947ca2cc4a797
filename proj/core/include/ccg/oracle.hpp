#pragma once

// Brute-force ground truth over all of M_3(GF(p)), and comparison against the
// synthetic builders.

#include <cstdint>
#include <string>
#include <vector>

#include "ccg/gamma.hpp"
#include "ccg/lambda.hpp"

namespace ccg {

/// Largest p accepted by the Lambda oracle.
inline constexpr std::uint32_t kMaxLambdaOracleP = 5;
/// Largest p accepted by the Gamma oracle.
inline constexpr std::uint32_t kMaxGammaOracleP = 3;

struct CompressionEntry {
    SubringKey key;
    MatrixType type = MatrixType::A;
    /// Ascending matrix codes whose own key is `key`.
    std::vector<std::uint64_t> generators;
    std::uint64_t representative() const { return generators.front(); }
};

/// Every matrix of M_3(GF(p)) grouped by the subring it generates.
/// Entries are ordered by (type, representative code).
class CompressionIndex {
public:
    std::uint32_t modulus() const { return p_; }
    const std::vector<CompressionEntry>& entries() const { return entries_; }
    const CompressionEntry& entry(std::size_t i) const { return entries_[i]; }
    std::size_t size() const { return entries_.size(); }
    /// Entry index of the key generated by the matrix with this code.
    std::uint32_t entry_of(std::uint64_t code) const { return entry_of_code_[code]; }
    /// Sum of generator-list sizes; p^9 when complete.
    std::uint64_t generator_mass() const;

    /// Enumerates codes 0 .. p^9 - 1 split into `threads` contiguous ranges.
    /// Throws std::invalid_argument when p is not prime or above kMaxLambdaOracleP.
    static CompressionIndex build(std::uint32_t p, unsigned threads = 1);

private:
    std::uint32_t p_ = 0;
    std::vector<CompressionEntry> entries_;
    std::vector<std::uint32_t> entry_of_code_;
};

/// Vertex i corresponds to index.entry(i); its label holds the
/// representative code. Adjacency is tested between representatives.
LambdaGraph brute_lambda(const CompressionIndex& index);
LambdaGraph brute_lambda(std::uint32_t p, unsigned threads = 1);

/// Generator lists in vertex order, for blow_up in matrix-labelled mode.
std::vector<std::vector<std::uint64_t>> generator_lists(const CompressionIndex& index);

/// Empty when commuting of representatives agrees with commuting of every
/// pair of generators; otherwise a description of the first violation.
std::string check_compression_edges(const CompressionIndex& index);

struct LambdaComparison {
    bool match = false;
    std::string message;
    /// mapping[v] = synthetic vertex matched to oracle vertex v.
    std::vector<VertexId> mapping;
};

/// Builds the explicit isomorphism from the oracle graph onto the synthetic
/// one: B/E by phi, C by the three B neighbours, F by its B and E
/// neighbours, H and D in order within each anchor group, G in order, A to
/// A. Cardinalities are checked first; afterwards every adjacency is
/// compared and the first difference reported.
LambdaComparison compare_lambda(const LambdaGraph& synthetic, const LambdaGraph& brute);

/// All p^9 - p non-central matrices, one slot each in code order, joined
/// when distinct and commuting. Throws std::invalid_argument above
/// kMaxGammaOracleP.
GammaGraph brute_gamma(std::uint32_t p, unsigned threads = 1);

struct GammaComparison {
    bool match = false;
    std::string message;
};

/// Equality as matrix-labelled graphs.
GammaComparison compare_gamma_labelled(const GammaGraph& a, const GammaGraph& b);

/// Equality of sorted degree sequences.
GammaComparison compare_gamma_degrees(const GammaGraph& a, const GammaGraph& b);

struct StarCheck {
    bool match = false;
    std::uint64_t vertices = 0;
    std::uint64_t centres = 0;
    std::uint64_t leaves = 0;
    std::string message;
};

/// Compressed commuting graph of M_2(GF(p)) by enumerating all p^4
/// matrices; matches when it is a star with p^2 + p + 1 leaves.
StarCheck m2_star_check(std::uint32_t p);

}  // namespace ccg

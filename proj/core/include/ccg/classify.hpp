#pragma once

// The eight similarity-invariant matrix types (A)-(H), per-type counts and
// the closed-form vertex and neighbourhood tables of the compressed graph.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ccg/matrix.hpp"

namespace ccg {

enum class MatrixType : std::uint8_t { A = 0, B, C, D, E, F, G, H };

inline constexpr std::size_t kTypeCount = 8;
inline constexpr std::array<MatrixType, kTypeCount> kAllTypes = {
    MatrixType::A, MatrixType::B, MatrixType::C, MatrixType::D,
    MatrixType::E, MatrixType::F, MatrixType::G, MatrixType::H};

constexpr std::size_t index_of(MatrixType t) { return static_cast<std::size_t>(t); }
constexpr char type_char(MatrixType t) { return static_cast<char>('A' + index_of(t)); }
std::optional<MatrixType> type_from_char(char c);

/// Values indexed by MatrixType.
template <typename T>
using TypeTable = std::array<T, kTypeCount>;

/// Classification by (deg m_A, number of distinct eigenvalues in GF(p)),
/// splitting (3,1) into D or H by whether p_A splits.
MatrixType classify_type(const Mat3& a);

/// Number of single generators of the subring: members whose own key is
/// `key`. Enumerates all p^dim members.
std::uint64_t generator_count(const SubringKey& key);

/// True iff a and b are similar. For 3x3 matrices the pair
/// (characteristic, minimal polynomial) fixes the rational canonical form.
bool similar(const Mat3& a, const Mat3& b);

/// |<A>_1 intersected with the similarity orbit of A|.
std::uint64_t omega(const Mat3& a);

/// |GL_n(GF(p))|
std::uint64_t gl_order(int n, std::uint32_t p);

/// |C(A) intersected with GL_3|, by enumerating the centralizer's solution space.
std::uint64_t centralizer_units(const Mat3& a);

/// |GL_3| / |C(A) intersected with GL_3|
std::uint64_t orbit_size(const Mat3& a);

struct TypeStats {
    std::uint64_t vertex_count = 0;
    std::uint64_t generator_count = 0;
    int dimension = 0;

    friend bool operator==(const TypeStats&, const TypeStats&) = default;
};

/// Closed-form vertex counts, generator counts and dimensions per type.
/// Type C has no vertices when p = 2. Throws std::invalid_argument for
/// non-prime p.
TypeTable<TypeStats> table1(std::uint32_t p);

/// N[X][Y]: number of type-X neighbours (the vertex itself included via its
/// loop) of any type-Y vertex.
using NeighbourhoodTable = TypeTable<TypeTable<std::uint64_t>>;

/// Closed-form neighbourhood profile. Row C is all zero when p = 2 since
/// no type-C vertex exists. Throws std::invalid_argument for non-prime p.
NeighbourhoodTable table2(std::uint32_t p);

}  // namespace ccg

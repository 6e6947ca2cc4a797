#pragma once

// The point-line graph on PG(2,p) x PG(2,p)* that models the subgraph of
// the compressed commuting graph induced on type (B) and (E) vertices,
// and the correspondence between point-line pairs and those subrings.

#include <cstdint>
#include <string>
#include <vector>

#include "ccg/graph.hpp"
#include "ccg/matrix.hpp"
#include "ccg/projective.hpp"

namespace ccg {

enum class PairKind : std::uint8_t { B, E };

/// (P, L) by indices into a ProjectivePlane. Kind B when P is off L, E when on.
struct PointLinePair {
    std::uint32_t point = 0;
    std::uint32_t line = 0;
    PairKind kind = PairKind::B;

    friend auto operator<=>(const PointLinePair&, const PointLinePair&) = default;
};

PointLinePair point_line_pair(const ProjectivePlane& plane, std::uint32_t point, std::uint32_t line);

/// Lexicographic position of a pair: point * order + line.
inline std::uint32_t pair_index(const ProjectivePlane& plane, const PointLinePair& a) {
    return a.point * plane.order() + a.line;
}
PointLinePair pair_at(const ProjectivePlane& plane, std::uint32_t index);

std::string to_string(const ProjectivePlane& plane, const PointLinePair& a);

/// Edge rule on point-line pairs, as the disjunction of
///   (a) P1 = P2 and L1 = L2
///   (b) P1 in L1, P2 in L2, and P1 = P2 or L1 = L2
///   (c) P1 != P2, L1 != L2, P2 in L1 and L2, P1 in L2 \ L1
///   (d) P1 != P2, L1 != L2, P1 in L1 and L2, P2 in L1 \ L2
///   (e) P1 != P2, L1 != L2, P1 in L2 \ L1, P2 in L1 \ L2
bool delta_edge(const ProjectivePlane& plane, const PointLinePair& a, const PointLinePair& b);

/// Equivalent rule for distinct pairs: P2 in L1 and P1 in L2.
bool delta_edge_fast(const ProjectivePlane& plane, const PointLinePair& a, const PointLinePair& b);

/// All (p^2+p+1)^2 pairs in lexicographic order; vertex v is pair_at(v).
/// Every vertex carries a loop, which is implicit.
class DeltaGraph {
public:
    explicit DeltaGraph(ProjectivePlane plane, Adjacency adjacency);

    const ProjectivePlane& plane() const { return plane_; }
    std::uint32_t modulus() const { return plane_.modulus(); }
    std::size_t vertex_count() const { return adjacency_.vertex_count(); }
    PointLinePair pair(VertexId v) const { return pair_at(plane_, v); }
    PairKind kind(VertexId v) const { return pair(v).kind; }
    /// Neighbours other than the vertex itself.
    const Adjacency& adjacency() const { return adjacency_; }
    bool adjacent(VertexId u, VertexId v) const { return u == v || adjacency_.has_edge(u, v); }

private:
    ProjectivePlane plane_;
    Adjacency adjacency_;
};

/// Neighbour candidates are generated from incidence lists (points on L1
/// times lines through P1) and every kept edge is confirmed by delta_edge.
DeltaGraph build_delta(std::uint32_t p);

/// Kind B: the rank-1 idempotent u v^T / (v^T u). Kind E: the rank-1
/// nilpotent u v^T. u is the normalized point vector, v the normalized
/// line functional, so the image is P and the kernel is L.
Mat3 psi(const ProjectivePlane& plane, const PointLinePair& a);

/// Inverse of subring_key(psi(.)) on subrings of dimension 2: the
/// (image, kernel) of the unique rank-1 idempotent (type B) or of any rank-1
/// nilpotent (type E) in the subring. Throws std::invalid_argument("phi
/// undefined") for any other subring.
PointLinePair phi(const ProjectivePlane& plane, const SubringKey& key);

}  // namespace ccg

#include "ccg/delta.hpp"

#include <stdexcept>

namespace ccg {

PointLinePair point_line_pair(const ProjectivePlane& plane, std::uint32_t point, std::uint32_t line) {
    return {point, line, plane.incident(point, line) ? PairKind::E : PairKind::B};
}

PointLinePair pair_at(const ProjectivePlane& plane, std::uint32_t index) {
    return point_line_pair(plane, index / plane.order(), index % plane.order());
}

std::string to_string(const ProjectivePlane& plane, const PointLinePair& a) {
    return to_string(plane.point(a.point)) + "|" + to_string(plane.line(a.line));
}

bool delta_edge(const ProjectivePlane& plane, const PointLinePair& a, const PointLinePair& b) {
    const auto on = [&plane](std::uint32_t pt, std::uint32_t ln) { return plane.incident(pt, ln); };
    const std::uint32_t p1 = a.point, l1 = a.line, p2 = b.point, l2 = b.line;
    const bool same_p = p1 == p2;
    const bool same_l = l1 == l2;

    const bool cond_a = same_p && same_l;
    const bool cond_b = on(p1, l1) && on(p2, l2) && (same_p || same_l);
    const bool cond_c = !same_p && !same_l && on(p2, l1) && on(p2, l2) && on(p1, l2) && !on(p1, l1);
    const bool cond_d = !same_p && !same_l && on(p1, l1) && on(p1, l2) && on(p2, l1) && !on(p2, l2);
    const bool cond_e = !same_p && !same_l && on(p1, l2) && !on(p1, l1) && on(p2, l1) && !on(p2, l2);
    return cond_a || cond_b || cond_c || cond_d || cond_e;
}

bool delta_edge_fast(const ProjectivePlane& plane, const PointLinePair& a, const PointLinePair& b) {
    return plane.incident(b.point, a.line) && plane.incident(a.point, b.line);
}

DeltaGraph::DeltaGraph(ProjectivePlane plane, Adjacency adjacency)
    : plane_(std::move(plane)), adjacency_(std::move(adjacency)) {
    if (adjacency_.vertex_count() != std::size_t{plane_.order()} * plane_.order()) {
        throw std::invalid_argument("delta graph needs one vertex per point-line pair");
    }
}

DeltaGraph build_delta(std::uint32_t p) {
    ProjectivePlane plane(p);
    const std::uint32_t n = plane.order();
    std::vector<Edge> edges;
    edges.reserve(std::size_t{n} * n * (p + 1) * (p + 1) / 2);
    for (std::uint32_t u = 0; u < n * n; ++u) {
        const PointLinePair a = pair_at(plane, u);
        for (auto p2 : plane.points_on(a.line)) {
            for (auto l2 : plane.lines_through(a.point)) {
                const std::uint32_t v = p2 * n + l2;
                if (v <= u) continue;
                if (!delta_edge(plane, a, point_line_pair(plane, p2, l2))) {
                    throw std::logic_error("delta: incidence candidate rejected by edge rule");
                }
                edges.emplace_back(u, v);
            }
        }
    }
    Adjacency adj = Adjacency::from_edges(std::size_t{n} * n, edges);
    return DeltaGraph(std::move(plane), std::move(adj));
}

Mat3 psi(const ProjectivePlane& plane, const PointLinePair& a) {
    const auto p = plane.modulus();
    const Vec3& u = plane.point(a.point).coords;
    const Vec3& v = plane.line(a.line).dual;
    std::uint64_t dot = 0;
    for (int i = 0; i < 3; ++i) dot += std::uint64_t{u[i]} * v[i];
    dot %= p;
    const std::uint64_t scale = a.kind == PairKind::B ? inv_mod(static_cast<std::uint32_t>(dot), p) : 1;
    Mat3 m(p);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m.set(i, j, static_cast<std::int64_t>(scale * u[i] % p * v[j] % p));
    }
    return m;
}

PointLinePair phi(const ProjectivePlane& plane, const SubringKey& key) {
    if (key.dimension != 2 || key.p != plane.modulus()) throw std::invalid_argument("phi undefined");
    const auto members = key.members();
    const Mat3* nilpotent = nullptr;
    for (const auto& m : members) {
        if (m.rank() != 1) continue;
        const Mat3 sq = m * m;
        if (sq == m) {
            auto [img, ker] = image_kernel(m);
            return point_line_pair(plane, plane.point_index(img.basis.front()), plane.line_of(ker));
        }
        if (sq.is_zero() && nilpotent == nullptr) nilpotent = &m;
    }
    if (nilpotent == nullptr) throw std::invalid_argument("phi undefined");
    auto [img, ker] = image_kernel(*nilpotent);
    return point_line_pair(plane, plane.point_index(img.basis.front()), plane.line_of(ker));
}

}  // namespace ccg

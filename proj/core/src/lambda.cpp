#include "ccg/lambda.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccg {

namespace {

std::vector<std::vector<VertexId>> b_neighbour_lists(const DeltaGraph& delta) {
    std::vector<std::vector<VertexId>> out(delta.vertex_count());
    for (VertexId u = 0; u < delta.vertex_count(); ++u) {
        if (delta.kind(u) != PairKind::B) continue;
        for (auto v : delta.adjacency().neighbours(u)) {
            if (delta.kind(v) == PairKind::B) out[u].push_back(v);
        }
    }
    return out;
}

}  // namespace

LambdaGraph::LambdaGraph(std::uint32_t p, Labeling labeling, std::vector<LambdaVertex> vertices,
                         Adjacency adjacency, std::shared_ptr<const ProjectivePlane> plane)
    : p_(p),
      labeling_(labeling),
      vertices_(std::move(vertices)),
      adjacency_(std::move(adjacency)),
      plane_(std::move(plane)) {
    if (adjacency_.vertex_count() != vertices_.size()) {
        throw std::invalid_argument("lambda graph: adjacency and vertex list sizes differ");
    }
    // Record per-type ranges; lookups are only valid when each type forms one
    // sorted block.
    TypeTable<bool> seen{};
    bool ok = true;
    for (VertexId v = 0; v < vertices_.size(); ++v) {
        const auto type = vertices_[v].type;
        if (plane_ && (type == MatrixType::B || type == MatrixType::E)) continue;
        const auto t = index_of(type);
        if (!seen[t]) {
            seen[t] = true;
            type_range_[t] = {v, v + 1};
            continue;
        }
        if (type_range_[t].second != v || !(vertices_[v - 1].label < vertices_[v].label)) ok = false;
        type_range_[t].second = v + 1;
    }
    type_ranges_sorted_ = ok;
}

std::optional<VertexId> LambdaGraph::find(MatrixType type, const VertexLabel& label) const {
    if (plane_ && (type == MatrixType::B || type == MatrixType::E)) {
        // The point-line core occupies ids 0 .. order^2 - 1 in pair order.
        const std::uint32_t n = plane_->order();
        if (label.a >= n || label.b >= n || label.c != 0) return std::nullopt;
        const VertexId v = label.a * n + label.b;
        if (v >= vertices_.size() || vertices_[v].type != type || vertices_[v].label != label) return std::nullopt;
        return v;
    }
    if (!type_ranges_sorted_) throw std::logic_error("lambda graph: vertex blocks are not sorted by label");
    const auto [first, last] = type_range_[index_of(type)];
    auto lo = vertices_.begin() + first;
    auto hi = vertices_.begin() + last;
    auto it = std::lower_bound(lo, hi, label, [](const LambdaVertex& x, const VertexLabel& l) { return x.label < l; });
    if (it == hi || it->label != label) return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
}

std::uint64_t LambdaGraph::representative(VertexId v) const {
    if (labeling_ != Labeling::Matrix) throw std::logic_error("synthetic vertices carry no matrix");
    const auto& l = vertices_[v].label;
    return (std::uint64_t{l.b} << 32) | l.a;
}

std::string LambdaGraph::label_string(VertexId v) const {
    const auto& [type, l] = vertices_[v];
    std::ostringstream os;
    os << type_char(type);
    if (labeling_ == Labeling::Matrix) {
        os << Mat3::from_code(representative(v), p_);
        return os.str();
    }
    auto pair = [this](std::uint32_t id) { return to_string(*plane_, pair_at(*plane_, id)); };
    switch (type) {
        case MatrixType::A:
            break;
        case MatrixType::B:
        case MatrixType::E:
            os << to_string(plane_->point(l.a)) << '|' << to_string(plane_->line(l.b));
            break;
        case MatrixType::C:
            os << '{' << pair(l.a) << ' ' << pair(l.b) << ' ' << pair(l.c) << '}';
            break;
        case MatrixType::F:
            os << '{' << pair(l.a) << ' ' << pair(l.b) << '}';
            break;
        case MatrixType::H:
        case MatrixType::D:
            os << '{' << pair(l.a) << "}#" << l.b;
            break;
        case MatrixType::G:
            os << '#' << l.a;
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<std::array<VertexId, 3>> b_subgraph_triangles(const DeltaGraph& delta) {
    const auto nb = b_neighbour_lists(delta);
    std::vector<std::array<VertexId, 3>> out;
    std::vector<VertexId> common;
    for (VertexId u = 0; u < nb.size(); ++u) {
        const auto& nu = nb[u];
        for (auto v : nu) {
            if (v <= u) continue;
            const auto& nv = nb[v];
            common.clear();
            auto from_u = std::upper_bound(nu.begin(), nu.end(), v);
            auto from_v = std::upper_bound(nv.begin(), nv.end(), v);
            std::set_intersection(from_u, nu.end(), from_v, nv.end(), std::back_inserter(common));
            for (auto w : common) out.push_back({u, v, w});
        }
    }
    return out;
}

std::vector<std::array<VertexId, 3>> enumerate_b_triangles(const DeltaGraph& delta) {
    if (delta.modulus() == 2) return {};
    return b_subgraph_triangles(delta);
}

LambdaGraph build_lambda(std::uint32_t p) { return build_lambda(build_delta(p)); }

LambdaGraph build_lambda(const DeltaGraph& delta) {
    const std::uint32_t p = delta.modulus();
    const auto& plane = delta.plane();
    const auto t1 = table1(p);
    const std::size_t core = delta.vertex_count();

    std::vector<LambdaVertex> vertices;
    std::uint64_t total = 0;
    for (const auto& s : t1) total += s.vertex_count;
    if (total >= UINT32_MAX) throw std::length_error("lambda graph too large for 32-bit vertex ids");
    vertices.reserve(total);

    std::vector<Edge> edges = delta.adjacency().edges();

    // 1. B/E core.
    for (VertexId v = 0; v < core; ++v) {
        const auto pr = delta.pair(v);
        vertices.push_back({pr.kind == PairKind::B ? MatrixType::B : MatrixType::E, {pr.point, pr.line, 0}});
    }
    auto add = [&vertices](MatrixType t, VertexLabel l) {
        vertices.push_back({t, l});
        return static_cast<VertexId>(vertices.size() - 1);
    };

    // 2. C per B-triangle.
    for (const auto& tri : enumerate_b_triangles(delta)) {
        const VertexId c = add(MatrixType::C, {tri[0], tri[1], tri[2]});
        for (auto b : tri) edges.emplace_back(b, c);
    }

    // 3. F per B-E edge.
    for (VertexId u = 0; u < core; ++u) {
        if (delta.kind(u) != PairKind::B) continue;
        for (auto v : delta.adjacency().neighbours(u)) {
            if (delta.kind(v) != PairKind::E) continue;
            const VertexId f = add(MatrixType::F, {u, v, 0});
            edges.emplace_back(u, f);
            edges.emplace_back(v, f);
        }
    }

    // 4. H groups on B, 5. D groups on E.
    const std::uint32_t h_per_b = p * (p - 1) / 2;
    const std::uint32_t d_per_e = p - 1;
    for (VertexId u = 0; u < core; ++u) {
        if (delta.kind(u) != PairKind::B) continue;
        for (std::uint32_t i = 0; i < h_per_b; ++i) edges.emplace_back(u, add(MatrixType::H, {u, i, 0}));
    }
    for (VertexId u = 0; u < core; ++u) {
        if (delta.kind(u) != PairKind::E) continue;
        for (std::uint32_t i = 0; i < d_per_e; ++i) edges.emplace_back(u, add(MatrixType::D, {u, i, 0}));
    }

    // 6. isolated G.
    const auto g_count = t1[index_of(MatrixType::G)].vertex_count;
    for (std::uint32_t i = 0; i < g_count; ++i) add(MatrixType::G, {i, 0, 0});

    // 7. A joined to all.
    const VertexId a = add(MatrixType::A, {});
    for (VertexId v = 0; v < a; ++v) edges.emplace_back(v, a);

    // 8. loops are implicit.
    Adjacency adj = Adjacency::from_edges(vertices.size(), edges);
    edges.clear();
    edges.shrink_to_fit();
    return LambdaGraph(p, Labeling::Synthetic, std::move(vertices), std::move(adj),
                       std::make_shared<const ProjectivePlane>(plane));
}

// ---------------------------------------------------------------------------

CountReport count_report(const LambdaGraph& g) {
    CountReport r;
    r.p = g.modulus();
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.loops = g.loop_count();

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto y = index_of(g.type(v));
        TypeTable<std::uint64_t> profile{};
        profile[y] = 1;  // loop
        for (auto u : g.adjacency().neighbours(v)) ++profile[index_of(g.type(u))];

        if (!r.present[y]) {
            r.present[y] = true;
            for (std::size_t x = 0; x < kTypeCount; ++x) r.neighbourhood[x][y] = profile[x];
        } else {
            for (std::size_t x = 0; x < kTypeCount; ++x) {
                if (r.neighbourhood[x][y] != profile[x]) {
                    std::ostringstream os;
                    os << "neighbourhood table violated: vertex " << g.label_string(v) << " has " << profile[x] << " neighbours of type "
                       << type_char(kAllTypes[x]) << ", earlier type-" << type_char(kAllTypes[y]) << " vertices have "
                       << r.neighbourhood[x][y];
                    throw std::runtime_error(os.str());
                }
            }
        }
        ++r.counts[y];
    }
    return r;
}

std::vector<std::string> compare_with_tables(const CountReport& report) {
    std::vector<std::string> diffs;
    const auto t1 = table1(report.p);
    const auto t2 = table2(report.p);
    for (auto y : kAllTypes) {
        const auto iy = index_of(y);
        if (report.counts[iy] != t1[iy].vertex_count) {
            std::ostringstream os;
            os << "|V_" << type_char(y) << "| measured " << report.counts[iy] << ", expected " << t1[iy].vertex_count;
            diffs.push_back(os.str());
        }
        if (!report.present[iy]) continue;
        for (auto x : kAllTypes) {
            const auto ix = index_of(x);
            if (report.neighbourhood[ix][iy] != t2[ix][iy]) {
                std::ostringstream os;
                os << "N(" << type_char(x) << ',' << type_char(y) << ") measured " << report.neighbourhood[ix][iy]
                   << ", expected " << t2[ix][iy];
                diffs.push_back(os.str());
            }
        }
    }
    return diffs;
}

}  // namespace ccg

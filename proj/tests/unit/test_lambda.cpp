#include <set>
#include <stdexcept>

#include "ccg/lambda.hpp"
#include "doctest.h"

using namespace ccg;

namespace {

std::size_t brute_b_triangles(const DeltaGraph& d) {
    std::vector<VertexId> bs;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (d.kind(v) == PairKind::B) bs.push_back(v);
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            if (!d.adjacent(bs[i], bs[j])) continue;
            for (std::size_t k = j + 1; k < bs.size(); ++k) {
                count += d.adjacent(bs[i], bs[k]) && d.adjacent(bs[j], bs[k]);
            }
        }
    }
    return count;
}

std::uint32_t rank_of(std::vector<Vec3> rows, std::uint32_t p) { return static_cast<std::uint32_t>(rref<3>(rows, p)); }

}  // namespace

TEST_CASE("build_lambda vertex counts") {
    CHECK(build_lambda(2).vertex_count() == 191);
    const auto g = build_lambda(3);
    CHECK(g.vertex_count() == 1471);
    TypeTable<std::size_t> counts{};
    for (const auto& v : g.vertices()) ++counts[index_of(v.type)];
    CHECK(counts[index_of(MatrixType::B)] == 117);
    CHECK(counts[index_of(MatrixType::E)] == 52);
    CHECK(counts[index_of(MatrixType::F)] == 468);
}

TEST_CASE("per-type counts equal the closed forms") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const auto g = build_lambda(p);
        const auto r = count_report(g);
        const auto t1 = table1(p);
        for (auto t : kAllTypes) CHECK(r.counts[index_of(t)] == t1[index_of(t)].vertex_count);
        CHECK(r.loops == g.vertex_count());
    }
}

TEST_CASE("measured neighbourhoods equal the closed forms") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto r = count_report(build_lambda(p));
        const auto diffs = compare_with_tables(r);
        for (const auto& d : diffs) MESSAGE(d);
        CHECK(diffs.empty());
    }
    const auto r2 = count_report(build_lambda(2));
    CHECK(r2.neighbourhood[index_of(MatrixType::E)][index_of(MatrixType::B)] == 3);
    const auto r3 = count_report(build_lambda(3));
    CHECK(r3.neighbourhood[index_of(MatrixType::B)][index_of(MatrixType::B)] == 13);
}

TEST_CASE("F vertices at p = 2 have degree 4 with the loop") {
    const auto g = build_lambda(2);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.type(v) != MatrixType::F) continue;
        CHECK(g.adjacency().degree(v) + 1 == 4);
        std::multiset<MatrixType> types;
        for (auto u : g.adjacency().neighbours(v)) types.insert(g.type(u));
        CHECK(types == std::multiset<MatrixType>{MatrixType::A, MatrixType::B, MatrixType::E});
    }
}

TEST_CASE("attached types are pairwise non-adjacent") {
    const std::set<MatrixType> outer{MatrixType::C, MatrixType::D, MatrixType::F, MatrixType::G, MatrixType::H};
    for (std::uint32_t p : {2u, 3u}) {
        const auto g = build_lambda(p);
        for (const auto& [u, v] : g.adjacency().edges()) {
            CHECK_FALSE((outer.count(g.type(u)) && outer.count(g.type(v))));
        }
    }
}

TEST_CASE("B-E edges number |V_F|") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto d = build_delta(p);
        std::uint64_t be = 0;
        for (const auto& [u, v] : d.adjacency().edges()) be += d.kind(u) != d.kind(v);
        CHECK(be == table1(p)[index_of(MatrixType::F)].vertex_count);
    }
}

TEST_CASE("B-triangles") {
    const auto d2 = build_delta(2);
    CHECK(enumerate_b_triangles(d2).empty());
    CHECK(b_subgraph_triangles(d2).size() == brute_b_triangles(d2));
    CHECK(brute_b_triangles(d2) == 28);

    const auto d3 = build_delta(3);
    const auto tris = enumerate_b_triangles(d3);
    CHECK(tris.size() == 234);
    CHECK(tris.size() == brute_b_triangles(d3));
    CHECK(tris.size() == table1(3)[index_of(MatrixType::C)].vertex_count);
    CHECK(std::is_sorted(tris.begin(), tris.end()));

    // Corners are the coordinate projectors of a basis: independent points,
    // each line spanned by the other two points.
    const auto& plane = d3.plane();
    for (const auto& t : tris) {
        CHECK(t[0] < t[1]);
        CHECK(t[1] < t[2]);
        std::vector<Vec3> pts;
        for (auto v : t) pts.push_back(plane.point(d3.pair(v).point).coords);
        CHECK(rank_of(pts, 3) == 3);
        for (int i = 0; i < 3; ++i) {
            const auto line = d3.pair(t[i]).line;
            for (int j = 0; j < 3; ++j) {
                CHECK(plane.incident(d3.pair(t[j]).point, line) == (i != j));
            }
        }
    }
}

TEST_CASE("labels and lookups") {
    const auto g = build_lambda(3);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& x = g.vertex(v);
        CHECK(g.find(x.type, x.label) == v);
    }
    CHECK_FALSE(g.find(MatrixType::G, {100000, 0, 0}).has_value());
    CHECK(g.label_string(0).front() == 'B');
    const auto a = g.find(MatrixType::A, {});
    REQUIRE(a.has_value());
    CHECK(g.label_string(*a) == "A");
    CHECK(g.adjacency().degree(*a) == g.vertex_count() - 1);
}

TEST_CASE("repeated builds are identical") {
    const auto a = build_lambda(3), b = build_lambda(3);
    CHECK(a.vertices() == b.vertices());
    CHECK(a.adjacency() == b.adjacency());
}

TEST_CASE("count_report rejects a non-uniform neighbourhood") {
    const auto g = build_lambda(2);
    auto edges = g.adjacency().edges();
    // Drop one edge between an F vertex and its B anchor.
    for (auto it = edges.begin(); it != edges.end(); ++it) {
        const auto tu = g.type(it->first), tv = g.type(it->second);
        if ((tu == MatrixType::B && tv == MatrixType::F) || (tu == MatrixType::F && tv == MatrixType::B)) {
            edges.erase(it);
            break;
        }
    }
    const LambdaGraph broken(2, Labeling::Synthetic, g.vertices(), Adjacency::from_edges(g.vertex_count(), edges),
                             std::make_shared<const ProjectivePlane>(*g.plane()));
    CHECK_THROWS_WITH_AS(count_report(broken), doctest::Contains("neighbourhood table violated"), std::runtime_error);
}

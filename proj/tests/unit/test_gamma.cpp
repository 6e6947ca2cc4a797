#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "ccg/gamma.hpp"
#include "doctest.h"

using namespace ccg;

namespace {

std::vector<std::vector<std::uint64_t>> materialize(const GammaGraph& g) {
    std::vector<std::vector<std::uint64_t>> adj(g.vertex_count());
    g.for_each_edge([&adj](std::uint64_t u, std::uint64_t v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    });
    for (auto& l : adj) std::sort(l.begin(), l.end());
    return adj;
}

// Components by breadth-first search over explicit slot adjacency.
std::multiset<std::pair<std::uint64_t, bool>> bfs_components(const std::vector<std::vector<std::uint64_t>>& adj) {
    std::multiset<std::pair<std::uint64_t, bool>> out;
    std::vector<bool> seen(adj.size(), false);
    for (std::uint64_t s = 0; s < adj.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::uint64_t> members;
        std::queue<std::uint64_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            members.push_back(x);
            for (auto y : adj[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    q.push(y);
                }
            }
        }
        bool clique = true;
        for (auto x : members) clique = clique && adj[x].size() == members.size() - 1;
        out.emplace(members.size(), clique);
    }
    return out;
}

}  // namespace

TEST_CASE("blow_up vertex counts") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto g = blow_up(build_lambda(p));
        CHECK(g.vertex_count() == matrix_space_size(p) - p);
        std::uint64_t mass = 0;
        const auto t1 = table1(p);
        for (auto t : kAllTypes) {
            if (t != MatrixType::A) mass += t1[index_of(t)].vertex_count * t1[index_of(t)].generator_count;
        }
        CHECK(mass == g.vertex_count());
    }
}

TEST_CASE("G vertices become isolated cliques of size p^3 - p") {
    const auto g = blow_up(build_lambda(2));
    for (VertexId b = 0; b < g.block_count(); ++b) {
        if (g.block_type(b) != MatrixType::G) continue;
        CHECK(g.block_size(b) == 6);
        CHECK(g.blocks().degree(b) == 0);
        CHECK(g.block_degree(b) == 5);
    }
}

TEST_CASE("component census") {
    const auto c2 = census(components(blow_up(build_lambda(2))));
    CHECK(c2.clique_sizes == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{6, 8}});
    CHECK(c2.other_sizes == std::vector<std::uint64_t>{462});

    const auto c3 = census(components(blow_up(build_lambda(3))));
    CHECK(c3.clique_sizes == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{24, 144}});
    CHECK(c3.other_sizes.size() == 1);
    CHECK(c3.total == 145);

    for (std::uint32_t p : {5u, 7u}) {
        const auto c = census(components(blow_up(build_lambda(p))));
        const std::uint64_t cliques = (std::uint64_t{p} * p * p - p) * (std::uint64_t{p} * p * p - p * p) / 3;
        REQUIRE(c.clique_sizes.size() == 1);
        CHECK(c.clique_sizes[0].first == std::uint64_t{p} * p * p - p);
        CHECK(c.clique_sizes[0].second == cliques);
        CHECK(c.other_sizes.size() == 1);
    }
}

TEST_CASE("implicit adjacency agrees with its materialization") {
    for (std::uint32_t p : {2u, 3u}) {
        const auto g = blow_up(build_lambda(p));
        const auto adj = materialize(g);
        std::uint64_t twice = 0;
        std::vector<std::uint64_t> degrees;
        for (std::uint64_t s = 0; s < g.vertex_count(); ++s) {
            REQUIRE(adj[s].size() == g.degree(s));
            twice += adj[s].size();
            degrees.push_back(adj[s].size());
            if (p == 2) {
                std::vector<std::uint64_t> nb;
                g.for_each_neighbour(s, [&nb](std::uint64_t x) { nb.push_back(x); });
                std::sort(nb.begin(), nb.end());
                CHECK(nb == adj[s]);
                CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            }
        }
        CHECK(twice == 2 * g.edge_count());
        std::sort(degrees.begin(), degrees.end());
        CHECK(degrees == g.degree_sequence());

        std::multiset<std::pair<std::uint64_t, bool>> fast;
        for (const auto& c : components(g)) fast.emplace(c.size, c.is_clique);
        CHECK(fast == bfs_components(adj));
    }
}

TEST_CASE("components are ordered by first slot and cover every slot") {
    const auto g = blow_up(build_lambda(3));
    const auto comps = components(g);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        total += comps[i].size;
        if (i) CHECK(comps[i - 1].first_slot < comps[i].first_slot);
    }
    CHECK(total == g.vertex_count());
}

TEST_CASE("synthetic slots carry no matrix") {
    const auto g = blow_up(build_lambda(2));
    CHECK(g.labeling() == Labeling::Synthetic);
    CHECK_THROWS_AS(g.label(0), std::logic_error);
    CHECK_THROWS_AS(g.block_of(g.vertex_count()), std::out_of_range);
}

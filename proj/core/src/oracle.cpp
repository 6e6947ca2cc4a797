#include "ccg/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace ccg {

namespace {

// Runs fn(begin, end, slot) on `threads` contiguous slices of [0, n).
template <typename Fn>
void parallel_ranges(std::uint64_t n, unsigned threads, Fn fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || n < threads) {
        fn(std::uint64_t{0}, n, 0u);
        return;
    }
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = std::min(n, t * chunk);
        const std::uint64_t hi = std::min(n, lo + chunk);
        pool.emplace_back([=, &fn] { fn(lo, hi, t); });
    }
}

void require_oracle_p(std::uint32_t p, std::uint32_t limit, const char* what) {
    require_prime(p);
    if (p > limit) {
        std::ostringstream os;
        os << what << " refuses p = " << p << ": exhaustive enumeration is limited to p <= " << limit;
        throw std::invalid_argument(os.str());
    }
}

std::vector<Edge> commuting_pairs(const std::vector<Mat3>& mats, unsigned threads) {
    const std::size_t n = mats.size();
    threads = std::max(1u, threads);
    std::vector<std::vector<Edge>> local(threads);
    // Rows are dealt round-robin so the triangular workload stays balanced.
    auto work = [&](unsigned t) {
        for (std::size_t i = t; i < n; i += threads) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (mats[i].commutes_with(mats[j])) {
                    local[t].emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
                }
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    std::vector<Edge> edges;
    for (auto& l : local) edges.insert(edges.end(), l.begin(), l.end());
    return edges;
}

}  // namespace

std::uint64_t CompressionIndex::generator_mass() const {
    std::uint64_t n = 0;
    for (const auto& e : entries_) n += e.generators.size();
    return n;
}

CompressionIndex CompressionIndex::build(std::uint32_t p, unsigned threads) {
    require_oracle_p(p, kMaxLambdaOracleP, "lambda oracle");
    const std::uint64_t n = matrix_space_size(p);

    std::vector<SubringKey> keys(n);
    parallel_ranges(n, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        for (auto code = lo; code < hi; ++code) keys[code] = subring_key(Mat3::from_code(code, p));
    });

    CompressionIndex index;
    index.p_ = p;
    index.entry_of_code_.resize(n);
    std::unordered_map<SubringKey, std::uint32_t> seen;
    for (std::uint64_t code = 0; code < n; ++code) {
        auto [it, fresh] = seen.try_emplace(keys[code], static_cast<std::uint32_t>(index.entries_.size()));
        if (fresh) index.entries_.push_back({keys[code], MatrixType::A, {}});
        index.entries_[it->second].generators.push_back(code);
        index.entry_of_code_[code] = it->second;
    }
    keys.clear();
    keys.shrink_to_fit();

    for (auto& e : index.entries_) e.type = classify_type(Mat3::from_code(e.representative(), p));

    std::vector<std::uint32_t> order(index.entries_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        const auto& a = index.entries_[x];
        const auto& b = index.entries_[y];
        if (a.type != b.type) return a.type < b.type;
        return a.representative() < b.representative();
    });
    std::vector<std::uint32_t> rank(order.size());
    std::vector<CompressionEntry> sorted;
    sorted.reserve(order.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = r;
        sorted.push_back(std::move(index.entries_[order[r]]));
    }
    index.entries_ = std::move(sorted);
    for (auto& e : index.entry_of_code_) e = rank[e];
    return index;
}

LambdaGraph brute_lambda(const CompressionIndex& index) {
    const auto p = index.modulus();
    std::vector<LambdaVertex> vertices;
    std::vector<Mat3> reps;
    vertices.reserve(index.size());
    reps.reserve(index.size());
    for (const auto& e : index.entries()) {
        const auto code = e.representative();
        vertices.push_back({e.type, {static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(code >> 32), 0}});
        reps.push_back(Mat3::from_code(code, p));
    }
    const auto edges = commuting_pairs(reps, 1);
    auto adj = Adjacency::from_edges(vertices.size(), edges);
    return LambdaGraph(p, Labeling::Matrix, std::move(vertices), std::move(adj));
}

LambdaGraph brute_lambda(std::uint32_t p, unsigned threads) {
    return brute_lambda(CompressionIndex::build(p, threads));
}

std::vector<std::vector<std::uint64_t>> generator_lists(const CompressionIndex& index) {
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(index.size());
    for (const auto& e : index.entries()) out.push_back(e.generators);
    return out;
}

std::string check_compression_edges(const CompressionIndex& index) {
    const auto p = index.modulus();
    std::vector<std::vector<Mat3>> gens;
    gens.reserve(index.size());
    for (const auto& e : index.entries()) {
        auto& g = gens.emplace_back();
        for (auto code : e.generators) g.push_back(Mat3::from_code(code, p));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const bool rep = gens[i].front().commutes_with(gens[j].front());
            for (const auto& a : gens[i]) {
                for (const auto& b : gens[j]) {
                    if (a.commutes_with(b) != rep) {
                        std::ostringstream os;
                        os << "generators " << a << " and " << b << (rep ? " do not commute" : " commute")
                           << " while their representatives" << (rep ? " do" : " do not");
                        return os.str();
                    }
                }
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

LambdaComparison compare_lambda(const LambdaGraph& synthetic, const LambdaGraph& brute) {
    LambdaComparison out;
    auto fail = [&out](const std::string& msg) {
        out.match = false;
        out.message = msg;
        out.mapping.clear();
        return out;
    };

    if (synthetic.modulus() != brute.modulus()) return fail("graphs are over different fields");
    if (brute.labeling() != Labeling::Matrix) return fail("oracle graph is not matrix-labelled");
    const ProjectivePlane* plane = synthetic.plane();
    if (plane == nullptr) return fail("synthetic graph carries no projective plane");

    TypeTable<std::uint64_t> cs{}, cb{};
    for (const auto& v : synthetic.vertices()) ++cs[index_of(v.type)];
    for (const auto& v : brute.vertices()) ++cb[index_of(v.type)];
    if (synthetic.vertex_count() != brute.vertex_count() || cs != cb) {
        std::ostringstream os;
        os << "cardinality mismatch: synthetic " << synthetic.vertex_count() << " vertices, oracle "
           << brute.vertex_count();
        for (auto t : kAllTypes) {
            if (cs[index_of(t)] != cb[index_of(t)]) {
                os << "; type " << type_char(t) << " " << cs[index_of(t)] << " vs " << cb[index_of(t)];
            }
        }
        return fail(os.str());
    }

    const auto p = brute.modulus();
    const std::size_t n = brute.vertex_count();
    constexpr VertexId kUnset = UINT32_MAX;
    std::vector<VertexId> map(n, kUnset);
    std::unordered_map<VertexId, std::uint32_t> next_in_group;
    std::uint32_t next_g = 0;

    auto typed_neighbours = [&brute](VertexId v, MatrixType t) {
        std::vector<VertexId> r;
        for (auto u : brute.adjacency().neighbours(v)) {
            if (brute.type(u) == t) r.push_back(u);
        }
        return r;
    };
    auto pair_id_of = [&](VertexId v) {
        const auto key = subring_key(Mat3::from_code(brute.representative(v), p));
        return pair_index(*plane, phi(*plane, key));
    };
    auto describe = [&brute](VertexId v) { return brute.label_string(v); };

    // B and E first, since every other type is placed through them.
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    std::stable_partition(order.begin(), order.end(), [&](VertexId v) {
        return brute.type(v) == MatrixType::B || brute.type(v) == MatrixType::E;
    });

    for (auto v : order) {
        const auto t = brute.type(v);
        std::optional<VertexId> target;
        switch (t) {
            case MatrixType::A:
                target = synthetic.find(MatrixType::A, {});
                break;
            case MatrixType::B:
            case MatrixType::E: {
                const auto id = pair_id_of(v);
                const auto pr = pair_at(*plane, id);
                target = synthetic.find(t, {pr.point, pr.line, 0});
                break;
            }
            case MatrixType::C: {
                auto bs = typed_neighbours(v, MatrixType::B);
                if (bs.size() != 3) return fail("oracle vertex " + describe(v) + " does not have three B neighbours");
                std::array<VertexId, 3> ids{map[bs[0]], map[bs[1]], map[bs[2]]};
                std::sort(ids.begin(), ids.end());
                target = synthetic.find(t, {ids[0], ids[1], ids[2]});
                break;
            }
            case MatrixType::F: {
                auto bs = typed_neighbours(v, MatrixType::B);
                auto es = typed_neighbours(v, MatrixType::E);
                if (bs.size() != 1 || es.size() != 1) {
                    return fail("oracle vertex " + describe(v) + " does not have one B and one E neighbour");
                }
                target = synthetic.find(t, {map[bs[0]], map[es[0]], 0});
                break;
            }
            case MatrixType::H:
            case MatrixType::D: {
                auto anchors = typed_neighbours(v, t == MatrixType::H ? MatrixType::B : MatrixType::E);
                if (anchors.size() != 1) return fail("oracle vertex " + describe(v) + " has no unique anchor");
                const VertexId a = map[anchors[0]];
                target = synthetic.find(t, {a, next_in_group[a]++, 0});
                break;
            }
            case MatrixType::G:
                target = synthetic.find(t, {next_g++, 0, 0});
                break;
        }
        if (!target) return fail("no synthetic counterpart for oracle vertex " + describe(v));
        map[v] = *target;
    }

    std::vector<VertexId> inverse(n, kUnset);
    for (VertexId v = 0; v < n; ++v) {
        if (inverse[map[v]] != kUnset) {
            return fail("oracle vertices " + describe(inverse[map[v]]) + " and " + describe(v) +
                        " map to the same synthetic vertex " + synthetic.label_string(map[v]));
        }
        inverse[map[v]] = v;
    }

    for (const auto& [u, v] : brute.adjacency().edges()) {
        if (!synthetic.adjacent(map[u], map[v])) {
            return fail("adjacency differs: synthetic " + synthetic.label_string(map[u]) + " -- " +
                        synthetic.label_string(map[v]) + " missing, oracle has " + describe(u) + " -- " +
                        describe(v));
        }
    }
    for (const auto& [u, v] : synthetic.adjacency().edges()) {
        if (!brute.adjacent(inverse[u], inverse[v])) {
            return fail("adjacency differs: synthetic " + synthetic.label_string(u) + " -- " +
                        synthetic.label_string(v) + " has no oracle counterpart " + describe(inverse[u]) + " -- " +
                        describe(inverse[v]));
        }
    }

    out.match = true;
    out.message = "MATCH";
    out.mapping = std::move(map);
    return out;
}

// ---------------------------------------------------------------------------

GammaGraph brute_gamma(std::uint32_t p, unsigned threads) {
    require_oracle_p(p, kMaxGammaOracleP, "gamma oracle");
    const std::uint64_t n = matrix_space_size(p);
    std::vector<Mat3> mats;
    std::vector<std::uint64_t> labels;
    std::vector<MatrixType> types;
    for (std::uint64_t code = 0; code < n; ++code) {
        auto m = Mat3::from_code(code, p);
        if (m.is_scalar()) continue;
        types.push_back(classify_type(m));
        mats.push_back(m);
        labels.push_back(code);
    }
    const auto edges = commuting_pairs(mats, threads);
    auto adj = Adjacency::from_edges(mats.size(), edges);
    std::vector<std::uint64_t> sizes(mats.size(), 1);
    return GammaGraph(p, Labeling::Matrix, std::move(types), std::move(sizes), std::move(adj), std::move(labels));
}

GammaComparison compare_gamma_labelled(const GammaGraph& a, const GammaGraph& b) {
    GammaComparison out;
    if (a.labeling() != Labeling::Matrix || b.labeling() != Labeling::Matrix) {
        out.message = "both graphs must be matrix-labelled";
        return out;
    }
    if (a.modulus() != b.modulus() || a.vertex_count() != b.vertex_count()) {
        std::ostringstream os;
        os << "vertex counts differ: " << a.vertex_count() << " vs " << b.vertex_count();
        out.message = os.str();
        return out;
    }
    const auto p = a.modulus();
    std::unordered_map<std::uint64_t, std::uint64_t> slot_in_b;
    slot_in_b.reserve(b.vertex_count());
    for (std::uint64_t s = 0; s < b.vertex_count(); ++s) slot_in_b.emplace(b.label(s), s);

    std::vector<std::uint64_t> na, nb;
    for (std::uint64_t s = 0; s < a.vertex_count(); ++s) {
        const auto code = a.label(s);
        auto it = slot_in_b.find(code);
        if (it == slot_in_b.end()) {
            out.message = "matrix " + Mat3::from_code(code, p).to_string() + " is missing from the second graph";
            return out;
        }
        na.clear();
        nb.clear();
        a.for_each_neighbour(s, [&](std::uint64_t x) { na.push_back(a.label(x)); });
        b.for_each_neighbour(it->second, [&](std::uint64_t x) { nb.push_back(b.label(x)); });
        std::sort(na.begin(), na.end());
        std::sort(nb.begin(), nb.end());
        if (na != nb) {
            std::vector<std::uint64_t> diff;
            std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(diff));
            const bool in_a = std::binary_search(na.begin(), na.end(), diff.front());
            out.message = "adjacency differs at " + Mat3::from_code(code, p).to_string() + ": neighbour " +
                          Mat3::from_code(diff.front(), p).to_string() + " only in the " +
                          (in_a ? "first" : "second") + " graph";
            return out;
        }
    }
    out.match = true;
    out.message = "MATCH";
    return out;
}

GammaComparison compare_gamma_degrees(const GammaGraph& a, const GammaGraph& b) {
    GammaComparison out;
    const auto da = a.degree_sequence();
    const auto db = b.degree_sequence();
    if (da.size() != db.size()) {
        std::ostringstream os;
        os << "vertex counts differ: " << da.size() << " vs " << db.size();
        out.message = os.str();
        return out;
    }
    auto [ia, ib] = std::mismatch(da.begin(), da.end(), db.begin());
    if (ia != da.end()) {
        std::ostringstream os;
        os << "degree sequences differ at position " << (ia - da.begin()) << ": " << *ia << " vs " << *ib;
        out.message = os.str();
        return out;
    }
    out.match = true;
    out.message = "MATCH";
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using Mat2 = std::array<std::uint32_t, 4>;

Mat2 mat2_from_code(std::uint32_t code, std::uint32_t p) {
    Mat2 m{};
    for (int k = 3; k >= 0; --k) {
        m[k] = code % p;
        code /= p;
    }
    return m;
}

bool mat2_commute(const Mat2& a, const Mat2& b, std::uint32_t p) {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const std::uint64_t ab = std::uint64_t{a[2 * i]} * b[j] + std::uint64_t{a[2 * i + 1]} * b[2 + j];
            const std::uint64_t ba = std::uint64_t{b[2 * i]} * a[j] + std::uint64_t{b[2 * i + 1]} * a[2 + j];
            if (ab % p != ba % p) return false;
        }
    }
    return true;
}

}  // namespace

StarCheck m2_star_check(std::uint32_t p) {
    require_oracle_p(p, kMaxLambdaOracleP, "M_2 oracle");
    const std::uint32_t n = p * p * p * p;

    // Over 2x2 matrices the minimal polynomial has degree at most 2, so the
    // generated unital subring is span{I, A}.
    std::map<std::array<std::uint32_t, 9>, std::uint32_t> keys;
    std::vector<Mat2> reps;
    for (std::uint32_t code = 0; code < n; ++code) {
        const Mat2 a = mat2_from_code(code, p);
        std::array<std::array<std::uint32_t, 4>, 2> rows{Mat2{1, 0, 0, 1}, a};
        const auto rank = rref<4>(std::span(rows), p);
        std::array<std::uint32_t, 9> key{};
        key[0] = static_cast<std::uint32_t>(rank);
        for (std::size_t r = 0; r < rank; ++r) std::copy(rows[r].begin(), rows[r].end(), key.begin() + 1 + 4 * r);
        if (keys.try_emplace(key, static_cast<std::uint32_t>(reps.size())).second) reps.push_back(a);
    }

    const std::size_t v = reps.size();
    std::vector<std::uint64_t> degree(v, 0);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            if (mat2_commute(reps[i], reps[j], p)) {
                ++degree[i];
                ++degree[j];
            }
        }
    }

    StarCheck out;
    out.vertices = v;
    bool leaves_ok = true;
    for (std::size_t i = 0; i < v; ++i) {
        if (degree[i] == v - 1) {
            ++out.centres;
        } else {
            ++out.leaves;
            if (degree[i] != 1) leaves_ok = false;
        }
    }
    const std::uint64_t expected = std::uint64_t{p} * p + p + 1;
    out.match = out.centres == 1 && leaves_ok && out.leaves == expected;
    std::ostringstream os;
    if (out.match) {
        os << "MATCH: star with " << out.leaves << " leaves";
    } else {
        os << "MISMATCH: " << v << " vertices, " << out.centres << " centres, " << out.leaves
           << " leaves (expected one centre and " << expected << " leaves"
           << (leaves_ok ? ")" : "; some leaf has another neighbour)");
    }
    out.message = os.str();
    return out;
}

}  // namespace ccg

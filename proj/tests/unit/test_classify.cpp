#include <map>
#include <set>
#include <stdexcept>

#include "ccg/classify.hpp"
#include "doctest.h"

using namespace ccg;

namespace {

std::map<SubringKey, std::vector<Mat3>> group_by_key(std::uint32_t p) {
    std::map<SubringKey, std::vector<Mat3>> groups;
    const auto n = matrix_space_size(p);
    for (std::uint64_t code = 0; code < n; ++code) {
        const auto a = Mat3::from_code(code, p);
        groups[subring_key(a)].push_back(a);
    }
    return groups;
}

// Invertible matrices paired with their inverses, by exhaustive search.
std::vector<std::pair<Mat3, Mat3>> general_linear_group(std::uint32_t p) {
    std::vector<Mat3> units;
    const auto n = matrix_space_size(p);
    for (std::uint64_t code = 0; code < n; ++code) {
        auto a = Mat3::from_code(code, p);
        if (a.det() != 0) units.push_back(a);
    }
    std::vector<std::pair<Mat3, Mat3>> out;
    const Mat3 id = Mat3::identity(p);
    for (const auto& u : units) {
        for (const auto& v : units) {
            if (u * v == id) {
                out.emplace_back(u, v);
                break;
            }
        }
    }
    return out;
}

std::set<std::uint64_t> conjugacy_class(const Mat3& a, const std::vector<std::pair<Mat3, Mat3>>& gl) {
    std::set<std::uint64_t> out;
    for (const auto& [u, v] : gl) out.insert((u * a * v).code());
    return out;
}

}  // namespace

TEST_CASE("classify_type examples") {
    CHECK(classify_type(Mat3::identity(2)) == MatrixType::A);
    CHECK(classify_type(Mat3::companion(Poly({1, 1, 0, 1}, 2))) == MatrixType::G);
    CHECK(classify_type(Mat3::block_diag(0, {0, 1, 1, 1}, 2)) == MatrixType::H);
    CHECK(classify_type(Mat3({0, 0, 0, 0, 1, 0, 0, 0, 2}, 3)) == MatrixType::C);
    CHECK(classify_type(Mat3({0, 0, 0, 0, 1, 0, 0, 0, 1}, 3)) == MatrixType::B);
    CHECK(classify_type(Mat3::unit(0, 1, 3)) == MatrixType::E);
    CHECK(classify_type(Mat3({0, 1, 0, 0, 0, 1, 0, 0, 0}, 3)) == MatrixType::D);
    CHECK(classify_type(Mat3({0, 1, 0, 0, 0, 0, 0, 0, 1}, 3)) == MatrixType::F);
}

TEST_CASE("type letters round-trip") {
    for (auto t : kAllTypes) CHECK(type_from_char(type_char(t)) == t);
    CHECK_FALSE(type_from_char('Z').has_value());
}

TEST_CASE("table1 examples") {
    std::uint64_t total = 0;
    const auto t2 = table1(2);
    const TypeTable<std::uint64_t> expected2{1, 28, 0, 21, 21, 84, 8, 28};
    for (auto t : kAllTypes) {
        CHECK(t2[index_of(t)].vertex_count == expected2[index_of(t)]);
        total += t2[index_of(t)].vertex_count;
    }
    CHECK(total == 191);

    const auto t3 = table1(3);
    const TypeTable<std::uint64_t> expected3{1, 117, 234, 104, 52, 468, 144, 351};
    total = 0;
    for (auto t : kAllTypes) {
        CHECK(t3[index_of(t)].vertex_count == expected3[index_of(t)]);
        total += t3[index_of(t)].vertex_count;
    }
    CHECK(total == 1471);
    CHECK(t3[index_of(MatrixType::B)].generator_count == 6);
    CHECK(t2[index_of(MatrixType::G)].generator_count == 6);
    CHECK_THROWS_AS(table1(9), std::invalid_argument);
}

TEST_CASE("mass identity for every prime up to 13") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        std::uint64_t mass = 0;
        for (const auto& s : table1(p)) mass += s.vertex_count * s.generator_count;
        CHECK(mass == matrix_space_size(p));
    }
}

TEST_CASE("table2 examples and edge-mass symmetry") {
    using enum MatrixType;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const auto t1 = table1(p);
        const auto t2 = table2(p);
        if (p != 2) CHECK(t2[index_of(B)][index_of(C)] == 3);
        CHECK(t2[index_of(E)][index_of(E)] == 2 * p + 1);
        CHECK(t2[index_of(H)][index_of(B)] == p * (p - 1) / 2);
        CHECK(t2[index_of(B)][index_of(B)] == p * p + p + 1);
        for (auto x : kAllTypes) {
            for (auto y : kAllTypes) {
                CHECK(t2[index_of(x)][index_of(y)] * t1[index_of(y)].vertex_count ==
                      t2[index_of(y)][index_of(x)] * t1[index_of(x)].vertex_count);
            }
        }
    }
    CHECK_THROWS_AS(table2(1), std::invalid_argument);
}

TEST_CASE("classification partitions M_3(GF(p)) with the closed-form masses and key counts") {
    for (std::uint32_t p : {2u, 3u}) {
        const auto groups = group_by_key(p);
        const auto t1 = table1(p);
        TypeTable<std::uint64_t> matrices{}, keys{};
        for (const auto& [key, mats] : groups) {
            const auto t = classify_type(mats.front());
            ++keys[index_of(t)];
            for (const auto& m : mats) {
                REQUIRE(classify_type(m) == t);
                ++matrices[index_of(t)];
            }
            CHECK(generator_count(key) == mats.size());
            CHECK(mats.size() == t1[index_of(t)].generator_count);
            CHECK(key.dimension == t1[index_of(t)].dimension);
        }
        for (auto t : kAllTypes) {
            const auto& s = t1[index_of(t)];
            CHECK(keys[index_of(t)] == s.vertex_count);
            CHECK(matrices[index_of(t)] == s.vertex_count * s.generator_count);
        }
    }
}

TEST_CASE("omega examples and per-type values at p = 3") {
    CHECK(omega(Mat3({0, 0, 0, 0, 1, 0, 0, 0, 1}, 3)) == 1);
    CHECK(omega(Mat3({0, 1, 0, 0, 0, 1, 0, 0, 0}, 3)) == 6);
    CHECK(omega(Mat3({1, 1, 0, 0, 1, 0, 0, 0, 1}, 3)) == 2);
    CHECK(omega(Mat3({0, 0, 0, 0, 1, 0, 0, 0, 2}, 3)) == 6);
    CHECK(omega(Mat3({0, 1, 0, 0, 0, 0, 0, 0, 1}, 3)) == 2);
}

TEST_CASE("gl_order and orbit sizes") {
    CHECK(gl_order(3, 2) == 168);
    CHECK(gl_order(2, 3) == 48);
    CHECK(orbit_size(Mat3({0, 0, 0, 0, 1, 0, 0, 0, 1}, 2)) == 28);
    CHECK(orbit_size(Mat3::identity(2)) == 1);
}

TEST_CASE("orbit sizes and similarity agree with explicit conjugation over GF(2)") {
    const auto gl = general_linear_group(2);
    REQUIRE(gl.size() == 168);
    std::map<std::uint64_t, std::set<std::uint64_t>> classes;
    for (std::uint64_t code = 0; code < 512; ++code) {
        const auto a = Mat3::from_code(code, 2);
        const auto cls = conjugacy_class(a, gl);
        CHECK(orbit_size(a) == cls.size());
        CHECK(orbit_size(a) * centralizer_units(a) == gl_order(3, 2));
        classes[code] = cls;
    }
    for (std::uint64_t x = 0; x < 512; ++x) {
        const auto a = Mat3::from_code(x, 2);
        for (std::uint64_t y = 0; y < 512; ++y) {
            CHECK(similar(a, Mat3::from_code(y, 2)) == (classes[x].count(y) == 1));
        }
    }
}

TEST_CASE("each orbit meets every vertex of its type in omega elements") {
    for (std::uint32_t p : {2u, 3u}) {
        const auto groups = group_by_key(p);
        TypeTable<std::vector<const SubringKey*>> keys{};
        for (const auto& [key, mats] : groups) keys[index_of(classify_type(mats.front()))].push_back(&key);

        for (auto t : kAllTypes) {
            if (t == MatrixType::A || keys[index_of(t)].empty()) continue;
            // One matrix per similarity class of this type.
            std::vector<Mat3> reps;
            for (const auto& [key, mats] : groups) {
                if (classify_type(mats.front()) != t) continue;
                for (const auto& m : mats) {
                    bool seen = false;
                    for (const auto& r : reps) seen = seen || similar(r, m);
                    if (!seen) reps.push_back(m);
                }
            }
            for (const auto& r : reps) {
                const auto w = omega(r);
                for (const auto* key : keys[index_of(t)]) {
                    std::uint64_t hits = 0;
                    for (const auto& m : key->members()) hits += similar(m, r);
                    REQUIRE_MESSAGE(hits == w, "type " << type_char(t) << " p=" << p);
                }
                CHECK(orbit_size(r) == w * keys[index_of(t)].size());
            }
        }
    }
}

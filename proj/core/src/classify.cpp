#include "ccg/classify.hpp"

#include <stdexcept>

namespace ccg {

std::optional<MatrixType> type_from_char(char c) {
    if (c < 'A' || c > 'H') return std::nullopt;
    return static_cast<MatrixType>(c - 'A');
}

MatrixType classify_type(const Mat3& a) {
    const Poly chi = char_poly(a);
    const Poly mu = min_poly(a);
    const int d = mu.degree();
    const auto e = poly_roots(chi).size();

    switch (d) {
        case 1:
            return MatrixType::A;
        case 2:
            return e == 1 ? MatrixType::E : MatrixType::B;
        default:
            break;
    }
    switch (e) {
        case 0:
            return MatrixType::G;
        case 2:
            return MatrixType::F;
        case 3:
            return MatrixType::C;
        default:
            break;
    }
    // One eigenvalue in GF(p): a triple root means p_A splits.
    const FieldElement lambda = poly_roots(chi).front();
    return root_multiplicity(chi, lambda) == 3 ? MatrixType::D : MatrixType::H;
}

std::uint64_t generator_count(const SubringKey& key) {
    std::uint64_t n = 0;
    for (const auto& m : key.members()) {
        if (subring_key(m) == key) ++n;
    }
    return n;
}

bool similar(const Mat3& a, const Mat3& b) { return char_poly(a) == char_poly(b) && min_poly(a) == min_poly(b); }

std::uint64_t omega(const Mat3& a) {
    const Poly chi = char_poly(a);
    const Poly mu = min_poly(a);
    std::uint64_t n = 0;
    for (const auto& m : subring_key(a).members()) {
        if (char_poly(m) == chi && min_poly(m) == mu) ++n;
    }
    return n;
}

std::uint64_t gl_order(int n, std::uint32_t p) {
    std::uint64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    std::uint64_t order = 1;
    std::uint64_t pi = 1;
    for (int i = 0; i < n; ++i) {
        order *= pn - pi;
        pi *= p;
    }
    return order;
}

std::uint64_t centralizer_units(const Mat3& a) {
    const auto p = a.modulus();
    const auto basis = centralizer_basis(a);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= p;

    std::uint64_t units = 0;
    for (std::uint64_t t = 0; t < total; ++t) {
        Vec9 x{};
        std::uint64_t rest = t;
        for (const auto& b : basis) {
            const auto c = static_cast<std::uint32_t>(rest % p);
            rest /= p;
            if (c == 0) continue;
            for (int k = 0; k < 9; ++k) x[k] = static_cast<std::uint32_t>((x[k] + std::uint64_t{c} * b[k]) % p);
        }
        if (Mat3::from_vec(x, p).det() != 0) ++units;
    }
    return units;
}

std::uint64_t orbit_size(const Mat3& a) { return gl_order(3, a.modulus()) / centralizer_units(a); }

TypeTable<TypeStats> table1(std::uint32_t p) {
    require_prime(p);
    const std::uint64_t q = p;
    const std::uint64_t q2 = q * q;
    const std::uint64_t q3 = q2 * q;
    const std::uint64_t plane = q2 + q + 1;

    TypeTable<TypeStats> t{};
    t[index_of(MatrixType::A)] = {1, q, 1};
    t[index_of(MatrixType::B)] = {plane * q2, q * (q - 1), 2};
    t[index_of(MatrixType::C)] = {p == 2 ? 0 : plane * q3 * (q + 1) / 6, q * (q - 1) * (q - 2), 3};
    t[index_of(MatrixType::D)] = {(q3 - 1) * (q + 1), q2 * (q - 1), 3};
    t[index_of(MatrixType::E)] = {plane * (q + 1), q * (q - 1), 2};
    t[index_of(MatrixType::F)] = {plane * q2 * (q + 1), q * (q - 1) * (q - 1), 3};
    t[index_of(MatrixType::G)] = {(q3 - q) * (q3 - q2) / 3, q3 - q, 3};
    t[index_of(MatrixType::H)] = {(q3 - 1) * q3 / 2, q2 * (q - 1), 3};
    return t;
}

NeighbourhoodTable table2(std::uint32_t p) {
    const auto t1 = table1(p);
    const std::uint64_t q = p;
    NeighbourhoodTable n{};
    auto set = [&n](MatrixType x, MatrixType y, std::uint64_t v) { n[index_of(x)][index_of(y)] = v; };
    using enum MatrixType;

    for (auto y : kAllTypes) set(A, y, 1);
    for (auto x : kAllTypes) set(x, A, t1[index_of(x)].vertex_count);
    set(A, A, 1);

    set(B, B, q * q + q + 1);
    set(B, C, 3);
    set(B, E, q * q);
    set(B, F, 1);
    set(B, H, 1);

    set(C, B, p == 2 ? 0 : (q * q + q) / 2);
    set(C, C, p == 2 ? 0 : 1);

    set(D, D, 1);
    set(D, E, q - 1);

    set(E, B, q + 1);
    set(E, D, 1);
    set(E, E, 2 * q + 1);
    set(E, F, 1);

    set(F, B, q + 1);
    set(F, E, q * q);
    set(F, F, 1);

    set(G, G, 1);

    set(H, B, q * (q - 1) / 2);
    set(H, H, 1);
    return n;
}

}  // namespace ccg

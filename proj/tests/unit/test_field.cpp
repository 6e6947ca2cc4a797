#include <set>
#include <stdexcept>
#include <vector>

#include "ccg/field.hpp"
#include "doctest.h"

using namespace ccg;

namespace {

std::vector<bool> sieve(std::size_t n) {
    std::vector<bool> prime(n + 1, true);
    prime[0] = false;
    if (n >= 1) prime[1] = false;
    for (std::size_t i = 2; i * i <= n; ++i) {
        if (!prime[i]) continue;
        for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
    }
    return prime;
}

using Coeffs = std::vector<std::uint32_t>;  // lowest degree first

Coeffs multiply(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
    Coeffs c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return c;
}

// Every monic polynomial of the given degree.
std::vector<Coeffs> monics(int degree, std::uint32_t p) {
    std::vector<Coeffs> out;
    std::uint32_t total = 1;
    for (int i = 0; i < degree; ++i) total *= p;
    for (std::uint32_t code = 0; code < total; ++code) {
        Coeffs c(degree + 1, 0);
        auto x = code;
        for (int i = 0; i < degree; ++i) {
            c[i] = x % p;
            x /= p;
        }
        c[degree] = 1;
        out.push_back(c);
    }
    return out;
}

Poly to_poly(const Coeffs& c, std::uint32_t p) {
    std::vector<FieldElement> f;
    for (auto v : c) f.emplace_back(v, p);
    return Poly(f, p);
}

}  // namespace

TEST_CASE("is_prime agrees with a sieve") {
    const auto prime = sieve(2000);
    for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(is_prime(n) == prime[n]);
    CHECK_THROWS_AS(require_prime(9), std::invalid_argument);
    CHECK_NOTHROW(require_prime(13));
}

TEST_CASE("fp_inv examples") {
    CHECK(fp_inv(FieldElement(2, 3)).value() == 2);
    CHECK(fp_inv(FieldElement(1, 2)).value() == 1);
    CHECK(fp_inv(FieldElement(3, 5)).value() == 2);
    CHECK_THROWS_WITH_AS(fp_inv(FieldElement(0, 7)), "no inverse", std::domain_error);
}

TEST_CASE("fp_inv matches exhaustive search and is an involution") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 101u}) {
        for (std::uint32_t a = 1; a < p; ++a) {
            std::uint32_t expected = 0;
            for (std::uint32_t b = 1; b < p; ++b) {
                if (a * b % p == 1) expected = b;
            }
            const FieldElement x(a, p);
            CHECK(fp_inv(x).value() == expected);
            CHECK(fp_inv(fp_inv(x)) == x);
            CHECK((x * fp_inv(x)).value() == 1);
        }
    }
}

TEST_CASE("field element arithmetic stays reduced") {
    const std::uint32_t p = 7;
    for (std::int64_t a = -20; a <= 20; ++a) {
        const FieldElement x(a, p);
        CHECK(x.value() < p);
        CHECK(static_cast<std::int64_t>(x.value()) == ((a % 7) + 7) % 7);
        for (std::uint32_t b = 0; b < p; ++b) {
            const FieldElement y(b, p);
            CHECK((x + y).value() == (x.value() + b) % p);
            CHECK((x - y).value() == (x.value() + p - b) % p);
            CHECK((x * y).value() == x.value() * b % p);
            if (b != 0) CHECK(((x / y) * y) == x);
        }
        CHECK((x + (-x)).is_zero());
    }
}

TEST_CASE("poly_roots examples") {
    auto values = [](const std::vector<FieldElement>& roots) {
        std::vector<std::uint32_t> v;
        for (auto r : roots) v.push_back(r.value());
        return v;
    };
    CHECK(values(poly_roots(Poly({0, 1, 1}, 2))) == std::vector<std::uint32_t>{0, 1});
    CHECK(poly_roots(Poly({1, 0, 1}, 3)).empty());
    CHECK(poly_roots(Poly({1, 1, 0, 1}, 2)).empty());
    CHECK_THROWS_AS(poly_roots(Poly(5)), std::domain_error);
    CHECK_THROWS_AS(poly_roots(Poly({1}, 5)), std::invalid_argument);
}

TEST_CASE("poly_roots never exceeds the degree and every root evaluates to zero") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int d = 1; d <= 3; ++d) {
            for (const auto& c : monics(d, p)) {
                const Poly q = to_poly(c, p);
                const auto roots = poly_roots(q);
                CHECK(static_cast<int>(roots.size()) <= d);
                for (std::uint32_t x = 0; x < p; ++x) {
                    const bool is_root = q(FieldElement(x, p)).is_zero();
                    const bool listed = std::find(roots.begin(), roots.end(), FieldElement(x, p)) != roots.end();
                    CHECK(is_root == listed);
                }
            }
        }
    }
}

TEST_CASE("root_multiplicity by repeated division") {
    const std::uint32_t p = 5;
    const FieldElement two(2, p), three(3, p);
    const Poly q = Poly::linear(two) * Poly::linear(two) * Poly::linear(three);
    CHECK(root_multiplicity(q, two) == 2);
    CHECK(root_multiplicity(q, three) == 1);
    CHECK(root_multiplicity(q, FieldElement(0, p)) == 0);
}

TEST_CASE("poly_is_irreducible examples") {
    CHECK(poly_is_irreducible(Poly({1, 1, 0, 1}, 2)));
    CHECK(poly_is_irreducible(Poly({1, 1, 1}, 2)));
    CHECK_FALSE(poly_is_irreducible(Poly({1, 2, 1}, 3)));
    CHECK(poly_is_irreducible(Poly({4, 1}, 5)));
    CHECK_THROWS_AS(poly_is_irreducible(Poly({1}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(poly_is_irreducible(Poly({1, 0, 0, 0, 1}, 3)), std::invalid_argument);
}

TEST_CASE("irreducibility of monic cubics agrees with trial division") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        std::set<Coeffs> reducible;
        for (const auto& l : monics(1, p)) {
            for (const auto& q : monics(2, p)) reducible.insert(multiply(l, q, p));
        }
        std::size_t irreducible = 0;
        for (const auto& c : monics(3, p)) {
            const bool expected = reducible.count(c) == 0;
            CHECK(poly_is_irreducible(to_poly(c, p)) == expected);
            if (expected) ++irreducible;
        }
        // Monic irreducible cubics number (p^3 - p) / 3.
        CHECK(irreducible == (p * p * p - p) / 3);
    }
}

TEST_CASE("polynomial division reconstructs the dividend") {
    const std::uint32_t p = 3;
    for (const auto& a : monics(3, p)) {
        for (const auto& b : monics(2, p)) {
            const Poly pa = to_poly(a, p), pb = to_poly(b, p);
            const auto dm = pa.divmod(pb);
            CHECK(dm.quotient * pb + dm.remainder == pa);
            CHECK(dm.remainder.degree() < pb.degree());
        }
    }
    CHECK_THROWS_AS(Poly({1, 1}, 3).divmod(Poly(3)), std::domain_error);
}

TEST_CASE("polynomial formatting") {
    CHECK(Poly({1, 1, 0, 1}, 2).to_string() == "x^3 + x + 1");
    CHECK(Poly(7).to_string() == "0");
}

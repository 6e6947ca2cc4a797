#pragma once

// 3x3 matrices over GF(p) and the small exact linear algebra around them.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccg/field.hpp"

namespace ccg {

using Vec3 = std::array<std::uint32_t, 3>;
using Vec9 = std::array<std::uint32_t, 9>;

/// Number of 3x3 matrices over GF(p), i.e. p^9.
std::uint64_t matrix_space_size(std::uint32_t p);

class Mat3 {
public:
    explicit Mat3(std::uint32_t p) : p_(p) {}
    /// Row-major entries, reduced mod p.
    Mat3(std::initializer_list<std::int64_t> entries, std::uint32_t p);

    static Mat3 identity(std::uint32_t p);
    static Mat3 scalar(std::uint32_t value, std::uint32_t p);
    /// E_ij, zero based.
    static Mat3 unit(int i, int j, std::uint32_t p);
    /// Inverse of code(): entry k is the base-p digit of weight p^(8-k),
    /// so code order is row-major lexicographic order.
    static Mat3 from_code(std::uint64_t code, std::uint32_t p);
    static Mat3 from_vec(const Vec9& v, std::uint32_t p);
    /// Companion matrix of a monic cubic x^3 + c2 x^2 + c1 x + c0.
    static Mat3 companion(const Poly& monic_cubic);
    /// Block diagonal [a] (+) B with B a 2x2 block given row-major.
    static Mat3 block_diag(std::uint32_t a, std::array<std::uint32_t, 4> b, std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    std::uint32_t operator()(int i, int j) const { return e_[3 * i + j]; }
    void set(int i, int j, std::int64_t v);
    FieldElement at(int i, int j) const { return FieldElement(e_[3 * i + j], p_); }
    const Vec9& entries() const { return e_; }
    /// Row-major flattening into GF(p)^9.
    const Vec9& vec() const { return e_; }
    std::uint64_t code() const;

    bool is_zero() const;
    bool is_scalar() const;
    std::uint32_t trace() const;
    std::uint32_t det() const;
    int rank() const;
    Vec3 apply(const Vec3& x) const;

    friend Mat3 operator+(const Mat3& a, const Mat3& b);
    friend Mat3 operator-(const Mat3& a, const Mat3& b);
    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    friend Mat3 operator*(std::uint32_t s, const Mat3& a);
    friend bool operator==(const Mat3& a, const Mat3& b) = default;

    /// AB == BA, with early exit on the first differing entry.
    bool commutes_with(const Mat3& b) const;

    std::string to_string() const;

private:
    Vec9 e_{};
    std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const Mat3& a);

/// q(A), constant term times I.
Mat3 evaluate(const Poly& q, const Mat3& a);

/// Reduced row-echelon form in place over GF(p). Rows are reordered so
/// pivot rows come first, each with leading coefficient 1. Returns rank.
template <std::size_t N>
std::size_t rref(std::span<std::array<std::uint32_t, N>> rows, std::uint32_t p);

/// Basis of {x : A x = 0} for a k x N coefficient matrix, in RREF.
template <std::size_t N>
std::vector<std::array<std::uint32_t, N>> null_space(std::vector<std::array<std::uint32_t, N>> rows,
                                                     std::uint32_t p);

/// A subspace of GF(p)^3 in canonical RREF form (dimension 0..3).
struct Subspace {
    std::uint32_t p = 2;
    std::vector<Vec3> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec3& x) const;
    friend bool operator==(const Subspace&, const Subspace&) = default;

    static Subspace span(std::vector<Vec3> vectors, std::uint32_t p);
    std::string to_string() const;
};

/// det(xI - A), monic cubic.
Poly char_poly(const Mat3& a);

/// Monic polynomial of least degree annihilating A, read off the first
/// linear dependence among vec(I), vec(A), vec(A^2), vec(A^3).
Poly min_poly(const Mat3& a);

/// (column space, null space).
std::pair<Subspace, Subspace> image_kernel(const Mat3& a);

/// Canonical identity of the unital subring generated by a matrix: the
/// RREF basis of span{vec(I), vec(A), vec(A^2)} in GF(p)^9. Basis rows are
/// stored as matrix codes.
struct SubringKey {
    std::uint32_t p = 2;
    std::uint8_t dimension = 0;
    std::array<std::uint64_t, 3> rows{};

    friend auto operator<=>(const SubringKey&, const SubringKey&) = default;

    std::vector<Mat3> basis() const;
    /// p^dimension elements, ordered by coefficient tuple.
    std::vector<Mat3> members() const;
    std::uint64_t size() const;
    bool contains(const Mat3& a) const;
    std::string to_string() const;
};

SubringKey subring_key(const Mat3& a);

/// Solution space of X A = A X, as a basis of GF(p)^9 (RREF).
std::vector<Vec9> centralizer_basis(const Mat3& a);

}  // namespace ccg

template <>
struct std::hash<ccg::SubringKey> {
    std::size_t operator()(const ccg::SubringKey& k) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL * (k.dimension + 1);
        for (auto r : k.rows) h = (h ^ r) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h ^ k.p);
    }
};

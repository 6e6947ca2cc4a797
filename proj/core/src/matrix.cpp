#include "ccg/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ccg {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

std::uint64_t vec_code(const Vec9& v, std::uint32_t p) {
    std::uint64_t c = 0;
    for (auto x : v) c = c * p + x;
    return c;
}

}  // namespace

std::uint64_t matrix_space_size(std::uint32_t p) { return pow_u64(p, 9); }

// ---------------------------------------------------------------------------
// Mat3

Mat3::Mat3(std::initializer_list<std::int64_t> entries, std::uint32_t p) : p_(p) {
    if (entries.size() != 9) throw std::invalid_argument("Mat3 needs 9 entries");
    int k = 0;
    for (auto v : entries) e_[k++] = FieldElement(v, p).value();
}

Mat3 Mat3::identity(std::uint32_t p) { return scalar(1, p); }

Mat3 Mat3::scalar(std::uint32_t value, std::uint32_t p) {
    Mat3 m(p);
    for (int i = 0; i < 3; ++i) m.e_[4 * i] = value % p;
    return m;
}

Mat3 Mat3::unit(int i, int j, std::uint32_t p) {
    Mat3 m(p);
    m.e_[3 * i + j] = 1;
    return m;
}

Mat3 Mat3::from_code(std::uint64_t code, std::uint32_t p) {
    Mat3 m(p);
    for (int k = 8; k >= 0; --k) {
        m.e_[k] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return m;
}

Mat3 Mat3::from_vec(const Vec9& v, std::uint32_t p) {
    Mat3 m(p);
    for (int k = 0; k < 9; ++k) m.e_[k] = v[k] % p;
    return m;
}

Mat3 Mat3::companion(const Poly& q) {
    if (q.degree() != 3 || !q.is_monic()) throw std::invalid_argument("companion needs a monic cubic");
    const auto p = q.modulus();
    Mat3 m(p);
    m.set(1, 0, 1);
    m.set(2, 1, 1);
    for (int i = 0; i < 3; ++i) m.set(i, 2, -static_cast<std::int64_t>(q.coeff(i).value()));
    return m;
}

Mat3 Mat3::block_diag(std::uint32_t a, std::array<std::uint32_t, 4> b, std::uint32_t p) {
    Mat3 m(p);
    m.set(0, 0, a);
    m.set(1, 1, b[0]);
    m.set(1, 2, b[1]);
    m.set(2, 1, b[2]);
    m.set(2, 2, b[3]);
    return m;
}

void Mat3::set(int i, int j, std::int64_t v) { e_[3 * i + j] = FieldElement(v, p_).value(); }

std::uint64_t Mat3::code() const { return vec_code(e_, p_); }

bool Mat3::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool Mat3::is_scalar() const {
    return e_[1] == 0 && e_[2] == 0 && e_[3] == 0 && e_[5] == 0 && e_[6] == 0 && e_[7] == 0 && e_[0] == e_[4] &&
           e_[4] == e_[8];
}

std::uint32_t Mat3::trace() const { return (e_[0] + e_[4] + e_[8]) % p_; }

std::uint32_t Mat3::det() const {
    const std::int64_t p = p_;
    auto m = [&](int i, int j) { return static_cast<std::int64_t>(e_[3 * i + j]); };
    std::int64_t d = m(0, 0) * ((m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) % p) -
                     m(0, 1) * ((m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) % p) +
                     m(0, 2) * ((m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) % p);
    d %= p;
    if (d < 0) d += p;
    return static_cast<std::uint32_t>(d);
}

int Mat3::rank() const {
    std::array<Vec3, 3> rows{};
    for (int i = 0; i < 3; ++i) rows[i] = {e_[3 * i], e_[3 * i + 1], e_[3 * i + 2]};
    return static_cast<int>(rref<3>(rows, p_));
}

Vec3 Mat3::apply(const Vec3& x) const {
    Vec3 y{};
    for (int i = 0; i < 3; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < 3; ++j) acc += std::uint64_t{e_[3 * i + j]} * x[j];
        y[i] = static_cast<std::uint32_t>(acc % p_);
    }
    return y;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
    assert(a.p_ == b.p_);
    Mat3 r(a.p_);
    for (int k = 0; k < 9; ++k) r.e_[k] = (a.e_[k] + b.e_[k]) % a.p_;
    return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
    assert(a.p_ == b.p_);
    Mat3 r(a.p_);
    for (int k = 0; k < 9; ++k) r.e_[k] = (a.e_[k] + a.p_ - b.e_[k]) % a.p_;
    return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    assert(a.p_ == b.p_);
    Mat3 r(a.p_);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < 3; ++k) acc += std::uint64_t{a.e_[3 * i + k]} * b.e_[3 * k + j];
            r.e_[3 * i + j] = static_cast<std::uint32_t>(acc % a.p_);
        }
    }
    return r;
}

Mat3 operator*(std::uint32_t s, const Mat3& a) {
    Mat3 r(a.p_);
    for (int k = 0; k < 9; ++k) r.e_[k] = mulmod(s % a.p_, a.e_[k], a.p_);
    return r;
}

bool Mat3::commutes_with(const Mat3& b) const {
    assert(p_ == b.p_);
    const auto& x = e_;
    const auto& y = b.e_;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const std::uint64_t xy = std::uint64_t{x[3 * i]} * y[j] + std::uint64_t{x[3 * i + 1]} * y[3 + j] +
                                     std::uint64_t{x[3 * i + 2]} * y[6 + j];
            const std::uint64_t yx = std::uint64_t{y[3 * i]} * x[j] + std::uint64_t{y[3 * i + 1]} * x[3 + j] +
                                     std::uint64_t{y[3 * i + 2]} * x[6 + j];
            if (xy % p_ != yx % p_) return false;
        }
    }
    return true;
}

std::string Mat3::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < 3; ++i) {
        if (i) os << "; ";
        os << e_[3 * i] << ' ' << e_[3 * i + 1] << ' ' << e_[3 * i + 2];
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat3& a) { return os << a.to_string(); }

Mat3 evaluate(const Poly& q, const Mat3& a) {
    assert(q.modulus() == a.modulus());
    const auto p = a.modulus();
    Mat3 acc(p);
    for (int i = q.degree(); i >= 0; --i) acc = acc * a + Mat3::scalar(q.coeff(i).value(), p);
    return acc;
}

// ---------------------------------------------------------------------------
// Row reduction

template <std::size_t N>
std::size_t rref(std::span<std::array<std::uint32_t, N>> rows, std::uint32_t p) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < N && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        auto& pr = rows[rank];
        const std::uint32_t inv = inv_mod(pr[col], p);
        for (std::size_t c = col; c < N; ++c) pr[c] = mulmod(pr[c], inv, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const std::uint32_t f = rows[r][col];
            for (std::size_t c = col; c < N; ++c) rows[r][c] = (rows[r][c] + p - mulmod(f, pr[c], p)) % p;
        }
        ++rank;
    }
    return rank;
}

template <std::size_t N>
std::vector<std::array<std::uint32_t, N>> null_space(std::vector<std::array<std::uint32_t, N>> rows,
                                                     std::uint32_t p) {
    const std::size_t rank = rref<N>(rows, p);
    std::array<int, N> pivot_of_col;
    pivot_of_col.fill(-1);
    for (std::size_t r = 0; r < rank; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            if (rows[r][c] != 0) {
                pivot_of_col[c] = static_cast<int>(r);
                break;
            }
        }
    }
    std::vector<std::array<std::uint32_t, N>> basis;
    for (std::size_t free = 0; free < N; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::array<std::uint32_t, N> v{};
        v[free] = 1;
        for (std::size_t c = 0; c < N; ++c) {
            if (pivot_of_col[c] >= 0) v[c] = (p - rows[pivot_of_col[c]][free]) % p;
        }
        basis.push_back(v);
    }
    rref<N>(basis, p);
    return basis;
}

template std::size_t rref<3>(std::span<std::array<std::uint32_t, 3>>, std::uint32_t);
template std::size_t rref<9>(std::span<std::array<std::uint32_t, 9>>, std::uint32_t);
template std::size_t rref<13>(std::span<std::array<std::uint32_t, 13>>, std::uint32_t);
template std::size_t rref<4>(std::span<std::array<std::uint32_t, 4>>, std::uint32_t);
template std::vector<std::array<std::uint32_t, 3>> null_space<3>(std::vector<std::array<std::uint32_t, 3>>,
                                                                 std::uint32_t);
template std::vector<std::array<std::uint32_t, 9>> null_space<9>(std::vector<std::array<std::uint32_t, 9>>,
                                                                 std::uint32_t);

// ---------------------------------------------------------------------------
// Subspaces of GF(p)^3

bool Subspace::contains(const Vec3& x) const {
    std::vector<Vec3> rows = basis;
    rows.push_back(x);
    return rref<3>(rows, p) == basis.size();
}

Subspace Subspace::span(std::vector<Vec3> vectors, std::uint32_t p) {
    const std::size_t r = rref<3>(vectors, p);
    vectors.resize(r);
    return Subspace{p, std::move(vectors)};
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i) os << ", ";
        os << '(' << basis[i][0] << ',' << basis[i][1] << ',' << basis[i][2] << ')';
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// Polynomials of a matrix

Poly char_poly(const Mat3& a) {
    const std::int64_t p = a.modulus();
    auto m = [&](int i, int j) { return static_cast<std::int64_t>(a(i, j)); };
    const std::int64_t minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
                                (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
    // x^3 - tr x^2 + (sum of principal 2x2 minors) x - det
    return Poly({-static_cast<std::int64_t>(a.det()), minors % p, -static_cast<std::int64_t>(a.trace()), 1},
                a.modulus());
}

Poly min_poly(const Mat3& a) {
    const auto p = a.modulus();
    using Row = std::array<std::uint32_t, 13>;  // vec(A^k) | e_k
    std::vector<Row> basis;
    Mat3 power = Mat3::identity(p);
    for (int k = 0; k <= 3; ++k) {
        Row row{};
        for (int c = 0; c < 9; ++c) row[c] = power.vec()[c];
        row[9 + k] = 1;
        basis.push_back(row);
        rref<13>(basis, p);
        // A zero prefix in the last row means the new power is dependent.
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const auto& b = basis[r];
            if (std::all_of(b.begin(), b.begin() + 9, [](auto x) { return x == 0; })) {
                std::vector<FieldElement> coeffs;
                for (int j = 0; j <= k; ++j) coeffs.emplace_back(b[9 + j], p);
                Poly q(coeffs, p);
                const FieldElement lead_inv = fp_inv(q.leading());
                std::vector<FieldElement> monic;
                for (int j = 0; j <= q.degree(); ++j) monic.push_back(q.coeff(j) * lead_inv);
                return Poly(monic, p);
            }
        }
        power = power * a;
    }
    throw std::logic_error("min_poly: no dependence found up to degree 3");
}

std::pair<Subspace, Subspace> image_kernel(const Mat3& a) {
    const auto p = a.modulus();
    std::vector<Vec3> cols;
    std::vector<Vec3> rows;
    for (int i = 0; i < 3; ++i) {
        cols.push_back({a(0, i), a(1, i), a(2, i)});
        rows.push_back({a(i, 0), a(i, 1), a(i, 2)});
    }
    return {Subspace::span(std::move(cols), p), Subspace{p, null_space<3>(std::move(rows), p)}};
}

// ---------------------------------------------------------------------------
// Generated subrings

SubringKey subring_key(const Mat3& a) {
    const auto p = a.modulus();
    const Mat3 id = Mat3::identity(p);
    const Mat3 sq = a * a;
    std::array<Vec9, 3> rows{id.vec(), a.vec(), sq.vec()};
    const std::size_t rank = rref<9>(rows, p);
    SubringKey key;
    key.p = p;
    key.dimension = static_cast<std::uint8_t>(rank);
    for (std::size_t r = 0; r < rank; ++r) key.rows[r] = vec_code(rows[r], p);
    return key;
}

std::vector<Mat3> SubringKey::basis() const {
    std::vector<Mat3> out;
    for (int r = 0; r < dimension; ++r) out.push_back(Mat3::from_code(rows[r], p));
    return out;
}

std::uint64_t SubringKey::size() const { return pow_u64(p, dimension); }

std::vector<Mat3> SubringKey::members() const {
    const auto b = basis();
    const std::uint64_t n = size();
    std::vector<Mat3> out;
    out.reserve(n);
    for (std::uint64_t t = 0; t < n; ++t) {
        Mat3 m(p);
        std::uint64_t rest = t;
        for (int r = dimension - 1; r >= 0; --r) {
            const auto c = static_cast<std::uint32_t>(rest % p);
            rest /= p;
            if (c != 0) m = m + c * b[r];
        }
        out.push_back(m);
    }
    return out;
}

bool SubringKey::contains(const Mat3& a) const {
    std::vector<Vec9> rows;
    for (const auto& m : basis()) rows.push_back(m.vec());
    rows.push_back(a.vec());
    return rref<9>(rows, p) == dimension;
}

std::string SubringKey::to_string() const {
    std::ostringstream os;
    os << "<";
    for (int r = 0; r < dimension; ++r) {
        if (r) os << ", ";
        os << Mat3::from_code(rows[r], p);
    }
    os << ">";
    return os.str();
}

std::vector<Vec9> centralizer_basis(const Mat3& a) {
    const auto p = a.modulus();
    // (XA - AX)_{ij} = sum_k x_ik a_kj - a_ik x_kj, linear in the 9 unknowns x.
    std::vector<Vec9> eqs;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Vec9 row{};
            for (int k = 0; k < 3; ++k) {
                row[3 * i + k] = (row[3 * i + k] + a(k, j)) % p;
                row[3 * k + j] = (row[3 * k + j] + p - a(i, k)) % p;
            }
            eqs.push_back(row);
        }
    }
    return null_space<9>(std::move(eqs), p);
}

}  // namespace ccg

#include "ccg/projective.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccg {

Vec3 normalize_projective(Vec3 v, std::uint32_t p) {
    for (int i = 0; i < 3; ++i) {
        if (v[i] % p == 0) continue;
        const std::uint64_t inv = inv_mod(v[i] % p, p);
        for (auto& x : v) x = static_cast<std::uint32_t>(x % p * inv % p);
        return v;
    }
    throw std::invalid_argument("zero vector has no projective point");
}

bool incident(const ProjPoint& pt, const ProjLine& ln, std::uint32_t p) {
    std::uint64_t s = 0;
    for (int i = 0; i < 3; ++i) s += std::uint64_t{pt.coords[i]} * ln.dual[i];
    return s % p == 0;
}

std::string to_string(const ProjPoint& pt) {
    std::ostringstream os;
    os << '(' << pt.coords[0] << ',' << pt.coords[1] << ',' << pt.coords[2] << ')';
    return os.str();
}

std::string to_string(const ProjLine& ln) {
    std::ostringstream os;
    os << '[' << ln.dual[0] << ',' << ln.dual[1] << ',' << ln.dual[2] << ']';
    return os.str();
}

ProjectivePlane::ProjectivePlane(std::uint32_t p) : p_(p) {
    require_prime(p);
    index_of_code_.assign(static_cast<std::size_t>(p) * p * p, UINT32_MAX);
    // Lexicographic enumeration of normalized vectors: (1,*,*), (0,1,*), (0,0,1)
    // sorted as vectors gives (0,0,1) < (0,1,x) < (1,x,y).
    std::vector<Vec3> normalized;
    for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b) {
            for (std::uint32_t c = 0; c < p; ++c) {
                Vec3 v{a, b, c};
                if (a == 0 && b == 0 && c == 0) continue;
                if (normalize_projective(v, p) == v) normalized.push_back(v);
            }
        }
    }
    std::sort(normalized.begin(), normalized.end());
    for (std::uint32_t i = 0; i < normalized.size(); ++i) {
        points_.push_back(ProjPoint{normalized[i]});
        lines_.push_back(ProjLine{normalized[i]});
        index_of_code_[code(normalized[i])] = i;
    }

    const std::uint32_t n = order();
    incidence_.assign(std::size_t{n} * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (ccg::incident(points_[i], lines_[j], p)) {
                incidence_[std::size_t{i} * n + j] = 1;
                lines_through_.push_back(j);
            }
        }
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 0; i < n; ++i) {
            if (incidence_[std::size_t{i} * n + j]) points_on_.push_back(i);
        }
    }
    if (points_on_.size() != std::size_t{n} * (p + 1) || lines_through_.size() != std::size_t{n} * (p + 1)) {
        throw std::logic_error("projective plane: incidence counts are not p+1");
    }
}

std::span<const std::uint32_t> ProjectivePlane::points_on(std::uint32_t line) const {
    return {points_on_.data() + std::size_t{line} * (p_ + 1), p_ + 1};
}

std::span<const std::uint32_t> ProjectivePlane::lines_through(std::uint32_t point) const {
    return {lines_through_.data() + std::size_t{point} * (p_ + 1), p_ + 1};
}

std::uint32_t ProjectivePlane::point_index(const Vec3& v) const { return index_of_code_[code(normalize_projective(v, p_))]; }

std::uint32_t ProjectivePlane::line_index(const Vec3& dual) const {
    return index_of_code_[code(normalize_projective(dual, p_))];
}

std::uint32_t ProjectivePlane::line_of(const Subspace& plane) const {
    if (plane.dimension() != 2) throw std::invalid_argument("line_of needs a 2-dimensional subspace");
    const auto normal = null_space<3>(plane.basis, p_);
    return line_index(normal.front());
}

ProjectivePlane enumerate_pg(std::uint32_t p) { return ProjectivePlane(p); }

// ---------------------------------------------------------------------------

std::size_t IncidenceMatrix::row_sum(std::size_t r) const {
    std::size_t s = 0;
    for (std::size_t c = 0; c < n_; ++c) s += bits_[r * n_ + c];
    return s;
}

std::size_t IncidenceMatrix::col_sum(std::size_t c) const {
    std::size_t s = 0;
    for (std::size_t r = 0; r < n_; ++r) s += bits_[r * n_ + c];
    return s;
}

std::vector<std::uint64_t> IncidenceMatrix::gram() const {
    std::vector<std::uint64_t> g(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < n_; ++k) s += bits_[i * n_ + k] & bits_[j * n_ + k];
            g[i * n_ + j] = s;
        }
    }
    return g;
}

IncidenceMatrix build_Tp(std::uint32_t p) {
    require_prime(p);
    const std::size_t n = std::size_t{p} * p + p + 1;
    IncidenceMatrix t(n);

    // Block row/column 0 is the single index 0; block 1 spans 1..p; block
    // 2+k (k = s-1 or t-1) spans 1 + p(k+1) ... p(k+2). Inner indices i, j
    // are stored zero-based; the congruence below uses i+1 and j+1.
    auto at = [p](std::size_t block, std::size_t inner) -> std::size_t {
        return block == 0 ? 0 : 1 + (block - 1) * p + inner;
    };

    t.set(0, 0, true);
    for (std::size_t j = 0; j < p; ++j) {
        t.set(0, at(1, j), true);  // e^T
        t.set(at(1, j), 0, true);  // e
    }
    for (std::size_t s = 1; s <= p; ++s) {
        for (std::size_t k = 0; k < p; ++k) {
            // R_s in block (1, 1+s): row s-1 all ones.
            t.set(at(1, s - 1), at(1 + s, k), true);
            // R_s^T in block (1+s, 1): column s-1 all ones.
            t.set(at(1 + s, k), at(1, s - 1), true);
        }
    }
    for (std::size_t s = 1; s <= p; ++s) {
        for (std::size_t tt = 1; tt <= p; ++tt) {
            for (std::size_t i = 1; i <= p; ++i) {
                for (std::size_t j = 1; j <= p; ++j) {
                    const bool one = s == 1 ? i == j : ((s - 1) * (i + j)) % p == tt % p;
                    if (one) t.set(at(1 + s, i - 1), at(1 + tt, j - 1), true);
                }
            }
        }
    }
    return t;
}

IncidenceMatrix coordinate_incidence(const ProjectivePlane& plane) {
    IncidenceMatrix m(plane.order());
    for (std::uint32_t i = 0; i < plane.order(); ++i) {
        for (std::uint32_t j = 0; j < plane.order(); ++j) m.set(i, j, plane.incident(i, j));
    }
    return m;
}

}  // namespace ccg

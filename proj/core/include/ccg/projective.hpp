#pragma once

// The projective plane PG(2,p): points, lines, incidence, and the block
// incidence matrix T_p.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ccg/matrix.hpp"

namespace ccg {

/// A 1-dimensional subspace of GF(p)^3; first nonzero coordinate is 1.
struct ProjPoint {
    Vec3 coords{};
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// A 2-dimensional subspace of GF(p)^3, stored as the normalized functional
/// [a,b,c] whose kernel it is.
struct ProjLine {
    Vec3 dual{};
    friend auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

/// Scale a nonzero vector so its first nonzero entry is 1.
Vec3 normalize_projective(Vec3 v, std::uint32_t p);

bool incident(const ProjPoint& pt, const ProjLine& ln, std::uint32_t p);

std::string to_string(const ProjPoint& pt);
std::string to_string(const ProjLine& ln);

/// Points and lines in lexicographic order plus incidence lists.
class ProjectivePlane {
public:
    explicit ProjectivePlane(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    /// p^2 + p + 1
    std::uint32_t order() const { return static_cast<std::uint32_t>(points_.size()); }

    const std::vector<ProjPoint>& points() const { return points_; }
    const std::vector<ProjLine>& lines() const { return lines_; }
    const ProjPoint& point(std::uint32_t i) const { return points_[i]; }
    const ProjLine& line(std::uint32_t j) const { return lines_[j]; }

    bool incident(std::uint32_t point, std::uint32_t line) const { return incidence_[point * order() + line] != 0; }
    /// Ascending indices of the p+1 points on a line.
    std::span<const std::uint32_t> points_on(std::uint32_t line) const;
    /// Ascending indices of the p+1 lines through a point.
    std::span<const std::uint32_t> lines_through(std::uint32_t point) const;

    /// Index of the point spanned by a nonzero vector.
    std::uint32_t point_index(const Vec3& v) const;
    /// Index of the line with the given (not necessarily normalized) functional.
    std::uint32_t line_index(const Vec3& dual) const;
    /// Index of the line equal to a 2-dimensional subspace.
    std::uint32_t line_of(const Subspace& plane) const;

private:
    std::uint32_t code(const Vec3& v) const { return (v[0] * p_ + v[1]) * p_ + v[2]; }

    std::uint32_t p_;
    std::vector<ProjPoint> points_;
    std::vector<ProjLine> lines_;
    std::vector<std::uint8_t> incidence_;
    std::vector<std::uint32_t> points_on_;     // order x (p+1)
    std::vector<std::uint32_t> lines_through_; // order x (p+1)
    std::vector<std::uint32_t> index_of_code_; // normalized vector code -> index
};

/// Throws std::invalid_argument for non-prime p.
ProjectivePlane enumerate_pg(std::uint32_t p);

/// Square 0/1 matrix.
class IncidenceMatrix {
public:
    explicit IncidenceMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

    std::size_t size() const { return n_; }
    std::uint8_t operator()(std::size_t r, std::size_t c) const { return bits_[r * n_ + c]; }
    void set(std::size_t r, std::size_t c, bool v) { bits_[r * n_ + c] = v ? 1 : 0; }

    std::size_t row_sum(std::size_t r) const;
    std::size_t col_sum(std::size_t c) const;
    /// M * M^T over the integers, row-major.
    std::vector<std::uint64_t> gram() const;

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> bits_;
};

/// The block matrix
///
///   [ 1   e^T    0       0     ...  0     ]
///   [ e   0      R_1     R_2   ...  R_p   ]
///   [ 0   R_1^T  I       I     ...  I     ]
///   [ 0   R_2^T  S_2,1   S_2,2 ...  S_2,p ]
///   [ ...                                 ]
///   [ 0   R_p^T  S_p,1   S_p,2 ...  S_p,p ]
///
/// with (R_s)_ij = [i = s] and (S_s,t)_ij = [(s-1)(i+j) = t mod p],
/// indices 1-based. It is the point-line incidence matrix of PG(2,p).
IncidenceMatrix build_Tp(std::uint32_t p);

/// Incidence matrix of the coordinate enumeration (rows points, columns lines).
IncidenceMatrix coordinate_incidence(const ProjectivePlane& plane);

}  // namespace ccg

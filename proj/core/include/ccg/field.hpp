#pragma once

// Arithmetic in the prime field GF(p) and small polynomials over it.

#include <array>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace ccg {

/// True iff n is a prime number.
bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint64_t p);

/// Modular inverse of a nonzero residue. Callers guarantee 0 < a < p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// A residue modulo p. The modulus travels with the value; combining
/// residues of different moduli is a programming error.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(std::int64_t value, std::uint32_t modulus);

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        assert(a.modulus_ == b.modulus_);
        return raw(a.value_ + b.value_ >= a.modulus_ ? a.value_ + b.value_ - a.modulus_ : a.value_ + b.value_,
                   a.modulus_);
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        assert(a.modulus_ == b.modulus_);
        return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_, a.modulus_);
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        assert(a.modulus_ == b.modulus_);
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % a.modulus_),
                   a.modulus_);
    }
    FieldElement operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
    friend FieldElement operator/(FieldElement a, FieldElement b);

    FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
    FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
    FieldElement& operator*=(FieldElement o) { return *this = *this * o; }

    friend bool operator==(FieldElement a, FieldElement b) {
        assert(a.modulus_ == b.modulus_);
        return a.value_ == b.value_;
    }
    friend bool operator<(FieldElement a, FieldElement b) { return a.value_ < b.value_; }

private:
    static FieldElement raw(std::uint32_t v, std::uint32_t m) {
        FieldElement r;
        r.value_ = v;
        r.modulus_ = m;
        return r;
    }

    std::uint32_t value_ = 0;
    std::uint32_t modulus_ = 2;
};

std::ostream& operator<<(std::ostream& os, FieldElement a);

/// Multiplicative inverse. Throws std::domain_error("no inverse") for zero.
FieldElement fp_inv(FieldElement a);

/// Polynomial over GF(p), coefficients stored lowest degree first.
/// Capacity is fixed; everything in this project stays at degree <= 3,
/// a little headroom exists so products of two cubics can be formed.
class Poly {
public:
    static constexpr int kMaxDegree = 7;

    explicit Poly(std::uint32_t modulus);
    /// Coefficients lowest degree first; trailing zeros are trimmed.
    Poly(std::initializer_list<std::int64_t> coeffs, std::uint32_t modulus);
    Poly(const std::vector<FieldElement>& coeffs, std::uint32_t modulus);

    /// x - root
    static Poly linear(FieldElement root);
    static Poly monomial(int degree, std::uint32_t modulus);

    std::uint32_t modulus() const { return modulus_; }
    /// -1 for the zero polynomial.
    int degree() const { return degree_; }
    bool is_zero() const { return degree_ < 0; }
    bool is_monic() const { return degree_ >= 0 && coeff_[degree_] == 1; }
    FieldElement coeff(int i) const;
    FieldElement leading() const { return coeff(degree_); }

    FieldElement operator()(FieldElement x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Euclidean division; throws std::domain_error when dividing by zero.
    struct DivMod;
    DivMod divmod(const Poly& divisor) const;

    std::string to_string() const;

private:
    void trim();

    std::array<std::uint32_t, kMaxDegree + 1> coeff_{};
    int degree_ = -1;
    std::uint32_t modulus_;
};

struct Poly::DivMod {
    Poly quotient;
    Poly remainder;
};

std::ostream& operator<<(std::ostream& os, const Poly& q);

/// All x in GF(p) with q(x) = 0, ascending. Found by evaluating q at
/// every field element. Throws std::domain_error for the zero polynomial
/// and std::invalid_argument for constants.
std::vector<FieldElement> poly_roots(const Poly& q);

/// Multiplicity of root r in q (q nonzero).
int root_multiplicity(const Poly& q, FieldElement r);

/// Irreducibility over GF(p) for 1 <= deg q <= 3 (no root criterion).
/// Throws std::invalid_argument for any other degree.
bool poly_is_irreducible(const Poly& q);

}  // namespace ccg

#include "ccg/field.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ccg {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    assert(a % p != 0);
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    assert(modulus >= 2);
    std::int64_t v = value % static_cast<std::int64_t>(modulus);
    if (v < 0) v += modulus;
    value_ = static_cast<std::uint32_t>(v);
}

FieldElement operator/(FieldElement a, FieldElement b) { return a * fp_inv(b); }

std::ostream& operator<<(std::ostream& os, FieldElement a) { return os << a.value(); }

FieldElement fp_inv(FieldElement a) {
    if (a.is_zero()) throw std::domain_error("no inverse");
    return FieldElement(inv_mod(a.value(), a.modulus()), a.modulus());
}

// ---------------------------------------------------------------------------

Poly::Poly(std::uint32_t modulus) : modulus_(modulus) {}

Poly::Poly(std::initializer_list<std::int64_t> coeffs, std::uint32_t modulus) : modulus_(modulus) {
    if (coeffs.size() > coeff_.size()) throw std::invalid_argument("polynomial degree exceeds capacity");
    int i = 0;
    for (auto c : coeffs) coeff_[i++] = FieldElement(c, modulus).value();
    trim();
}

Poly::Poly(const std::vector<FieldElement>& coeffs, std::uint32_t modulus) : modulus_(modulus) {
    if (coeffs.size() > coeff_.size()) throw std::invalid_argument("polynomial degree exceeds capacity");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        assert(coeffs[i].modulus() == modulus);
        coeff_[i] = coeffs[i].value();
    }
    trim();
}

Poly Poly::linear(FieldElement root) {
    Poly r(root.modulus());
    r.coeff_[0] = (-root).value();
    r.coeff_[1] = 1;
    r.degree_ = 1;
    return r;
}

Poly Poly::monomial(int degree, std::uint32_t modulus) {
    if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("monomial degree out of range");
    Poly r(modulus);
    r.coeff_[degree] = 1;
    r.degree_ = degree;
    return r;
}

void Poly::trim() {
    degree_ = kMaxDegree;
    while (degree_ >= 0 && coeff_[degree_] == 0) --degree_;
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i > kMaxDegree) return FieldElement(0, modulus_);
    return FieldElement(coeff_[i], modulus_);
}

FieldElement Poly::operator()(FieldElement x) const {
    assert(x.modulus() == modulus_);
    FieldElement acc(0, modulus_);
    for (int i = degree_; i >= 0; --i) acc = acc * x + FieldElement(coeff_[i], modulus_);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    assert(a.modulus_ == b.modulus_);
    Poly r(a.modulus_);
    for (int i = 0; i <= Poly::kMaxDegree; ++i) r.coeff_[i] = (a.coeff_[i] + b.coeff_[i]) % a.modulus_;
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    assert(a.modulus_ == b.modulus_);
    Poly r(a.modulus_);
    for (int i = 0; i <= Poly::kMaxDegree; ++i) r.coeff_[i] = (a.coeff_[i] + a.modulus_ - b.coeff_[i]) % a.modulus_;
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    assert(a.modulus_ == b.modulus_);
    Poly r(a.modulus_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.degree_ + b.degree_ > Poly::kMaxDegree) throw std::invalid_argument("polynomial degree exceeds capacity");
    const std::uint64_t p = a.modulus_;
    for (int i = 0; i <= a.degree_; ++i) {
        for (int j = 0; j <= b.degree_; ++j) {
            r.coeff_[i + j] = static_cast<std::uint32_t>((r.coeff_[i + j] + std::uint64_t{a.coeff_[i]} * b.coeff_[j]) % p);
        }
    }
    r.trim();
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.modulus_ == b.modulus_ && a.degree_ == b.degree_ && a.coeff_ == b.coeff_;
}

Poly::DivMod Poly::divmod(const Poly& divisor) const {
    assert(divisor.modulus_ == modulus_);
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(modulus_);
    Poly r = *this;
    const std::uint64_t p = modulus_;
    const std::uint64_t lead_inv = inv_mod(divisor.coeff_[divisor.degree_], modulus_);
    while (r.degree_ >= divisor.degree_) {
        const int shift = r.degree_ - divisor.degree_;
        const std::uint64_t factor = r.coeff_[r.degree_] * lead_inv % p;
        q.coeff_[shift] = static_cast<std::uint32_t>(factor);
        for (int i = 0; i <= divisor.degree_; ++i) {
            const std::uint64_t sub = factor * divisor.coeff_[i] % p;
            r.coeff_[i + shift] = static_cast<std::uint32_t>((r.coeff_[i + shift] + p - sub) % p);
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree_; i >= 0; --i) {
        if (coeff_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (coeff_[i] != 1 || i == 0) os << coeff_[i];
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& q) { return os << q.to_string(); }

std::vector<FieldElement> poly_roots(const Poly& q) {
    if (q.is_zero()) throw std::domain_error("roots of the zero polynomial are undefined");
    if (q.degree() < 1) throw std::invalid_argument("poly_roots needs degree >= 1");
    std::vector<FieldElement> roots;
    for (std::uint32_t x = 0; x < q.modulus(); ++x) {
        FieldElement fx(x, q.modulus());
        if (q(fx).is_zero()) roots.push_back(fx);
    }
    return roots;
}

int root_multiplicity(const Poly& q, FieldElement r) {
    assert(!q.is_zero());
    const Poly factor = Poly::linear(r);
    Poly rest = q;
    int m = 0;
    for (;;) {
        auto [quot, rem] = rest.divmod(factor);
        if (!rem.is_zero()) return m;
        ++m;
        rest = quot;
    }
}

bool poly_is_irreducible(const Poly& q) {
    if (q.degree() < 1 || q.degree() > 3) {
        throw std::invalid_argument("irreducibility test only valid for degree 1..3, got " +
                                    std::to_string(q.degree()));
    }
    if (q.degree() == 1) return true;
    return poly_roots(q).empty();
}

}  // namespace ccg

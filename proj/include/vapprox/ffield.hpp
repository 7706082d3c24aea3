#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "vapprox/value.hpp"

namespace vapprox {

/// Element of GF(p^k) as its coefficient vector (length k) on 1, g, ..., g^(k-1),
/// where g is the class of the variable modulo the defining polynomial.
struct FFElem {
    std::vector<std::uint64_t> c;
    bool operator==(const FFElem&) const = default;
    auto operator<=>(const FFElem&) const = default;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// GF(p^k) = F_p[g]/(modulus). The modulus is verified irreducible on construction.
class FiniteField {
public:
    /// Prime field F_p.
    static FieldPtr prime_field(std::uint64_t p);
    /// GF(p^k) defined by the lexicographically first monic irreducible of degree k.
    static FieldPtr make(std::uint64_t p, unsigned k);
    /// GF(p^k) for a given monic modulus (coefficients low to high); throws if reducible.
    static FieldPtr with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    /// p^k.
    mpz_class order() const;
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    FFElem zero() const { return FFElem{std::vector<std::uint64_t>(k_, 0)}; }
    FFElem one() const { return from_int(1); }
    FFElem from_int(std::int64_t n) const;
    /// The class of the variable, g.
    FFElem generator() const;
    /// Builds the element sum c_i g^i (c reduced mod the modulus).
    FFElem from_coeffs(std::vector<std::uint64_t> c) const;

    bool is_zero(const FFElem& a) const;
    bool is_one(const FFElem& a) const { return a == one(); }
    /// Is the element in the prime subfield (a constant vector)?
    bool in_prime_field(const FFElem& a) const;

    FFElem add(const FFElem& a, const FFElem& b) const;
    FFElem sub(const FFElem& a, const FFElem& b) const;
    FFElem neg(const FFElem& a) const;
    FFElem mul(const FFElem& a, const FFElem& b) const;
    FFElem scale(const FFElem& a, std::uint64_t s) const;
    /// Throws Error on zero.
    FFElem inv(const FFElem& a) const;
    FFElem div(const FFElem& a, const FFElem& b) const { return mul(a, inv(b)); }
    FFElem pow(const FFElem& a, const mpz_class& e) const;
    FFElem frobenius(const FFElem& a) const;

    /// Unique b with b^p = a (Frobenius is bijective on a finite field).
    FFElem pth_root(const FFElem& a) const;
    /// Absolute trace to F_p: a + a^p + ... + a^(p^(k-1)).
    std::uint64_t absolute_trace(const FFElem& a) const;

    /// Every element, in index order; only for small fields.
    std::vector<FFElem> elements() const;

    std::string str(const FFElem& a) const;
    /// "GF(p^k, modulus=...)".
    std::string describe() const;

    bool same_as(const FiniteField& o) const { return p_ == o.p_ && mod_ == o.mod_; }

private:
    FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus);
    std::uint64_t p_;
    unsigned k_;
    std::vector<std::uint64_t> mod_;
};

/// Polynomial with coefficients in a finite field; no leading zero coefficients.
class FFPoly {
public:
    explicit FFPoly(FieldPtr f) : field_(std::move(f)) {}
    FFPoly(FieldPtr f, std::vector<FFElem> coeffs);

    static FFPoly constant(FieldPtr f, const FFElem& c);
    static FFPoly x(FieldPtr f);
    /// Monic linear y - root.
    static FFPoly linear(FieldPtr f, const FFElem& root);

    const FieldPtr& field() const { return field_; }
    const std::vector<FFElem>& coeffs() const { return c_; }
    FFElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && field_->is_one(c_[0]); }
    const FFElem& lead() const;

    FFPoly operator+(const FFPoly& o) const;
    FFPoly operator-(const FFPoly& o) const;
    FFPoly operator*(const FFPoly& o) const;
    FFPoly operator*(const FFElem& s) const;
    bool operator==(const FFPoly& o) const { return field_->same_as(*o.field_) && c_ == o.c_; }

    FFPoly monic() const;
    FFPoly derivative() const;
    FFElem eval(const FFElem& a) const;

    /// Text in the given variable; field elements print as polynomials in g.
    std::string str(const std::string& var = "y") const;

private:
    void trim();
    FieldPtr field_;
    std::vector<FFElem> c_;
};

void divmod(const FFPoly& f, const FFPoly& d, FFPoly& q, FFPoly& r);
FFPoly operator%(const FFPoly& f, const FFPoly& d);
FFPoly operator/(const FFPoly& f, const FFPoly& d);
/// Monic gcd (zero if both are zero).
FFPoly gcd(FFPoly a, FFPoly b);
FFPoly powmod(const FFPoly& base, const mpz_class& e, const FFPoly& mod);

/// Canonical ordering of polynomials: by degree, then coefficients from the top.
bool canonical_less(const FFPoly& a, const FFPoly& b);

struct FFactor {
    FFPoly factor;
    unsigned multiplicity;
};

/// Monic irreducible factorization: squarefree split, distinct-degree split,
/// equal-degree split. Root splitting over fields with at most 64 elements is
/// exhaustive; otherwise Cantor-Zassenhaus driven by the given generator.
/// Output is sorted canonically. Throws on the zero polynomial.
std::vector<FFactor> ff_factor(const FFPoly& f, std::mt19937_64& rng);
std::vector<FFactor> ff_factor(const FFPoly& f);

/// All roots in the coefficient field, repeated by multiplicity, sorted.
std::vector<FFElem> ff_roots(const FFPoly& f);

bool ff_is_irreducible(const FFPoly& f);

}  // namespace vapprox

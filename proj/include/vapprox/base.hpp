#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "vapprox/value.hpp"

namespace vapprox {

bool is_prime(std::uint64_t n);

/// Dense polynomial in t over the prime field F_p (coefficient i is t^i).
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    static FpPoly constant(std::uint64_t p, std::int64_t c);
    static FpPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t deg);

    std::uint64_t prime() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t at(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    /// Order of vanishing at t = 0; -1 for the zero polynomial.
    int low_order() const;

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator-() const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scale(std::uint64_t k) const;
    /// Euclidean division; the divisor must be nonzero.
    void divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const;
    FpPoly monic() const;
    bool operator==(const FpPoly& o) const = default;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Reduced fraction num/den in F_p(t): coprime, den monic.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(FpPoly num, FpPoly den);
    explicit RatFunc(const FpPoly& num);

    std::uint64_t prime() const { return num_.prime(); }
    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const = default;

    std::string str() const;

private:
    FpPoly num_, den_;
};

/// The two supported valued base fields: (Q, v_p) and (F_p(t), v_t).
struct BaseField {
    enum class Kind { Rationals, RationalFunctions };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 2;

    static BaseField rationals(std::uint64_t p);
    static BaseField rational_functions(std::uint64_t p);

    bool operator==(const BaseField&) const = default;
    /// "Q(v_2)" / "F_2(t)".
    std::string str() const;
};

/// An element of a base field: an exact rational or a reduced element of F_p(t).
class BaseElem {
public:
    using Rep = std::variant<mpq_class, RatFunc>;

    BaseElem() = default;
    explicit BaseElem(mpq_class q) : rep_(std::move(q)) { std::get<mpq_class>(rep_).canonicalize(); }
    explicit BaseElem(RatFunc f) : rep_(std::move(f)) {}

    static BaseElem zero(const BaseField& k);
    static BaseElem one(const BaseField& k);
    static BaseElem integer(const BaseField& k, long n);
    /// p for Q, t for F_p(t).
    static BaseElem uniformizer(const BaseField& k);
    static BaseElem variable_t(const BaseField& k);

    bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
    const mpq_class& as_rational() const { return std::get<mpq_class>(rep_); }
    const RatFunc& as_ratfunc() const { return std::get<RatFunc>(rep_); }
    bool is_zero() const;
    bool is_one() const;
    /// True iff this element lies in the given field.
    bool belongs_to(const BaseField& k) const;

    BaseElem operator+(const BaseElem& o) const;
    BaseElem operator-(const BaseElem& o) const;
    BaseElem operator-() const;
    BaseElem operator*(const BaseElem& o) const;
    /// Throws Error on division by zero.
    BaseElem operator/(const BaseElem& o) const;
    BaseElem& operator+=(const BaseElem& o) { return *this = *this + o; }
    BaseElem& operator-=(const BaseElem& o) { return *this = *this - o; }
    BaseElem& operator*=(const BaseElem& o) { return *this = *this * o; }
    bool operator==(const BaseElem& o) const = default;

    std::string str() const;

private:
    Rep rep_{mpq_class(0)};
};

BaseElem pow(const BaseElem& a, long n);

/// The base valuation: v_p on Q, v_t on F_p(t). Infinity iff a == 0.
Value base_valuation(const BaseField& k, const BaseElem& a);

/// Residue class in F_p of an element of nonnegative value.
std::uint64_t residue(const BaseField& k, const BaseElem& a);

/// Parse an element (integers, t, + - * / ^ and parentheses).
BaseElem parse_base_elem(const BaseField& k, const std::string& text);

}  // namespace vapprox

#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace vapprox {

/// Library error for precondition and input violations.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is found broken (a bug, not bad input).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An element of Q extended by +infinity.
///
/// Finite values are kept canonical (lowest terms, positive denominator),
/// so equality is structural. Infinity absorbs addition and compares above
/// every finite value.
class Value {
public:
    Value() = default;
    Value(long v) : q_(v) {}
    Value(const mpz_class& v) : q_(v) {}
    Value(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }
    Value(long num, long den);

    static Value infinity() {
        Value v;
        v.inf_ = true;
        return v;
    }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }
    bool is_integer() const { return !inf_ && q_.get_den() == 1; }

    /// The rational value; throws on infinity.
    const mpq_class& rational() const;
    mpz_class numerator() const { return rational().get_num(); }
    mpz_class denominator() const { return rational().get_den(); }
    /// Integer value; throws unless is_integer().
    long to_long() const;

    Value operator-() const;
    friend Value operator+(const Value& a, const Value& b);
    friend Value operator-(const Value& a, const Value& b);
    /// Scaling by a rational; infinity times a positive factor stays infinite.
    friend Value operator*(const Value& a, const mpq_class& k);
    friend Value operator/(const Value& a, const mpq_class& k);

    friend bool operator==(const Value& a, const Value& b);
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

    /// "a/b", "a" or "inf".
    std::string str() const;
    /// Accepts "inf", integers and "a/b".
    static Value parse(const std::string& text);

private:
    mpq_class q_{0};
    bool inf_ = false;
};

inline Value min(const Value& a, const Value& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace vapprox

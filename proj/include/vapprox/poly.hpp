#pragma once

#include <string>
#include <vector>

#include "vapprox/base.hpp"

namespace vapprox {

/// Dense univariate polynomial in x over a base field.
/// Coefficient i multiplies x^i; there is never a trailing zero, and the
/// zero polynomial has no coefficients.
class Polynomial {
public:
    explicit Polynomial(BaseField k) : field_(k) {}
    Polynomial(BaseField k, std::vector<BaseElem> coeffs);

    static Polynomial constant(const BaseField& k, const BaseElem& c);
    static Polynomial x(const BaseField& k);
    /// c * x^n
    static Polynomial monomial(const BaseField& k, const BaseElem& c, std::size_t n);

    const BaseField& field() const { return field_; }
    const std::vector<BaseElem>& coeffs() const { return c_; }
    BaseElem coeff(std::size_t i) const;
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const BaseElem& lead() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const BaseElem& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }

    Polynomial pow(unsigned n) const;
    Polynomial derivative() const;
    BaseElem eval_at(const BaseElem& b) const;
    Polynomial monic() const;

    /// Canonical text, descending powers: "x^2+2*x+4".
    std::string str() const;

private:
    void trim();
    BaseField field_;
    std::vector<BaseElem> c_;
};

/// Euclidean division f = q*d + r with deg r < deg d. Throws on d == 0.
void divmod(const Polynomial& f, const Polynomial& d, Polynomial& q, Polynomial& r);
Polynomial operator%(const Polynomial& f, const Polynomial& d);
Polynomial operator/(const Polynomial& f, const Polynomial& d);

/// f = f_0 + f_1 key + ... + f_r key^r with deg f_i < deg key, f_r != 0.
struct QExpansion {
    Polynomial key;
    std::vector<Polynomial> digits;

    std::size_t length() const { return digits.size(); }
    Polynomial reassemble() const;
};

/// Repeated Euclidean division by a monic non-constant key. f must be nonzero.
QExpansion q_expansion(const Polynomial& f, const Polynomial& key);

/// Parser for the text grammar: integers, t, x, + - * / ^ and parentheses.
/// Division is only allowed by base-field elements.
Polynomial parse_polynomial(const BaseField& k, const std::string& text);

}  // namespace vapprox

#include "vapprox/poly.hpp"

#include <cctype>
#include <sstream>

namespace vapprox {

Polynomial::Polynomial(BaseField k, std::vector<BaseElem> coeffs) : field_(k), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!c.belongs_to(field_)) throw Error("coefficient " + c.str() + " is not in " + field_.str());
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const BaseField& k, const BaseElem& c) { return Polynomial(k, {c}); }

Polynomial Polynomial::x(const BaseField& k) { return monomial(k, BaseElem::one(k), 1); }

Polynomial Polynomial::monomial(const BaseField& k, const BaseElem& c, std::size_t n) {
    std::vector<BaseElem> v(n + 1, BaseElem::zero(k));
    v[n] = c;
    return Polynomial(k, std::move(v));
}

BaseElem Polynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BaseElem::zero(field_); }

const BaseElem& Polynomial::lead() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

namespace {
void check_same_field(const Polynomial& a, const Polynomial& b) {
    if (!(a.field() == b.field())) throw Error("polynomials over different base fields");
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_field(*this, o);
    std::vector<BaseElem> r(std::max(c_.size(), o.c_.size()), BaseElem::zero(field_));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator-() const {
    std::vector<BaseElem> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_field(*this, o);
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    std::vector<BaseElem> r(c_.size() + o.c_.size() - 1, BaseElem::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator*(const BaseElem& c) const {
    std::vector<BaseElem> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(a * c);
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = constant(field_, BaseElem::one(field_));
    Polynomial base = *this;
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial(field_);
    std::vector<BaseElem> r;
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.push_back(c_[i] * BaseElem::integer(field_, static_cast<long>(i)));
    return Polynomial(field_, std::move(r));
}

BaseElem Polynomial::eval_at(const BaseElem& b) const {
    if (!b.belongs_to(field_)) throw Error("evaluation point " + b.str() + " is not in " + field_.str());
    BaseElem acc = BaseElem::zero(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * b + c_[i];
    return acc;
}

Polynomial Polynomial::monic() const { return *this * (BaseElem::one(field_) / lead()); }

namespace {
bool has_top_level_sum(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && (c == '+' || (c == '-' && i > 0))) return true;
    }
    return false;
}
}  // namespace

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BaseElem& c = c_[i];
        if (c.is_zero()) continue;
        std::string coef;
        bool negative = false;
        if (c.is_rational()) {
            negative = sgn(c.as_rational()) < 0;
            coef = mpq_class(abs(c.as_rational())).get_str();
        } else {
            coef = c.str();
        }
        if (negative) os << '-';
        else if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << coef;
            continue;
        }
        if (!(coef == "1")) {
            if (has_top_level_sum(coef)) os << '(' << coef << ")*";
            else os << coef << '*';
        }
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

void divmod(const Polynomial& f, const Polynomial& d, Polynomial& q, Polynomial& r) {
    if (d.is_zero()) throw Error("polynomial division by zero");
    check_same_field(f, d);
    const BaseField& k = f.field();
    std::vector<BaseElem> rem = f.coeffs();
    const auto& dc = d.coeffs();
    std::vector<BaseElem> quo(rem.size() >= dc.size() ? rem.size() - dc.size() + 1 : 0, BaseElem::zero(k));
    const bool monic = d.is_monic();
    const BaseElem inv = monic ? BaseElem::one(k) : BaseElem::one(k) / d.lead();
    for (std::size_t s = quo.size(); s-- > 0;) {
        BaseElem coef = rem[s + dc.size() - 1];
        if (coef.is_zero()) continue;
        if (!monic) coef *= inv;
        quo[s] = coef;
        for (std::size_t j = 0; j < dc.size(); ++j)
            if (!dc[j].is_zero()) rem[s + j] -= coef * dc[j];
    }
    q = Polynomial(k, std::move(quo));
    r = Polynomial(k, std::move(rem));
}

Polynomial operator%(const Polynomial& f, const Polynomial& d) {
    Polynomial q(f.field()), r(f.field());
    divmod(f, d, q, r);
    return r;
}

Polynomial operator/(const Polynomial& f, const Polynomial& d) {
    Polynomial q(f.field()), r(f.field());
    divmod(f, d, q, r);
    return q;
}

Polynomial QExpansion::reassemble() const {
    Polynomial acc(key.field());
    for (std::size_t i = digits.size(); i-- > 0;) acc = acc * key + digits[i];
    return acc;
}

QExpansion q_expansion(const Polynomial& f, const Polynomial& key) {
    if (key.degree() < 1) throw Error("expansion key must be non-constant");
    if (!key.is_monic()) throw Error("expansion key " + key.str() + " must be monic");
    if (f.is_zero()) throw Error("expansion of the zero polynomial");
    QExpansion e{key, {}};
    Polynomial rest = f;
    while (!rest.is_zero()) {
        Polynomial q(f.field()), r(f.field());
        divmod(rest, key, q, r);
        e.digits.push_back(std::move(r));
        rest = std::move(q);
    }
    return e;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(const BaseField& k, const std::string& text) : k_(k), s_(text) {}

    Polynomial parse() {
        Polynomial r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("parse error in '" + s_ + "' at position " + std::to_string(pos_) + ": " + what);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                Polynomial d = unary();
                if (d.degree() > 0) fail("division by a non-constant polynomial");
                if (d.is_zero()) fail("division by zero");
                acc = acc * (BaseElem::one(k_) / d.coeff(0));
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (!eat('^')) return base;
        bool negative = eat('-');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        long e = std::stol(s_.substr(start, pos_ - start));
        if (e > 4096) fail("exponent too large");
        if (negative) {
            if (base.degree() > 0) fail("negative power of a polynomial in x");
            if (base.is_zero()) fail("negative power of zero");
            return Polynomial::constant(k_, vapprox::pow(base.coeff(0), -e));
        }
        return base.pow(static_cast<unsigned>(e));
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'x') {
            ++pos_;
            return Polynomial::x(k_);
        }
        if (c == 't') {
            ++pos_;
            if (k_.kind != BaseField::Kind::RationalFunctions) fail("'t' is only available over F_p(t)");
            return Polynomial::constant(k_, BaseElem::variable_t(k_));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class n(s_.substr(start, pos_ - start));
            if (k_.kind == BaseField::Kind::Rationals) return Polynomial::constant(k_, BaseElem(mpq_class(n)));
            mpz_class m = n % mpz_class(static_cast<unsigned long>(k_.p));
            return Polynomial::constant(k_, BaseElem::integer(k_, static_cast<long>(m.get_ui())));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const BaseField& k_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const BaseField& k, const std::string& text) { return Parser(k, text).parse(); }

}  // namespace vapprox

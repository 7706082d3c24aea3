#include "vapprox/base.hpp"

#include <algorithm>
#include <sstream>

#include "vapprox/poly.hpp"

namespace vapprox {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 result = 1, base = a % p;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw Error("inverse of zero in F_" + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

// ---------------------------------------------------------------- FpPoly

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::constant(std::uint64_t p, std::int64_t c) {
    auto m = static_cast<std::int64_t>(p);
    return FpPoly(p, {static_cast<std::uint64_t>(((c % m) + m) % m)});
}

FpPoly FpPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t deg) {
    std::vector<std::uint64_t> v(deg + 1, 0);
    v[deg] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int FpPoly::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) return static_cast<int>(i);
    return -1;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (at(i) + o.at(i)) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-() const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (p_ - c_[i]) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + (-o); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_, {});
    std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p_;
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scale(std::uint64_t k) const {
    std::vector<std::uint64_t> r(c_);
    for (auto& c : r) c = c * (k % p_) % p_;
    return FpPoly(p_, std::move(r));
}

void FpPoly::divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    std::vector<std::uint64_t> rem(c_);
    std::vector<std::uint64_t> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, 0);
    const std::uint64_t inv = mod_inverse(d.lead(), p_);
    for (std::size_t k = quo.size(); k-- > 0;) {
        std::uint64_t coef = rem[k + d.c_.size() - 1] * inv % p_;
        quo[k] = coef;
        if (!coef) continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            rem[k + j] = (rem[k + j] + p_ - coef * d.c_[j] % p_) % p_;
    }
    q = FpPoly(p_, std::move(quo));
    r = FpPoly(p_, std::move(rem));
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scale(mod_inverse(lead(), p_));
}

std::string FpPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c_[i];
            continue;
        }
        if (c_[i] != 1) os << c_[i] << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly q, r;
        a.divmod(b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const FpPoly& num) : num_(num), den_(FpPoly::constant(num.prime(), 1)) {}

RatFunc::RatFunc(FpPoly num, FpPoly den) {
    if (num.prime() != den.prime()) throw Error("rational function over mismatched primes");
    if (den.is_zero()) throw Error("division by zero");
    const std::uint64_t p = num.prime();
    if (num.is_zero()) {
        num_ = FpPoly(p, {});
        den_ = FpPoly::constant(p, 1);
        return;
    }
    FpPoly g = gcd(num, den), r;
    num.divmod(g, num_, r);
    den.divmod(g, den_, r);
    const std::uint64_t inv = mod_inverse(den_.lead(), p);
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error("division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

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
bool is_bare_power(const FpPoly& d) {
    // t^k with unit coefficient
    return d.low_order() == d.degree() && d.lead() == 1;
}
}  // namespace

std::string RatFunc::str() const {
    std::string n = num_.str();
    if (den_.degree() == 0) return n;
    if (has_top_level_sum(n)) n = "(" + n + ")";
    std::string d = den_.str();
    if (!is_bare_power(den_)) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------- BaseField

BaseField BaseField::rationals(std::uint64_t p) {
    if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
    return BaseField{Kind::Rationals, p};
}

BaseField BaseField::rational_functions(std::uint64_t p) {
    if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
    return BaseField{Kind::RationalFunctions, p};
}

std::string BaseField::str() const {
    if (kind == Kind::Rationals) return "Q(v_" + std::to_string(p) + ")";
    return "F_" + std::to_string(p) + "(t)";
}

// ---------------------------------------------------------------- BaseElem

BaseElem BaseElem::zero(const BaseField& k) { return integer(k, 0); }
BaseElem BaseElem::one(const BaseField& k) { return integer(k, 1); }

BaseElem BaseElem::integer(const BaseField& k, long n) {
    if (k.kind == BaseField::Kind::Rationals) return BaseElem(mpq_class(n));
    return BaseElem(RatFunc(FpPoly::constant(k.p, n)));
}

BaseElem BaseElem::uniformizer(const BaseField& k) {
    if (k.kind == BaseField::Kind::Rationals) return BaseElem(mpq_class(static_cast<unsigned long>(k.p)));
    return variable_t(k);
}

BaseElem BaseElem::variable_t(const BaseField& k) {
    if (k.kind != BaseField::Kind::RationalFunctions) throw Error("'t' is only available over F_p(t)");
    return BaseElem(RatFunc(FpPoly::monomial(k.p, 1, 1)));
}

bool BaseElem::is_zero() const {
    if (is_rational()) return sgn(as_rational()) == 0;
    return as_ratfunc().is_zero();
}

bool BaseElem::is_one() const {
    if (is_rational()) return as_rational() == 1;
    const auto& f = as_ratfunc();
    return f.den().degree() == 0 && f.num().degree() == 0 && f.num().lead() == 1;
}

bool BaseElem::belongs_to(const BaseField& k) const {
    if (k.kind == BaseField::Kind::Rationals) return is_rational();
    return !is_rational() && as_ratfunc().prime() == k.p;
}

namespace {
void check_compatible(const BaseElem& a, const BaseElem& b) {
    if (a.is_rational() != b.is_rational() ||
        (!a.is_rational() && a.as_ratfunc().prime() != b.as_ratfunc().prime()))
        throw Error("arithmetic between elements of different base fields");
}
}  // namespace

BaseElem BaseElem::operator+(const BaseElem& o) const {
    check_compatible(*this, o);
    if (is_rational()) return BaseElem(mpq_class(as_rational() + o.as_rational()));
    return BaseElem(as_ratfunc() + o.as_ratfunc());
}

BaseElem BaseElem::operator-(const BaseElem& o) const {
    check_compatible(*this, o);
    if (is_rational()) return BaseElem(mpq_class(as_rational() - o.as_rational()));
    return BaseElem(as_ratfunc() - o.as_ratfunc());
}

BaseElem BaseElem::operator-() const {
    if (is_rational()) return BaseElem(mpq_class(-as_rational()));
    return BaseElem(-as_ratfunc());
}

BaseElem BaseElem::operator*(const BaseElem& o) const {
    check_compatible(*this, o);
    if (is_rational()) return BaseElem(mpq_class(as_rational() * o.as_rational()));
    return BaseElem(as_ratfunc() * o.as_ratfunc());
}

BaseElem BaseElem::operator/(const BaseElem& o) const {
    check_compatible(*this, o);
    if (o.is_zero()) throw Error("division by zero");
    if (is_rational()) return BaseElem(mpq_class(as_rational() / o.as_rational()));
    return BaseElem(as_ratfunc() / o.as_ratfunc());
}

std::string BaseElem::str() const {
    if (is_rational()) return as_rational().get_str();
    return as_ratfunc().str();
}

BaseElem pow(const BaseElem& a, long n) {
    if (n < 0) {
        if (a.is_zero()) throw Error("negative power of zero");
        BaseElem one = a.is_rational() ? BaseElem(mpq_class(1)) : BaseElem(RatFunc(FpPoly::constant(a.as_ratfunc().prime(), 1)));
        return one / pow(a, -n);
    }
    BaseElem result = a.is_rational() ? BaseElem(mpq_class(1)) : BaseElem(RatFunc(FpPoly::constant(a.as_ratfunc().prime(), 1)));
    BaseElem base = a;
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

namespace {
long padic_order(mpz_class n, std::uint64_t p) {
    long k = 0;
    mpz_class pp(static_cast<unsigned long>(p));
    while (n % pp == 0) {
        n /= pp;
        ++k;
    }
    return k;
}
}  // namespace

Value base_valuation(const BaseField& k, const BaseElem& a) {
    if (!a.belongs_to(k)) throw Error("element " + a.str() + " does not belong to " + k.str());
    if (a.is_zero()) return Value::infinity();
    if (a.is_rational()) {
        const auto& q = a.as_rational();
        return Value(padic_order(abs(q.get_num()), k.p) - padic_order(q.get_den(), k.p));
    }
    const auto& f = a.as_ratfunc();
    return Value(static_cast<long>(f.num().low_order() - f.den().low_order()));
}

std::uint64_t residue(const BaseField& k, const BaseElem& a) {
    Value v = base_valuation(k, a);
    if (v < Value(0)) throw Error("residue of an element of negative value");
    if (v > Value(0)) return 0;
    if (a.is_rational()) {
        mpz_class pp(static_cast<unsigned long>(k.p));
        mpz_class n = a.as_rational().get_num() % pp;
        if (n < 0) n += pp;
        mpz_class d = a.as_rational().get_den() % pp;
        return n.get_ui() * mod_inverse(d.get_ui(), k.p) % k.p;
    }
    const auto& f = a.as_ratfunc();
    return f.num().at(0) * mod_inverse(f.den().at(0), k.p) % k.p;
}

BaseElem parse_base_elem(const BaseField& k, const std::string& text) {
    Polynomial f = parse_polynomial(k, text);
    if (f.degree() > 0) throw Error("expected a base-field element, got a polynomial in x: '" + text + "'");
    return f.is_zero() ? BaseElem::zero(k) : f.coeff(0);
}

}  // namespace vapprox

#include "vapprox/ffield.hpp"

#include <algorithm>
#include <sstream>

#include "vapprox/base.hpp"

namespace vapprox {

namespace {

std::vector<std::uint64_t> trim_copy(std::vector<std::uint64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// Next monic polynomial of degree k in lexicographic order of (c_{k-1}, ..., c_0)
// counted as a base-p number with c_0 least significant.
bool next_monic(std::vector<std::uint64_t>& v, std::uint64_t p) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (++v[i] < p) return true;
        v[i] = 0;
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------- FiniteField

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), mod_(std::move(modulus)) {}

FieldPtr FiniteField::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
    return FieldPtr(new FiniteField(p, {0, 1}));
}

FieldPtr FiniteField::with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) c %= p;
    modulus = trim_copy(std::move(modulus));
    if (modulus.size() < 2 || modulus.back() != 1) throw Error("field modulus must be monic of degree >= 1");
    if (modulus.size() == 2) return FieldPtr(new FiniteField(p, std::move(modulus)));
    auto fp = prime_field(p);
    std::vector<FFElem> cs;
    for (auto c : modulus) cs.push_back(fp->from_int(static_cast<std::int64_t>(c)));
    if (!ff_is_irreducible(FFPoly(fp, cs))) throw Error("field modulus is reducible over F_" + std::to_string(p));
    return FieldPtr(new FiniteField(p, std::move(modulus)));
}

FieldPtr FiniteField::make(std::uint64_t p, unsigned k) {
    if (k == 0) throw Error("extension degree must be positive");
    if (k == 1) return prime_field(p);
    auto fp = prime_field(p);
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = 1;
    do {
        if (v[0] == 0) continue;
        std::vector<FFElem> cs;
        for (auto c : v) cs.push_back(fp->from_int(static_cast<std::int64_t>(c)));
        if (ff_is_irreducible(FFPoly(fp, cs))) return FieldPtr(new FiniteField(p, v));
    } while (next_monic(v, p));
    throw InvariantError("no irreducible polynomial found");
}

mpz_class FiniteField::order() const {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p_, k_);
    return q;
}

FFElem FiniteField::from_int(std::int64_t n) const {
    auto m = static_cast<std::int64_t>(p_);
    FFElem e = zero();
    e.c[0] = static_cast<std::uint64_t>(((n % m) + m) % m);
    return e;
}

FFElem FiniteField::generator() const {
    if (k_ == 1) return from_int(static_cast<std::int64_t>((p_ - mod_[0]) % p_));
    FFElem e = zero();
    e.c[1] = 1;
    return e;
}

FFElem FiniteField::from_coeffs(std::vector<std::uint64_t> c) const {
    for (auto& a : c) a %= p_;
    // reduce modulo the monic modulus
    for (std::size_t top = c.size(); top-- > k_;) {
        std::uint64_t coef = c[top];
        if (!coef) continue;
        for (unsigned j = 0; j <= k_; ++j) {
            std::size_t idx = top - k_ + j;
            c[idx] = (c[idx] + p_ - coef * mod_[j] % p_) % p_;
        }
    }
    c.resize(k_, 0);
    return FFElem{std::move(c)};
}

bool FiniteField::is_zero(const FFElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](std::uint64_t v) { return v == 0; });
}

bool FiniteField::in_prime_field(const FFElem& a) const {
    return std::all_of(a.c.begin() + 1, a.c.end(), [](std::uint64_t v) { return v == 0; });
}

FFElem FiniteField::add(const FFElem& a, const FFElem& b) const {
    FFElem r = zero();
    for (unsigned i = 0; i < k_; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
    return r;
}

FFElem FiniteField::neg(const FFElem& a) const {
    FFElem r = zero();
    for (unsigned i = 0; i < k_; ++i) r.c[i] = (p_ - a.c[i]) % p_;
    return r;
}

FFElem FiniteField::sub(const FFElem& a, const FFElem& b) const { return add(a, neg(b)); }

FFElem FiniteField::scale(const FFElem& a, std::uint64_t s) const {
    FFElem r = zero();
    for (unsigned i = 0; i < k_; ++i) r.c[i] = a.c[i] * (s % p_) % p_;
    return r;
}

FFElem FiniteField::mul(const FFElem& a, const FFElem& b) const {
    if (k_ == 1) return FFElem{{a.c[0] * b.c[0] % p_}};
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (!a.c[i]) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p_;
    }
    return from_coeffs(std::move(prod));
}

FFElem FiniteField::pow(const FFElem& a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), mpz_class(-e));
    FFElem result = one(), base = a;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

FFElem FiniteField::inv(const FFElem& a) const {
    if (is_zero(a)) throw Error("inverse of zero in " + describe());
    return pow(a, mpz_class(order() - 2));
}

FFElem FiniteField::frobenius(const FFElem& a) const {
    return pow(a, mpz_class(static_cast<unsigned long>(p_)));
}

FFElem FiniteField::pth_root(const FFElem& a) const {
    FFElem r = a;
    for (unsigned i = 1; i < k_; ++i) r = frobenius(r);
    return r;
}

std::uint64_t FiniteField::absolute_trace(const FFElem& a) const {
    FFElem acc = zero(), cur = a;
    for (unsigned i = 0; i < k_; ++i) {
        acc = add(acc, cur);
        cur = frobenius(cur);
    }
    if (!in_prime_field(acc)) throw InvariantError("trace left the prime field");
    return acc.c[0];
}

std::vector<FFElem> FiniteField::elements() const {
    if (order() > 1 << 16) throw Error("field too large to enumerate");
    std::vector<FFElem> out;
    FFElem e = zero();
    for (;;) {
        out.push_back(e);
        unsigned i = 0;
        while (i < k_ && ++e.c[i] == p_) e.c[i++] = 0;
        if (i == k_) break;
    }
    return out;
}

std::string FiniteField::str(const FFElem& a) const {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = k_; i-- > 0;) {
        if (!a.c[i]) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << a.c[i];
            continue;
        }
        if (a.c[i] != 1) os << a.c[i] << '*';
        os << 'g';
        if (i > 1) os << '^' << i;
    }
    return first ? "0" : os.str();
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << '^' << k_ << ", modulus=" << FpPoly(p_, mod_).str("g") << ')';
    return os.str();
}

// ---------------------------------------------------------------- FFPoly

FFPoly::FFPoly(FieldPtr f, std::vector<FFElem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void FFPoly::trim() {
    while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
}

FFPoly FFPoly::constant(FieldPtr f, const FFElem& c) { return FFPoly(f, {c}); }

FFPoly FFPoly::x(FieldPtr f) {
    auto z = f->zero(), o = f->one();
    return FFPoly(f, {z, o});
}

FFPoly FFPoly::linear(FieldPtr f, const FFElem& root) {
    auto o = f->one();
    return FFPoly(f, {f->neg(root), o});
}

const FFElem& FFPoly::lead() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

FFPoly FFPoly::operator+(const FFPoly& o) const {
    std::vector<FFElem> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add(coeff(i), o.coeff(i));
    return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::operator-(const FFPoly& o) const {
    std::vector<FFElem> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->sub(coeff(i), o.coeff(i));
    return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::operator*(const FFPoly& o) const {
    if (is_zero() || o.is_zero()) return FFPoly(field_);
    std::vector<FFElem> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (field_->is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
    }
    return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::operator*(const FFElem& s) const {
    std::vector<FFElem> r;
    for (const auto& c : c_) r.push_back(field_->mul(c, s));
    return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::monic() const {
    if (is_zero()) return *this;
    return *this * field_->inv(lead());
}

FFPoly FFPoly::derivative() const {
    std::vector<FFElem> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(field_->scale(c_[i], i));
    return FFPoly(field_, std::move(r));
}

FFElem FFPoly::eval(const FFElem& a) const {
    FFElem acc = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, a), c_[i]);
    return acc;
}

std::string FFPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (field_->is_zero(c_[i])) continue;
        if (!first) os << '+';
        first = false;
        std::string coef = field_->str(c_[i]);
        if (i == 0) {
            os << coef;
            continue;
        }
        if (coef != "1") {
            if (coef.find('+') != std::string::npos) os << '(' << coef << ")*";
            else os << coef << '*';
        }
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

void divmod(const FFPoly& f, const FFPoly& d, FFPoly& q, FFPoly& r) {
    if (d.is_zero()) throw Error("polynomial division by zero");
    const auto& F = *f.field();
    std::vector<FFElem> rem = f.coeffs();
    const auto& dc = d.coeffs();
    std::vector<FFElem> quo(rem.size() >= dc.size() ? rem.size() - dc.size() + 1 : 0, F.zero());
    const FFElem inv = F.inv(d.lead());
    for (std::size_t s = quo.size(); s-- > 0;) {
        FFElem coef = F.mul(rem[s + dc.size() - 1], inv);
        if (F.is_zero(coef)) continue;
        quo[s] = coef;
        for (std::size_t j = 0; j < dc.size(); ++j) rem[s + j] = F.sub(rem[s + j], F.mul(coef, dc[j]));
    }
    q = FFPoly(f.field(), std::move(quo));
    r = FFPoly(f.field(), std::move(rem));
}

FFPoly operator%(const FFPoly& f, const FFPoly& d) {
    FFPoly q(f.field()), r(f.field());
    divmod(f, d, q, r);
    return r;
}

FFPoly operator/(const FFPoly& f, const FFPoly& d) {
    FFPoly q(f.field()), r(f.field());
    divmod(f, d, q, r);
    return q;
}

FFPoly gcd(FFPoly a, FFPoly b) {
    while (!b.is_zero()) {
        FFPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FFPoly powmod(const FFPoly& base, const mpz_class& e, const FFPoly& mod) {
    FFPoly result = FFPoly::constant(base.field(), base.field()->one()) % mod;
    FFPoly b = base % mod;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
        b = (b * b) % mod;
    }
    return result;
}

bool canonical_less(const FFPoly& a, const FFPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

// ---------------------------------------------------------------- factorization

namespace {

using Factors = std::vector<FFactor>;

// Polynomial whose p-th power is f (f' = 0 required).
FFPoly pth_root_poly(const FFPoly& f) {
    const auto& F = *f.field();
    const std::uint64_t p = F.characteristic();
    std::vector<FFElem> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(F.pth_root(f.coeffs()[i]));
    return FFPoly(f.field(), std::move(r));
}

void squarefree(const FFPoly& f, unsigned mult, Factors& out) {
    FFPoly one = FFPoly::constant(f.field(), f.field()->one());
    FFPoly c = gcd(f, f.derivative());
    FFPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        FFPoly y = gcd(w, c);
        FFPoly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree(pth_root_poly(c).monic(), mult * static_cast<unsigned>(f.field()->characteristic()), out);
}

void equal_degree(const FFPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FFPoly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    const auto& field = f.field();
    const auto& F = *field;
    if (d == 1 && F.order() <= 64) {
        for (const auto& a : F.elements())
            if (F.is_zero(f.eval(a))) out.push_back(FFPoly::linear(field, a));
        return;
    }
    const std::uint64_t p = F.characteristic();
    std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
    for (;;) {
        std::vector<FFElem> a;
        for (int i = 0; i < f.degree(); ++i) {
            FFElem e = F.zero();
            for (auto& c : e.c) c = coin(rng);
            a.push_back(e);
        }
        FFPoly A(field, std::move(a));
        if (A.degree() < 1) continue;
        FFPoly b(field);
        if (p == 2) {
            FFPoly term = A;
            b = A;
            const unsigned m = F.degree() * d;
            for (unsigned j = 1; j < m; ++j) {
                term = (term * term) % f;
                b = b + term;
            }
        } else {
            mpz_class qd;
            mpz_pow_ui(qd.get_mpz_t(), F.order().get_mpz_t(), d);
            b = powmod(A, mpz_class((qd - 1) / 2), f) - FFPoly::constant(field, F.one());
        }
        FFPoly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

void distinct_degree(const FFPoly& f, unsigned mult, std::mt19937_64& rng, Factors& out) {
    const auto& field = f.field();
    const mpz_class q = field->order();
    FFPoly x = FFPoly::x(field);
    FFPoly rest = f;
    FFPoly h = x % rest;
    for (unsigned i = 1; 2 * static_cast<int>(i) <= rest.degree(); ++i) {
        h = powmod(h, q, rest);
        FFPoly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            std::vector<FFPoly> parts;
            equal_degree(g, i, rng, parts);
            for (auto& part : parts) out.push_back({part, mult});
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.push_back({rest.monic(), mult});
}

}  // namespace

std::vector<FFactor> ff_factor(const FFPoly& f, std::mt19937_64& rng) {
    if (f.is_zero()) throw Error("factorization of the zero polynomial");
    Factors sqf, out;
    if (f.degree() > 0) squarefree(f.monic(), 1, sqf);
    for (const auto& [g, m] : sqf) distinct_degree(g, m, rng, out);
    // merge equal factors that arose from different squarefree layers
    std::sort(out.begin(), out.end(), [](const FFactor& a, const FFactor& b) { return canonical_less(a.factor, b.factor); });
    Factors merged;
    for (auto& fac : out) {
        if (!merged.empty() && merged.back().factor == fac.factor) merged.back().multiplicity += fac.multiplicity;
        else merged.push_back(fac);
    }
    return merged;
}

std::vector<FFactor> ff_factor(const FFPoly& f) {
    std::mt19937_64 rng(0x5eed);
    return ff_factor(f, rng);
}

std::vector<FFElem> ff_roots(const FFPoly& f) {
    if (f.is_zero()) throw Error("roots of the zero polynomial");
    std::vector<FFElem> roots;
    const auto& F = *f.field();
    for (const auto& [g, m] : ff_factor(f))
        if (g.degree() == 1)
            for (unsigned i = 0; i < m; ++i) roots.push_back(F.neg(g.coeffs()[0]));
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool ff_is_irreducible(const FFPoly& f) {
    if (f.degree() < 1) return false;
    auto fs = ff_factor(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace vapprox

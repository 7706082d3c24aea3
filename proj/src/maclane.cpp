#include "vapprox/maclane.hpp"

#include <algorithm>
#include <sstream>

namespace vapprox {

namespace {

// v + j * lambda without the 0 * infinity trap.
Value add_multiple(const Value& v, std::size_t j, const Value& lambda) {
    if (j == 0) return v;
    return v + lambda * mpq_class(static_cast<unsigned long>(j));
}

void add_scaled(std::vector<long>& acc, const std::vector<long>& m, long k) {
    for (std::size_t i = 0; i < m.size(); ++i) acc[i] += k * m[i];
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

// ---------------------------------------------------------------- construction

MacLaneChain MacLaneChain::gauss(const BaseField& k) {
    MacLaneChain c(k);
    c.append(Polynomial::x(k), Value(0));
    return c;
}

MacLaneChain MacLaneChain::from_stages(const BaseField& k, const std::vector<Stage>& stages) {
    if (stages.empty()) throw Error("a chain needs at least one stage");
    MacLaneChain c(k);
    for (const auto& st : stages) {
        if (!(st.key.field() == k)) throw Error("stage key " + st.key.str() + " is over a different base field");
        if (!c.stages_.empty()) {
            if (st.key.degree() < c.last_key().degree())
                throw Error("stage key degrees must not decrease (" + st.key.str() + ")");
            if (st.key == c.last_key()) throw Error("repeated stage key " + st.key.str());
        }
        c.append(st.key, st.lambda);
    }
    return c;
}

MacLaneChain MacLaneChain::parse(const BaseField& k, const std::string& text) {
    std::vector<Stage> stages;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        auto colon = item.rfind(':');
        if (colon == std::string::npos) throw Error("chain stage '" + item + "' must look like phi:lambda");
        stages.push_back({parse_polynomial(k, item.substr(0, colon)), Value::parse(item.substr(colon + 1))});
    }
    return from_stages(k, stages);
}

MacLaneChain MacLaneChain::prefix(std::size_t n) const {
    if (n == 0 || n > stages_.size()) throw Error("invalid chain prefix length");
    std::vector<Stage> st(stages_.begin(), stages_.begin() + static_cast<long>(n));
    return from_stages(base_, st);
}

void MacLaneChain::append(const Polynomial& key, const Value& lambda) {
    if (stages_.empty()) {
        if (key.degree() != 1 || !key.is_monic()) throw Error("the first stage key must be monic of degree 1");
        stages_.push_back({key, lambda});
        field_ = FiniteField::prime_field(base_.p);
        fdeg_ = {1};
        gen_ = {field_->one()};
        if (lambda.is_finite()) {
            e_.push_back(lambda.denominator().get_si());
            E_.push_back(e_.back());
        }
        return;
    }
    if (is_support()) throw Error("cannot extend a chain whose last value is infinite");
    if (!is_key_polynomial(key)) throw Error(key.str() + " is not a key polynomial for " + str());
    Value current = valuate(key);
    if (!(lambda > current))
        throw Error("augmentation value " + lambda.str() + " must exceed v(" + key.str() + ") = " + current.str());

    if (key.degree() == last_key().degree()) {
        // [[nu_{t-1}; phi_t = l]; Q = a] equals [nu_{t-1}; Q = a] for equal degrees
        stages_.back() = {key, lambda};
        e_.resize(stages_.size() - 1);
        E_.resize(stages_.size());
    } else {
        const unsigned K = field_->degree();
        FFPoly psi = residual(key).poly.monic();
        const unsigned f = static_cast<unsigned>(psi.degree());
        if (f == 1) {
            z_.push_back(field_->neg(psi.coeff(0)));
            gen_.push_back(gen_.back());
            fdeg_.push_back(K);
        } else {
            FieldPtr big = FiniteField::make(base_.p, K * f);
            // embed the current top field through a root of its modulus
            std::vector<FFElem> mod;
            for (auto c : field_->modulus()) mod.push_back(big->from_int(static_cast<std::int64_t>(c)));
            FFElem r = K == 1 ? big->zero() : ff_roots(FFPoly(big, mod)).front();
            auto embed = [&](const FFElem& a) {
                FFElem acc = big->zero(), pw = big->one();
                for (unsigned l = 0; l < K; ++l) {
                    acc = big->add(acc, big->scale(pw, a.c[l]));
                    pw = big->mul(pw, r);
                }
                return acc;
            };
            for (auto& g : gen_) g = embed(g);
            for (auto& z : z_) z = embed(z);
            std::vector<FFElem> psi_big;
            for (const auto& c : psi.coeffs()) psi_big.push_back(embed(c));
            auto roots = ff_roots(FFPoly(big, psi_big));
            if (roots.empty()) throw InvariantError("residual polynomial has no root in its splitting field");
            z_.push_back(roots.front());
            gen_.push_back(big->generator());
            fdeg_.push_back(K * f);
            field_ = big;
        }
        stages_.push_back({key, lambda});
    }
    if (lambda.is_finite()) {
        mpq_class scaled = lambda.rational() * E_.back();
        e_.push_back(mpz_class(scaled.get_den()).get_si());
        E_.push_back(E_.back() * e_.back());
    }
}

// ---------------------------------------------------------------- valuation

Value MacLaneChain::value_at(std::size_t level, const Polynomial& f) const {
    if (f.is_zero()) return Value::infinity();
    if (level == 0) {
        if (f.degree() > 0) throw InvariantError("base valuation applied to a non-constant");
        return base_valuation(base_, f.coeff(0));
    }
    const Stage& st = stages_[level - 1];
    if (f.degree() < st.key.degree()) return value_at(level - 1, f);
    QExpansion ex = q_expansion(f, st.key);
    Value best = Value::infinity();
    for (std::size_t j = 0; j < ex.digits.size(); ++j) {
        if (ex.digits[j].is_zero()) continue;
        best = min(best, add_multiple(value_at(level - 1, ex.digits[j]), j, st.lambda));
    }
    return best;
}

Value MacLaneChain::valuate(const Polynomial& f) const {
    if (!(f.field() == base_)) throw Error("polynomial over a different base field");
    return value_at(stages_.size(), f);
}

TruncationData MacLaneChain::truncate(const Polynomial& q, const Polynomial& f) const {
    if (f.is_zero()) throw Error("truncation of the zero polynomial");
    QExpansion ex = q_expansion(f, q);
    const Value vq = valuate(q);
    TruncationData out{Value::infinity(), {}, {}};
    for (std::size_t i = 0; i < ex.digits.size(); ++i) {
        Value v = ex.digits[i].is_zero() ? Value::infinity() : add_multiple(valuate(ex.digits[i]), i, vq);
        out.term_values.push_back(v);
        out.value = min(out.value, v);
    }
    for (std::size_t i = 0; i < out.term_values.size(); ++i)
        if (out.term_values[i] == out.value) out.s_set.insert(i);
    return out;
}

// ---------------------------------------------------------------- residual machinery

MacLaneChain::Exps MacLaneChain::canonical_monomial(std::size_t level, const Value& beta) const {
    if (level == 0) {
        if (!beta.is_integer()) throw InvariantError("value " + beta.str() + " is not in the base value group");
        return {beta.to_long()};
    }
    const Value& lambda = stages_[level - 1].lambda;
    const long e = e_[level - 1];
    for (long n = 0; n < e; ++n) {
        Value rest = beta - lambda * mpq_class(n);
        if (mpq_class(rest.rational() * E_[level - 1]).get_den() == 1) {
            Exps m = canonical_monomial(level - 1, rest);
            m.push_back(n);
            return m;
        }
    }
    throw InvariantError("value " + beta.str() + " is not in the value group of level " + std::to_string(level));
}

FFElem MacLaneChain::normalize(std::size_t level, Exps& m) const {
    FFElem unit = field_->one();
    for (std::size_t j = level; j >= 1; --j) {
        const long e = e_[j - 1];
        if (m[j] < 0) throw InvariantError("negative key exponent in a monomial");
        const long q = m[j] / e;
        if (q == 0) continue;
        m[j] %= e;
        if (j - 1 >= z_.size()) throw InvariantError("missing residual generator");
        unit = field_->mul(unit, field_->pow(z_[j - 1], mpz_class(q)));
        add_scaled(m, canonical_monomial(j - 1, stages_[j - 1].lambda * mpq_class(e)), q);
    }
    return unit;
}

std::pair<Value, FFElem> MacLaneChain::reduce(std::size_t level, const Polynomial& a) const {
    if (a.is_zero()) throw InvariantError("reduction of zero");
    if (level == 0) {
        const BaseElem c = a.coeff(0);
        Value beta = base_valuation(base_, c);
        BaseElem unit = c / pow(BaseElem::uniformizer(base_), beta.to_long());
        return {beta, embed_prime(residue(base_, unit))};
    }
    if (a.degree() < stages_[level - 1].key.degree()) return reduce(level - 1, a);
    ResidualData r = residual_at(level, a);
    FFElem c = r.poly.eval(z_.at(level - 1));
    if (field_->is_zero(c)) throw InvariantError("reduction of a non-unit");
    return {r.value, c};
}

ResidualData MacLaneChain::residual_at(std::size_t level, const Polynomial& f) const {
    const Stage& st = stages_[level - 1];
    if (st.lambda.is_infinite()) throw Error("no residual polynomial for an infinite stage");
    if (f.is_zero()) throw Error("residual polynomial of zero");
    QExpansion ex = q_expansion(f, st.key);
    struct Term {
        std::size_t j;
        Value beta;
        FFElem c;
        Value total;
    };
    std::vector<Term> terms;
    Value gamma = Value::infinity();
    for (std::size_t j = 0; j < ex.digits.size(); ++j) {
        if (ex.digits[j].is_zero()) continue;
        auto [beta, c] = reduce(level - 1, ex.digits[j]);
        Value total = add_multiple(beta, j, st.lambda);
        gamma = min(gamma, total);
        terms.push_back({j, beta, c, total});
    }
    const long e = e_[level - 1];
    const Exps target = canonical_monomial(level, gamma);
    const auto n = static_cast<std::size_t>(target.back());
    const Exps step = canonical_monomial(level - 1, st.lambda * mpq_class(e));

    ResidualData out{gamma, n, 0, 0, FFPoly(field_)};
    std::vector<FFElem> coeffs;
    bool first = true;
    for (const auto& t : terms) {
        if (!(t.total == gamma)) continue;
        if (first) out.s_min = t.j;
        first = false;
        out.s_max = t.j;
        if (t.j < n || (t.j - n) % static_cast<std::size_t>(e) != 0)
            throw InvariantError("minimizing index off the residual lattice");
        const std::size_t k = (t.j - n) / static_cast<std::size_t>(e);
        Exps m = canonical_monomial(level - 1, t.beta);
        add_scaled(m, step, static_cast<long>(k));
        FFElem unit = normalize(level - 1, m);
        if (m != Exps(target.begin(), target.end() - 1)) throw InvariantError("monomial normalization mismatch");
        if (coeffs.size() <= k) coeffs.resize(k + 1, field_->zero());
        coeffs[k] = field_->mul(t.c, unit);
    }
    out.poly = FFPoly(field_, std::move(coeffs));
    return out;
}

ResidualData MacLaneChain::residual(const Polynomial& f) const {
    if (is_support()) throw Error("residual polynomials need a finite last stage");
    return residual_at(stages_.size(), f);
}

std::vector<FFElem> MacLaneChain::decompose(std::size_t level, const FFElem& c) const {
    // c in F_{level+1} as sum_k d_k z_level^k with d_k in F_level; solved over F_p
    const std::uint64_t p = base_.p;
    const unsigned K = field_->degree();
    const unsigned low = fdeg_[level - 1];
    const unsigned f = fdeg_[level] / low;
    const FFElem& z = z_[level - 1];
    const FFElem& g = gen_[level - 1];
    std::vector<FFElem> basis;
    FFElem zk = field_->one();
    for (unsigned k = 0; k < f; ++k) {
        FFElem gl = zk;
        for (unsigned l = 0; l < low; ++l) {
            basis.push_back(gl);
            gl = field_->mul(gl, g);
        }
        zk = field_->mul(zk, z);
    }
    const std::size_t N = basis.size();
    std::vector<std::vector<std::uint64_t>> A(K, std::vector<std::uint64_t>(N + 1, 0));
    for (unsigned r = 0; r < K; ++r) {
        for (std::size_t col = 0; col < N; ++col) A[r][col] = basis[col].c[r];
        A[r][N] = c.c[r];
    }
    std::vector<long> pivot_row(N, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < N && row < K; ++col) {
        std::size_t pr = row;
        while (pr < K && A[pr][col] == 0) ++pr;
        if (pr == K) continue;
        std::swap(A[pr], A[row]);
        const std::uint64_t inv = mod_inverse(A[row][col], p);
        for (auto& v : A[row]) v = v * inv % p;
        for (std::size_t r = 0; r < K; ++r) {
            if (r == row || A[r][col] == 0) continue;
            const std::uint64_t fct = A[r][col];
            for (std::size_t cc = 0; cc <= N; ++cc) A[r][cc] = (A[r][cc] + p * p - fct * A[row][cc] % p) % p;
        }
        pivot_row[col] = static_cast<long>(row++);
    }
    for (std::size_t r = row; r < K; ++r)
        if (A[r][N] != 0) throw InvariantError("element outside the residue subfield");
    std::vector<FFElem> d(f, field_->zero());
    for (unsigned k = 0; k < f; ++k) {
        FFElem gl = field_->one();
        for (unsigned l = 0; l < low; ++l) {
            const std::size_t col = k * low + l;
            if (pivot_row[col] >= 0) d[k] = field_->add(d[k], field_->scale(gl, A[static_cast<std::size_t>(pivot_row[col])][N]));
            gl = field_->mul(gl, g);
        }
    }
    return d;
}

Polynomial MacLaneChain::lift_unit(std::size_t level, const Value& beta, const FFElem& c) const {
    if (field_->is_zero(c)) throw InvariantError("lift of zero");
    if (level == 0) {
        if (!field_->in_prime_field(c)) throw InvariantError("lift of a non-prime-field element at the base");
        BaseElem a = pow(BaseElem::uniformizer(base_), beta.to_long()) * BaseElem::integer(base_, static_cast<long>(c.c[0]));
        return Polynomial::constant(base_, a);
    }
    const Stage& st = stages_[level - 1];
    const long e = e_[level - 1];
    const std::vector<FFElem> d = decompose(level, c);
    const Exps target = canonical_monomial(level, beta);
    const long n = target.back();
    const Exps step = canonical_monomial(level - 1, st.lambda * mpq_class(e));
    Polynomial a(base_);
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (field_->is_zero(d[k])) continue;
        const long j = n + e * static_cast<long>(k);
        const Value beta_j = beta - st.lambda * mpq_class(j);
        Exps m = canonical_monomial(level - 1, beta_j);
        add_scaled(m, step, static_cast<long>(k));
        const FFElem unit = normalize(level - 1, m);
        a += lift_unit(level - 1, beta_j, field_->div(d[k], unit)) * st.key.pow(static_cast<unsigned>(j));
    }
    return a;
}

Polynomial MacLaneChain::lift_key(const FFPoly& psi) const {
    if (is_support()) throw Error("no key polynomials beyond an infinite stage");
    if (psi.degree() < 1 || !field_->is_one(psi.lead())) throw Error("residual factor must be monic of positive degree");
    if (field_->is_zero(psi.coeff(0))) throw Error("the residual factor y corresponds to the last key itself");
    const std::size_t t = stages_.size();
    const Stage& st = stages_.back();
    const long e = e_.back();
    const auto f = static_cast<std::size_t>(psi.degree());
    const Exps step = canonical_monomial(t - 1, st.lambda * mpq_class(e));

    auto unit_at = [&](std::size_t k) {
        Exps m = canonical_monomial(t - 1, st.lambda * mpq_class(e * static_cast<long>(f - k)));
        add_scaled(m, step, static_cast<long>(k));
        return normalize(t - 1, m);
    };
    const FFElem lead_unit = unit_at(f);
    Polynomial q = st.key.pow(static_cast<unsigned>(e * static_cast<long>(f)));
    for (std::size_t k = 0; k < f; ++k) {
        const FFElem& ck = psi.coeffs()[k];
        if (field_->is_zero(ck)) continue;
        const Value beta = st.lambda * mpq_class(e * static_cast<long>(f - k));
        const FFElem target = field_->div(field_->mul(ck, lead_unit), unit_at(k));
        q += lift_unit(t - 1, beta, target) * st.key.pow(static_cast<unsigned>(e * static_cast<long>(k)));
    }
    if (!is_key_polynomial(q) || !(residual(q).poly.monic() == psi))
        throw InvariantError("lifted key " + q.str() + " does not reproduce its residual factor");
    return q;
}

// ---------------------------------------------------------------- graded tests

bool MacLaneChain::is_key_polynomial(const Polynomial& q) const {
    if (is_support()) throw Error("a chain with infinite last value has no key polynomials");
    if (!(q.field() == base_) || !q.is_monic()) return false;
    const Polynomial& phi = last_key();
    if (q.degree() < phi.degree()) return false;
    if (q.degree() == phi.degree()) {
        Polynomial a0 = q - phi;
        return a0.is_zero() || value_at(stages_.size() - 1, a0) >= last_lambda();
    }
    if (q.degree() % phi.degree() != 0) return false;
    const auto r = static_cast<std::size_t>(q.degree() / phi.degree());
    ResidualData res = residual(q);
    if (res.s_min != 0 || res.s_max != r) return false;
    return ff_is_irreducible(res.poly);
}

MacLaneChain MacLaneChain::augment(const Polynomial& q, const Value& alpha) const {
    if (is_support()) throw Error("cannot augment a chain whose last value is infinite");
    if (!is_key_polynomial(q)) throw Error(q.str() + " is not a key polynomial for " + str());
    MacLaneChain out = *this;
    out.append(q, alpha);
    return out;
}

bool MacLaneChain::is_unit_in_graded(const Polynomial& f) const {
    if (f.is_zero()) throw Error("the zero polynomial has no initial form");
    if (valuate(f).is_infinite()) throw Error(f.str() + " lies in the support");
    if (is_support()) throw Error("graded-ring queries need a finite last stage");
    return truncate(last_key(), f).s_set == std::set<std::size_t>{0};
}

bool MacLaneChain::divides_in_graded(const Polynomial& q, const Polynomial& f) const {
    if (!is_key_polynomial(q)) throw Error(q.str() + " is not a key polynomial for " + str());
    if (f.is_zero()) throw Error("the zero polynomial has no initial form");
    if (valuate(f).is_infinite()) throw Error(f.str() + " lies in the support");
    if (f.degree() < 1) return false;
    return truncate(q, f).s_set.count(0) == 0;
}

// ---------------------------------------------------------------- misc

std::string MacLaneChain::str() const {
    std::string out;
    for (const auto& st : stages_) {
        if (!out.empty()) out += "; ";
        out += st.key.str() + ":" + st.lambda.str();
    }
    return out;
}

bool MacLaneChain::operator==(const MacLaneChain& o) const {
    if (!(base_ == o.base_) || stages_.size() != o.stages_.size()) return false;
    for (std::size_t i = 0; i < stages_.size(); ++i)
        if (!(stages_[i].key == o.stages_[i].key) || !(stages_[i].lambda == o.stages_[i].lambda)) return false;
    return true;
}

std::string to_string(Comparison c) {
    switch (c) {
        case Comparison::Less: return "<=";
        case Comparison::Greater: return ">=";
        case Comparison::Equal: return "equal-on-sample";
        case Comparison::Incomparable: return "incomparable-on-sample";
    }
    return "?";
}

Comparison compare(const MacLaneChain& nu, const MacLaneChain& mu, const std::vector<Polynomial>& sample) {
    bool le = true, ge = true;
    for (const auto& f : sample) {
        Value a = nu.valuate(f), b = mu.valuate(f);
        if (a > b) le = false;
        if (a < b) ge = false;
    }
    if (le && ge) return Comparison::Equal;
    if (le) return Comparison::Less;
    if (ge) return Comparison::Greater;
    return Comparison::Incomparable;
}

}  // namespace vapprox

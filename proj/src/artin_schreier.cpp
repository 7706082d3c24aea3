#include "vapprox/artin_schreier.hpp"

#include "vapprox/maclane.hpp"

namespace vapprox {

std::string to_string(ASCase c) {
    switch (c) {
        case ASCase::SplitP: return "SplitP";
        case ASCase::RamifiedP: return "RamifiedP";
        case ASCase::InertP: return "InertP";
        case ASCase::NoMaxWithinBudget: return "NoMaxWithinBudget";
    }
    return "?";
}

namespace {

BaseField as_field(std::uint64_t p, const BaseElem& a) {
    BaseField k = BaseField::rational_functions(p);
    if (!a.belongs_to(k)) throw Error("a must be a rational function over F_" + std::to_string(p));
    return k;
}

}  // namespace

BaseElem as_eval(std::uint64_t p, const BaseElem& a, const BaseElem& b) {
    return pow(b, static_cast<long>(p)) - b - a;
}

BaseElem improve_witness(std::uint64_t p, const BaseElem& a, const BaseElem& b) {
    const BaseField k = as_field(p, a);
    const BaseElem Fb = as_eval(p, a, b);
    const Value v = base_valuation(k, Fb);
    const long pl = static_cast<long>(p);
    if (v.is_infinite() || !(v < Value(0)) || v.to_long() % pl != 0)
        throw Error("improvement needs v(F(b)) < 0 divisible by p, got " + v.str());
    const BaseElem c = pow(BaseElem::uniformizer(k), v.to_long() / pl);
    const std::uint64_t r = residue(k, Fb / pow(c, pl));
    const FieldPtr fp = FiniteField::prime_field(p);
    const FFElem root = fp->pth_root(fp->neg(fp->from_int(static_cast<std::int64_t>(r))));
    const BaseElem next = b + c * BaseElem::integer(k, static_cast<long>(root.c[0]));
    if (!(base_valuation(k, as_eval(p, a, next)) > v)) throw InvariantError("witness improvement did not improve");
    return next;
}

ASReport classify(std::uint64_t p, const BaseElem& a, unsigned budget) {
    const BaseField k = as_field(p, a);
    if (budget == 0) throw Error("budget must be positive");
    const long pl = static_cast<long>(p);
    const FieldPtr fp = FiniteField::prime_field(p);
    ASReport rep{ASCase::NoMaxWithinBudget, BaseElem::zero(k), Value::infinity(), 1, true, 1, 1, pl, {}, {}, {}};
    BaseElem b = BaseElem::zero(k);
    for (unsigned step = 0; step < budget; ++step) {
        const BaseElem Fb = as_eval(p, a, b);
        const Value v = base_valuation(k, Fb);
        if (v.is_infinite()) throw Error("x^p - x - a is reducible: " + b.str() + " is a root");
        rep.trace_log.push_back({b, v});
        rep.witness_b = b;
        rep.witness_value = v;
        if (v > Value(0)) {
            rep.kind = ASCase::SplitP;
            rep.extensions = pl;
            rep.extensions_lower_bound = false;
            rep.e = rep.f = rep.d = 1;
            // F(y + b) = y^p - y + F(b): its residual over [y = 0] is prod (Y - i)
            const Polynomial x = Polynomial::x(k);
            const Polynomial y = x - Polynomial::constant(k, b);
            const Polynomial F = x.pow(static_cast<unsigned>(p)) - x - Polynomial::constant(k, a);
            const MacLaneChain chain = MacLaneChain::from_stages(k, {{y, Value(0)}});
            for (const auto& fac : ff_factor(chain.residual(F).poly.monic())) {
                if (fac.factor.degree() != 1 || fac.multiplicity != 1)
                    throw InvariantError("split residual is not a product of distinct linear factors");
                rep.split_certificate.push_back(fac.factor);
            }
            return rep;
        }
        if (v == Value(0)) {
            // X^p - X + res(F(b)) either has a root in F_p or is irreducible
            std::vector<FFElem> co(p + 1, fp->zero());
            co[0] = fp->from_int(static_cast<std::int64_t>(residue(k, Fb)));
            co[1] = fp->from_int(-1);
            co[p] = fp->one();
            auto roots = ff_roots(FFPoly(fp, co));
            if (roots.empty()) {
                rep.kind = ASCase::InertP;
                rep.extensions = 1;
                rep.extensions_lower_bound = false;
                rep.e = rep.d = 1;
                rep.f = pl;
                rep.max_of_S = Value(0);
                return rep;
            }
            b = b + BaseElem::integer(k, static_cast<long>(roots.front().c[0]));
            continue;
        }
        if (v.to_long() % pl != 0) {
            rep.kind = ASCase::RamifiedP;
            rep.extensions = 1;
            rep.extensions_lower_bound = false;
            rep.e = pl;
            rep.f = rep.d = 1;
            rep.max_of_S = v / mpq_class(pl);
            return rep;
        }
        b = improve_witness(p, a, b);
    }
    return rep;
}

std::optional<std::pair<Value, BaseElem>> max_of_S(std::uint64_t p, const BaseElem& a, unsigned budget) {
    ASReport r = classify(p, a, budget);
    if (!r.max_of_S) return std::nullopt;
    return std::make_pair(*r.max_of_S, r.witness_b);
}

nlohmann::json to_json(const ASReport& r) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& s : r.trace_log) trace.push_back({{"b", s.b.str()}, {"value", s.value.str()}});
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& f : r.split_certificate) cert.push_back(f.str("Y"));
    return {{"case", to_string(r.kind)},
            {"witness_b", r.witness_b.str()},
            {"witness_value", r.witness_value.str()},
            {"extensions", r.extensions},
            {"extensions_lower_bound", r.extensions_lower_bound},
            {"e", r.e},
            {"f", r.f},
            {"d", r.d},
            {"trace", trace},
            {"max_of_S", r.max_of_S ? nlohmann::json(r.max_of_S->str()) : nlohmann::json(nullptr)},
            {"split_certificate", cert}};
}

}  // namespace vapprox

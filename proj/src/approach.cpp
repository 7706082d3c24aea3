#include "vapprox/approach.hpp"

#include <deque>
#include <sstream>

namespace vapprox {

void screen_irreducible(const Polynomial& F) {
    if (F.field().kind != BaseField::Kind::Rationals || F.degree() != 2) return;
    const Polynomial m = F.monic();
    const mpq_class b = m.coeff(1).as_rational(), c = m.coeff(0).as_rational();
    const mpq_class disc = b * b - 4 * c;
    if (sgn(disc) < 0) return;
    mpz_class n = disc.get_num(), d = disc.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t()))
        throw Error(F.str() + " is reducible over Q");
}

Membership membership(const MacLaneChain& nu, const Polynomial& F) {
    if (F.degree() < 1) throw Error("F must be non-constant");
    if (nu.valuate(F).is_infinite()) return {true, true};
    if (nu.is_support()) throw Error("membership needs a chain with finite last value");
    return {!nu.is_unit_in_graded(F), false};
}

bool in_VF(const MacLaneChain& nu, const Polynomial& F) { return membership(nu, F).member; }

Value max_augmentation_value(const NewtonPolygon& polygon) { return -polygon.first_slope(); }

Value max_augmentation_value(const MacLaneChain& nu, const Polynomial& Q, const Polynomial& F) {
    if (!nu.divides_in_graded(Q, F)) throw Error("in(" + Q.str() + ") does not divide in(" + F.str() + ")");
    return max_augmentation_value(newton_polygon(nu, Q, F));
}

MacLaneChain augment_toward_F(const MacLaneChain& nu, const Polynomial& Q, const Polynomial& F, const Value& alpha) {
    const Value a1 = max_augmentation_value(nu, Q, F);
    const Value vq = nu.valuate(Q);
    if (!(vq < alpha) || alpha > a1)
        throw Error("augmentation value " + alpha.str() + " outside (" + vq.str() + ", " + a1.str() + "]");
    MacLaneChain mu = nu.augment(Q, alpha);
    if (!(mu.valuate(F) > nu.valuate(F)) || !in_VF(mu, F))
        throw InvariantError("augmentation toward F left V_F");
    return mu;
}

GradedFactorSummary graded_factorization(const MacLaneChain& nu, const Polynomial& F) {
    if (nu.is_support()) throw Error("graded factorization needs a chain with finite last value");
    if (nu.valuate(F).is_infinite()) throw Error(F.str() + " lies in the support");
    const ResidualData r = nu.residual(F);
    const Value slope = -nu.last_lambda();
    GradedFactorSummary out{{}, false, nu.residue_field()->describe()};
    if (r.s_min > 0)
        out.entries.push_back({slope, r.s_min, r.s_max, FFPoly::x(nu.residue_field()),
                               static_cast<unsigned>(r.s_min), nu.last_key()});
    // strip the power of y; the rest factors into lifts of new keys
    std::vector<FFElem> rest(r.poly.coeffs().begin(), r.poly.coeffs().end());
    std::size_t shift = 0;
    while (shift < rest.size() && nu.residue_field()->is_zero(rest[shift])) ++shift;
    rest.erase(rest.begin(), rest.begin() + static_cast<long>(shift));
    FFPoly rp(nu.residue_field(), rest);
    if (rp.degree() > 0)
        for (const auto& fac : ff_factor(rp))
            out.entries.push_back({slope, r.s_min, r.s_max, fac.factor, fac.multiplicity, nu.lift_key(fac.factor)});
    out.unit_flag = out.entries.empty();
    return out;
}

std::size_t count_extensions_lower_bound(const MacLaneChain& nu, const Polynomial& F) {
    return graded_factorization(nu, F).entries.size();
}

namespace {

BranchReport report(const MacLaneChain& c, const Polynomial& F, bool terminal) {
    return {c, c.ramification_index(), c.inertia_degree(), c.valuate(F), terminal, c.is_support()};
}

}  // namespace

std::vector<BranchReport> enumerate_extensions(const Polynomial& F, const BaseField& k, unsigned budget,
                                               EnumerationTrace* trace) {
    if (!(F.field() == k)) throw Error("F is over a different base field");
    if (F.degree() < 1) throw Error("F must be non-constant");
    if (!F.is_monic()) throw Error("F must be monic");
    if (budget == 0) throw Error("budget must be positive");
    screen_irreducible(F);

    EnumerationTrace local;
    EnumerationTrace& tr = trace ? *trace : local;
    auto node = [&](const MacLaneChain& c, std::optional<std::size_t> parent) {
        tr.nodes.push_back(c.str());
        if (parent) tr.edges.push_back({*parent, tr.nodes.size() - 1});
        return tr.nodes.size() - 1;
    };

    const Polynomial x = Polynomial::x(k);
    std::vector<BranchReport> out;
    if (F == x) {
        auto c = MacLaneChain::from_stages(k, {{x, Value::infinity()}});
        node(c, std::nullopt);
        out.push_back(report(c, F, true));
        return out;
    }
    if (F.coeff(0).is_zero()) throw Error(F.str() + " is reducible (divisible by x)");

    // start below every extension: x at the smallest root value
    std::vector<Point> pts;
    for (int i = 0; i <= F.degree(); ++i)
        if (!F.coeff(static_cast<std::size_t>(i)).is_zero())
            pts.push_back({i, base_valuation(k, F.coeff(static_cast<std::size_t>(i)))});
    const Value start = -NewtonPolygon::from_points(pts).sides().back().slope;

    struct Work {
        MacLaneChain chain;
        unsigned rounds;
        std::size_t id;
    };
    std::deque<Work> queue;
    auto root = MacLaneChain::from_stages(k, {{x, start}});
    queue.push_back({root, 0, node(root, std::nullopt)});
    while (!queue.empty()) {
        Work w = queue.front();
        queue.pop_front();
        if (w.rounds >= budget) {
            out.push_back(report(w.chain, F, false));
            continue;
        }
        const GradedFactorSummary gf = graded_factorization(w.chain, F);
        if (gf.unit_flag) throw InvariantError("enumeration left V_F at " + w.chain.str());
        for (const auto& entry : gf.entries) {
            const Polynomial& Q = entry.key;
            if (!(Q == F) && (F % Q).is_zero()) throw Error(F.str() + " is reducible (divisible by " + Q.str() + ")");
            if (entry.multiplicity == 1) {
                MacLaneChain c = Q.degree() == F.degree()
                                     ? w.chain.augment(F, Value::infinity())
                                     : w.chain.augment(Q, max_augmentation_value(w.chain, Q, F));
                node(c, w.id);
                out.push_back(report(c, F, true));
                continue;
            }
            // refine along the side ending where the support line of slope -v(Q) touches
            const Value bound = -w.chain.valuate(Q);
            const NewtonPolygon np = newton_polygon(w.chain, Q, F);
            std::optional<Value> alpha;
            for (const auto& s : np.sides())
                if (s.slope < bound) alpha = -s.slope;
            if (!alpha) throw InvariantError("no side beyond the key value");
            MacLaneChain c = w.chain.augment(Q, *alpha);
            queue.push_back({c, w.rounds + 1, node(c, w.id)});
        }
    }
    return out;
}

nlohmann::json to_json(const GradedFactorSummary& s) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : s.entries)
        entries.push_back({{"slope", e.slope.str()},
                           {"segment", {e.s_min, e.s_max}},
                           {"factor", e.factor.str()},
                           {"multiplicity", e.multiplicity},
                           {"key", e.key.str()}});
    return {{"entries", entries},
            {"count", s.entries.size()},
            {"unit", s.unit_flag},
            {"residue_field", s.residue_field},
            {"normalization", "coefficients scaled to the canonical monomial of the minimal value"}};
}

nlohmann::json to_json(const BranchReport& b) {
    return {{"chain", b.chain.str()}, {"e", b.e},           {"f", b.f},
            {"vF", b.value_of_F.str()}, {"terminal", b.terminal}, {"support", b.support}};
}

std::string to_dot(const EnumerationTrace& t) {
    std::ostringstream os;
    os << "digraph augmentations {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        os << "  n" << i << " [label=" << nlohmann::json(t.nodes[i]).dump() << "];\n";
    for (const auto& [a, b] : t.edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace vapprox

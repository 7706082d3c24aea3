#include "vapprox/cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "vapprox/approach.hpp"
#include "vapprox/artin_schreier.hpp"
#include "vapprox/maclane.hpp"
#include "vapprox/newton.hpp"

namespace vapprox::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string base = "Q";
    std::uint64_t p = 2;
    std::string chain = "x:0";
    std::string poly, key, alpha, a, svg, dot;
    unsigned budget = 16;
    bool json_flag = false;
};

BaseField field_of(const Options& o) {
    if (o.base == "Q") return BaseField::rationals(o.p);
    if (o.base == "Fpt") return BaseField::rational_functions(o.p);
    throw Error("unknown base '" + o.base + "' (expected Q or Fpt)");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

json truncation_json(const Polynomial& q, const Polynomial& f, const MacLaneChain& nu) {
    QExpansion ex = q_expansion(f, q);
    TruncationData t = nu.truncate(q, f);
    json digits = json::array(), values = json::array();
    for (const auto& d : ex.digits) digits.push_back(d.str());
    for (const auto& v : t.term_values) values.push_back(v.str());
    return {{"key", q.str()},
            {"digits", digits},
            {"term_values", values},
            {"value", t.value.str()},
            {"s_set", std::vector<std::size_t>(t.s_set.begin(), t.s_set.end())}};
}

json dispatch(const std::string& cmd, const Options& o) {
    if (cmd == "artin-schreier") {
        BaseField k = BaseField::rational_functions(o.p);
        return to_json(classify(o.p, parse_base_elem(k, o.a), o.budget));
    }
    const BaseField k = field_of(o);
    auto poly = [&] { return parse_polynomial(k, o.poly); };
    auto key = [&] { return parse_polynomial(k, o.key); };
    if (cmd == "extensions") {
        EnumerationTrace trace;
        auto branches = enumerate_extensions(poly(), k, o.budget, &trace);
        if (!o.dot.empty()) write_file(o.dot, to_dot(trace));
        json arr = json::array();
        long sum = 0;
        for (const auto& b : branches) {
            arr.push_back(to_json(b));
            sum += b.e * static_cast<long>(b.f);
        }
        return {{"branches", arr}, {"count", branches.size()}, {"sum_ef", sum}};
    }
    const MacLaneChain nu = MacLaneChain::parse(k, o.chain);
    if (cmd == "valuate") return {{"value", nu.valuate(poly()).str()}};
    if (cmd == "expand") return truncation_json(key(), poly(), nu);
    if (cmd == "polygon") {
        NewtonPolygon np = newton_polygon(nu, key(), poly());
        if (!o.svg.empty()) write_file(o.svg, np.to_svg({-nu.valuate(key())}));
        return np.to_json();
    }
    if (cmd == "augment") {
        MacLaneChain mu = nu.augment(key(), Value::parse(o.alpha));
        return {{"chain", mu.str()}, {"e", mu.ramification_index()}, {"f", mu.inertia_degree()}};
    }
    if (cmd == "approach") {
        const Polynomial F = poly();
        Membership m = membership(nu, F);
        json out = {{"in_VF", m.member}, {"maximal", m.maximal}, {"value", nu.valuate(F).str()}};
        if (!o.key.empty()) {
            const Polynomial Q = key();
            out["divides"] = nu.divides_in_graded(Q, F);
            if (out["divides"]) out["alpha1"] = max_augmentation_value(nu, Q, F).str();
            if (!o.alpha.empty()) {
                MacLaneChain mu = augment_toward_F(nu, Q, F, Value::parse(o.alpha));
                out["augmented"] = {{"chain", mu.str()}, {"value", mu.valuate(F).str()}, {"in_VF", in_VF(mu, F)}};
            }
        }
        return out;
    }
    if (cmd == "max-aug") return {{"alpha1", max_augmentation_value(nu, key(), poly()).str()}};
    if (cmd == "factor") return to_json(graded_factorization(nu, poly()));
    throw Error("unknown command " + cmd);
}

json error_json(const std::string& kind, const std::string& msg) { return {{"error", {{"kind", kind}, {"message", msg}}}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Inductive valuations, Newton polygons and extension enumeration over Q and F_p(t)", "vapprox"};
    app.require_subcommand(1);
    Options o;

    auto add_base = [&](CLI::App* s) {
        s->add_option("--base", o.base, "Q or Fpt")->check(CLI::IsMember({"Q", "Fpt"}));
        s->add_option("--p", o.p, "residue characteristic");
    };
    auto add_chain = [&](CLI::App* s) { s->add_option("--chain", o.chain, "stages phi:lambda; ... (default x:0)"); };
    auto add_poly = [&](CLI::App* s, bool required) {
        auto opt = s->add_option("--poly", o.poly, "polynomial in x");
        if (required) opt->required();
    };
    auto add_key = [&](CLI::App* s, bool required) {
        auto opt = s->add_option("--key", o.key, "key polynomial");
        if (required) opt->required();
    };
    auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json_flag, "emit JSON (the default)"); };

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {{"valuate", "value of a polynomial"},
                          {"expand", "key expansion and truncation data"},
                          {"polygon", "Newton polygon with respect to a key"},
                          {"augment", "augment a chain"},
                          {"approach", "membership in V_F and augmentation toward F"},
                          {"max-aug", "maximal augmentation value"},
                          {"factor", "graded factorization of in(F)"},
                          {"extensions", "enumerate extension branches"},
                          {"artin-schreier", "classify an Artin-Schreier extension of F_p(t)"}};
    for (const auto& sp : commands) {
        CLI::App* s = app.add_subcommand(sp.name, sp.help);
        const std::string n = sp.name;
        add_json(s);
        if (n == "artin-schreier") {
            s->add_option("--p", o.p, "characteristic")->required();
            s->add_option("--a", o.a, "rational function in t")->required();
            s->add_option("--budget", o.budget, "improvement steps (default 16)");
            continue;
        }
        add_base(s);
        if (n == "extensions") {
            add_poly(s, true);
            s->add_option("--budget", o.budget, "refinement rounds per branch (default 16)");
            s->add_option("--dot", o.dot, "write the augmentation tree as DOT");
            continue;
        }
        add_chain(s);
        add_poly(s, n != "augment");
        if (n == "expand" || n == "polygon" || n == "augment" || n == "max-aug") add_key(s, true);
        if (n == "approach") add_key(s, false);
        if (n == "augment") s->add_option("--alpha", o.alpha, "a/b or inf")->required();
        if (n == "approach") s->add_option("--alpha", o.alpha, "augmentation value toward F");
        if (n == "polygon") s->add_option("--svg", o.svg, "write an SVG plot");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << error_json("usage", e.what()).dump(2) << "\n";
        return 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        out << dispatch(cmd, o).dump(2) << "\n";
        return 0;
    } catch (const InvariantError& e) {
        out << error_json("invariant", e.what()).dump(2) << "\n";
        return 3;
    } catch (const Error& e) {
        out << error_json("input", e.what()).dump(2) << "\n";
        return 2;
    }
}

}  // namespace vapprox::cli

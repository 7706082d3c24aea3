#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vapprox/base.hpp"
#include "vapprox/ffield.hpp"

namespace vapprox {

enum class ASCase { SplitP, RamifiedP, InertP, NoMaxWithinBudget };
std::string to_string(ASCase c);

struct ASStep {
    BaseElem b;
    Value value;  // v_t(F(b))
};

/// Extensions of v_t on F_p(t) to F_p(t)[x]/(x^p - x - a).
struct ASReport {
    ASCase kind;
    BaseElem witness_b;
    Value witness_value;
    long extensions;
    bool extensions_lower_bound;  // only for NoMaxWithinBudget
    long e, f, d;
    std::vector<ASStep> trace_log;  // values strictly increase
    std::optional<Value> max_of_S;  // witness_value / p when the loop stopped at a non-positive value
    std::vector<FFPoly> split_certificate;  // SplitP: the linear factors of the residual in y = x - b
};

/// F(b) = b^p - b - a.
BaseElem as_eval(std::uint64_t p, const BaseElem& a, const BaseElem& b);

/// b + c c' with c = t^(v/p) and c' the lifted p-th root of -(F(b)/c^p) mod t.
/// Requires v = v_t(F(b)) < 0 with p | v; the result has a strictly larger value.
BaseElem improve_witness(std::uint64_t p, const BaseElem& a, const BaseElem& b);

ASReport classify(std::uint64_t p, const BaseElem& a, unsigned budget);

/// (max S, witness) where S = { v_t(F(b))/p }, or nothing when the extension splits
/// or the budget runs out.
std::optional<std::pair<Value, BaseElem>> max_of_S(std::uint64_t p, const BaseElem& a, unsigned budget);

nlohmann::json to_json(const ASReport& r);

}  // namespace vapprox

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vapprox/maclane.hpp"
#include "vapprox/newton.hpp"

namespace vapprox {

/// One homogeneous prime factor of in(F): either the last key itself
/// (factor y, key = phi_t) or the lift of an irreducible residual factor.
struct GradedEntry {
    Value slope;                // -lambda_t, the slope of the principal segment
    std::size_t s_min, s_max;   // principal segment of the phi_t-expansion of F
    FFPoly factor;              // monic irreducible over the residue field
    unsigned multiplicity;
    Polynomial key;             // key polynomial realizing the factor
};

struct GradedFactorSummary {
    std::vector<GradedEntry> entries;
    bool unit_flag;             // in(F) is a unit, iff entries is empty
    std::string residue_field;  // description of the field the factors live in
};

struct Membership {
    bool member;
    bool maximal;  // F lies in the support of the chain
};

struct BranchReport {
    MacLaneChain chain;
    long e;
    unsigned f;
    Value value_of_F;
    bool terminal;   // false iff the round budget ran out on this branch
    bool support;    // the chain ends with (F, inf)
};

struct EnumerationTrace {
    std::vector<std::string> nodes;                             // chain texts
    std::vector<std::pair<std::size_t, std::size_t>> edges;     // parent -> child
};

/// Rejects F that are visibly reducible: a rational root in degree 1..2 over Q.
void screen_irreducible(const Polynomial& F);

Membership membership(const MacLaneChain& nu, const Polynomial& F);
/// in(F) is not a unit; a support chain containing F counts as a member.
bool in_VF(const MacLaneChain& nu, const Polynomial& F);

/// alpha_1 = -(first slope of the polygon of F with respect to Q).
/// Requires Q key for nu and in(Q) | in(F).
Value max_augmentation_value(const MacLaneChain& nu, const Polynomial& Q, const Polynomial& F);
/// -(first slope) of an explicit polygon.
Value max_augmentation_value(const NewtonPolygon& polygon);

/// [nu; Q = alpha] for nu(Q) < alpha <= alpha_1; checks that the result stays in V_F
/// and strictly increases the value of F.
MacLaneChain augment_toward_F(const MacLaneChain& nu, const Polynomial& Q, const Polynomial& F, const Value& alpha);

GradedFactorSummary graded_factorization(const MacLaneChain& nu, const Polynomial& F);
std::size_t count_extensions_lower_bound(const MacLaneChain& nu, const Polynomial& F);

/// Branches of the augmentation tree of F over the base field, each refined
/// for at most `budget` rounds.
std::vector<BranchReport> enumerate_extensions(const Polynomial& F, const BaseField& k, unsigned budget,
                                               EnumerationTrace* trace = nullptr);

nlohmann::json to_json(const GradedFactorSummary& s);
nlohmann::json to_json(const BranchReport& b);
std::string to_dot(const EnumerationTrace& t);

}  // namespace vapprox

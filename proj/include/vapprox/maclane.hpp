#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vapprox/base.hpp"
#include "vapprox/ffield.hpp"
#include "vapprox/poly.hpp"
#include "vapprox/value.hpp"

namespace vapprox {

struct Stage {
    Polynomial key;
    Value lambda;
};

/// Result of truncating a valuation at a polynomial q: the term values
/// v(f_i q^i) of the q-expansion, their minimum and the set of minimizing indices.
struct TruncationData {
    Value value;
    std::set<std::size_t> s_set;
    std::vector<Value> term_values;
};

/// Residual polynomial of f with respect to the last stage: in(f) = in(M) * R(y)
/// where M is the normalized monomial of value `value` and y the degree-zero
/// class of phi^e. Coefficient k of `poly` comes from expansion index n + e*k.
struct ResidualData {
    Value value;
    std::size_t offset = 0;  // n
    std::size_t s_min = 0, s_max = 0;
    FFPoly poly;
};

/// An inductive valuation on K[x]: the base valuation followed by stages
/// [phi_1 = lambda_1; ...; phi_t = lambda_t], stored in normalized form
/// (stage degrees strictly increase, deg phi_1 = 1, only the last lambda may
/// be infinite). Immutable; augment returns a new chain.
///
/// Alongside the stages the chain keeps the residue-field tower
/// F_1 = F_p, F_{i+1} = F_i[y]/(psi_i), flattened into one finite field, with
/// the images z_i of the residual generators. That data realizes initial
/// forms concretely: every graded-ring query is answered from residual
/// polynomials over the top field.
class MacLaneChain {
public:
    /// The Gauss valuation [x = 0].
    static MacLaneChain gauss(const BaseField& k);
    /// Builds a chain stage by stage, validating each stage against its prefix.
    /// Equal-degree consecutive stages are merged (the later key replaces the earlier).
    static MacLaneChain from_stages(const BaseField& k, const std::vector<Stage>& stages);
    /// Chain grammar "phi:lambda; phi:lambda; ...".
    static MacLaneChain parse(const BaseField& k, const std::string& text);

    const BaseField& base() const { return base_; }
    const std::vector<Stage>& stages() const { return stages_; }
    std::size_t length() const { return stages_.size(); }
    const Polynomial& last_key() const { return stages_.back().key; }
    const Value& last_lambda() const { return stages_.back().lambda; }
    /// True iff the last lambda is infinite (the support is (last_key)).
    bool is_support() const { return last_lambda().is_infinite(); }
    /// The chain truncated to its first n stages (n >= 1).
    MacLaneChain prefix(std::size_t n) const;

    /// Index of Z in the value group of the chain (finite stages only).
    long ramification_index() const { return E_.back(); }
    /// Degree of the residue field of the last level over F_p.
    unsigned inertia_degree() const { return field_->degree(); }
    const FieldPtr& residue_field() const { return field_; }

    /// v(f); infinity iff f = 0 or the chain is a support chain whose key divides f.
    Value valuate(const Polynomial& f) const;
    TruncationData truncate(const Polynomial& q, const Polynomial& f) const;

    bool is_key_polynomial(const Polynomial& q) const;
    /// [this; mu(q) = alpha]. Requires q key and alpha > v(q). An equal-degree
    /// key replaces the last stage.
    MacLaneChain augment(const Polynomial& q, const Value& alpha) const;

    /// in(f) is a unit of the graded ring: the last-key truncation is attained only at index 0.
    bool is_unit_in_graded(const Polynomial& f) const;
    /// in(q) divides in(f) for a key polynomial q: 0 is not a minimizing index of the q-expansion.
    bool divides_in_graded(const Polynomial& q, const Polynomial& f) const;

    /// Residual polynomial of f with respect to the last stage (finite lambda, f != 0).
    ResidualData residual(const Polynomial& f) const;
    /// A key polynomial whose residual polynomial is the given monic irreducible
    /// psi != y over the residue field; its degree is e * deg(psi) * deg(last key).
    Polynomial lift_key(const FFPoly& psi) const;

    /// Text in the chain grammar.
    std::string str() const;
    bool operator==(const MacLaneChain& o) const;

private:
    explicit MacLaneChain(BaseField k) : base_(k) {}
    void append(const Polynomial& key, const Value& lambda);

    using Exps = std::vector<long>;
    Value value_at(std::size_t level, const Polynomial& f) const;
    Exps canonical_monomial(std::size_t level, const Value& beta) const;
    FFElem normalize(std::size_t level, Exps& m) const;
    std::pair<Value, FFElem> reduce(std::size_t level, const Polynomial& a) const;
    ResidualData residual_at(std::size_t level, const Polynomial& f) const;
    std::vector<FFElem> decompose(std::size_t level, const FFElem& c) const;
    Polynomial lift_unit(std::size_t level, const Value& beta, const FFElem& c) const;
    FFElem embed_prime(std::uint64_t c) const { return field_->from_int(static_cast<std::int64_t>(c)); }

    BaseField base_;
    std::vector<Stage> stages_;
    // Per level i = 1..t (index i-1): relative ramification e_i, cumulative E_i
    // (E_ has a leading entry E_0 = 1), residue degree of F_i, image of the
    // generator of F_i. z_ holds z_1..z_{t-1}.
    std::vector<long> e_;
    std::vector<long> E_{1};
    std::vector<unsigned> fdeg_;
    std::vector<FFElem> gen_;
    std::vector<FFElem> z_;
    FieldPtr field_;
};

enum class Comparison { Less, Greater, Equal, Incomparable };
std::string to_string(Comparison c);

/// Compares two chains on a finite sample of polynomials.
Comparison compare(const MacLaneChain& nu, const MacLaneChain& mu, const std::vector<Polynomial>& sample);

}  // namespace vapprox

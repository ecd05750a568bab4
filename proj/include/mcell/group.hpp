#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcell/prime_set.hpp"

namespace mcell {

enum class GroupKind {
    Trivial,
    Int,      // Z
    Cyclic,   // Z/p^k, p prime, k >= 1
    Prufer,   // Z(p^inf)
    RankOne,  // subgroup of Q containing 1, of a given Baer type
    // extended, output-only
    Padic,           // Zhat(p)
    PadicField,      // Qhat(p)
    FamilySum,       // Sum_{p in P} F(p)
    FormalProduct,   // Prod_{p in P} F(p)
    FormalQuotient,  // (f1 x ... x fn) / den
    FormalColimit,   // colim[base -> E_alpha : alpha in index]
    // composites
    Sum,         // finite direct sum
    FreeProduct  // fundamental-group inputs only, outermost level
};

// Uniform factor of a prime-indexed family.
struct FamilyFactor {
    enum Kind { CyclicPow, PruferEach, PadicEach } kind = CyclicPow;
    std::uint32_t exp = 1;  // CyclicPow only

    bool operator==(const FamilyFactor& o) const { return kind == o.kind && exp == o.exp; }
};

class GroupExpr {
public:
    GroupExpr() : kind_(GroupKind::Trivial), pset_(PrimeSet::none()) {}

    static GroupExpr trivial() { return GroupExpr(); }
    static GroupExpr integers();
    static GroupExpr cyclic(Prime p, std::uint32_t k);
    static GroupExpr prufer(Prime p);
    static GroupExpr rank_one(BaerType t);
    static GroupExpr sum(std::vector<GroupExpr> parts);
    static GroupExpr free_product(std::vector<GroupExpr> parts);
    static GroupExpr padic(Prime p);
    static GroupExpr padic_field(Prime p);
    static GroupExpr family_sum(PrimeSet ps, FamilyFactor f);
    static GroupExpr formal_product(PrimeSet ps, FamilyFactor f);
    static GroupExpr formal_quotient(std::vector<GroupExpr> num_factors, GroupExpr den);
    static GroupExpr formal_colimit(std::string tag, GroupExpr index, GroupExpr base);

    GroupKind kind() const { return kind_; }
    bool is(GroupKind k) const { return kind_ == k; }

    Prime prime() const { return p_; }               // Cyclic/Prufer/Padic/PadicField
    std::uint32_t exponent() const { return k_; }    // Cyclic
    const BaerType& baer_type() const { return t_; } // RankOne
    const std::vector<GroupExpr>& children() const { return kids_; }  // Sum/FreeProduct
    const PrimeSet& prime_set() const { return pset_; }
    const FamilyFactor& factor() const { return factor_; }
    const std::string& tag() const { return tag_; }

    // FormalQuotient accessors
    std::vector<GroupExpr> numerator() const;
    const GroupExpr& denominator() const { return kids_[0]; }
    // FormalColimit accessors
    const GroupExpr& colimit_index() const { return kids_[0]; }
    const GroupExpr& colimit_base() const { return kids_[1]; }

    bool is_primitive() const;          // Trivial/Int/Cyclic/Prufer/RankOne
    bool is_extended() const;           // any output-only constructor, recursively
    bool in_input_fragment() const;     // no extended forms, FreeProduct outermost only
    bool is_abelian_fragment() const;   // input fragment without FreeProduct

    // The summand list of an abelian fragment expression (itself if primitive).
    std::vector<GroupExpr> summands() const;

    static int cmp(const GroupExpr& a, const GroupExpr& b);
    bool operator==(const GroupExpr& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const GroupExpr& o) const { return cmp(*this, o) != 0; }
    bool operator<(const GroupExpr& o) const { return cmp(*this, o) < 0; }

    std::string to_string() const;

private:
    GroupKind kind_;
    Prime p_ = 0;
    std::uint32_t k_ = 0;
    BaerType t_;
    PrimeSet pset_;
    FamilyFactor factor_;
    std::string tag_;
    std::vector<GroupExpr> kids_;
};

// Canonical form: sums flattened and sorted, torsion primary-decomposed (the
// parser already splits composite orders), trivial summands dropped, the
// all-zero rank-one type collapsed to Z.  Idempotent; output isomorphic to input.
GroupExpr normalize(const GroupExpr& g);

// FreeProduct replaced by the direct sum of (abelianized) factors; abelian
// inputs are returned normalized unchanged.
GroupExpr abelianize(const GroupExpr& g);

// Equality of canonical forms.
inline bool iso_equal(const GroupExpr& a, const GroupExpr& b) { return normalize(a) == normalize(b); }

}  // namespace mcell

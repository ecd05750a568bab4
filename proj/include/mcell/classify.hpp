#pragma once

#include "mcell/group.hpp"

namespace mcell {

// Structural invariants of an abelian fragment group, computed summand-wise
// on the canonical form.  A sum is uniquely p-divisible iff every summand is,
// p-divisible iff every summand is; the torsion subgroup and primary
// components are the corresponding sub-sums.
class StructureReport {
public:
    explicit StructureReport(const GroupExpr& g);

    const GroupExpr& group() const { return group_; }

    bool is_torsion() const { return rank_ == 0; }
    int rank() const { return rank_; }  // torsion-free rank of g/T
    GroupExpr torsion_subgroup() const;
    GroupExpr torsion_free_part() const;  // sum of Int/RankOne summands
    GroupExpr primary_component(Prime p) const;

    bool is_divisible() const { return divisible_.is_all(); }
    bool is_p_divisible(Prime p) const { return divisible_.contains(p); }
    bool is_uniquely_p_divisible(Prime p) const { return uniquely_divisible_.contains(p); }

    const PrimeSet& uniquely_divisible_set() const { return uniquely_divisible_; }
    const PrimeSet& divisible_set() const { return divisible_; }

    // Primes with nonzero primary torsion component (always a finite set here).
    const std::set<Prime>& torsion_support() const { return torsion_support_; }

    // Exponent of the p-primary component: 0 if none, inf if a Prufer summand.
    ExtNat exponent_at(Prime p) const;

    unsigned cyclic_summands_at(Prime p) const;
    unsigned prufer_summands_at(Prime p) const;

    // g is torsion with support contained in the given set of primes.
    bool is_torsion_supported_in(const PrimeSet& ps) const;

    // Uniquely p-divisible for every p in ps; if not, *witness gets a failing prime.
    bool uniquely_divisible_on(const PrimeSet& ps, Prime* witness = nullptr) const;

private:
    GroupExpr group_;  // normalized
    std::vector<GroupExpr> summands_;
    int rank_ = 0;
    PrimeSet uniquely_divisible_ = PrimeSet::all();
    PrimeSet divisible_ = PrimeSet::all();
    std::set<Prime> torsion_support_;
};

StructureReport classify(const GroupExpr& g);

}  // namespace mcell

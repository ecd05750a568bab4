#pragma once

#include "mcell/classify.hpp"
#include "mcell/group.hpp"
#include "mcell/verdict.hpp"

namespace mcell {

// The coefficient ring R: zero, Z localized at J, or the sum of Z/p over J.
// J stays symbolic (finite or cofinite); membership is always decidable.
struct RingExpr {
    enum Kind { Zero, ZLocalized, SumModP } kind = Zero;
    PrimeSet j = PrimeSet::none();

    bool is_zero() const { return kind == Zero; }
    std::string to_string() const;

    bool operator==(const RingExpr& o) const { return kind == o.kind && j == o.j; }
};

struct CoeffSystem {
    PrimeSet j = PrimeSet::none();
    PrimeSet jprime = PrimeSet::all();
    GroupExpr h;
    RingExpr r;
    bool gab_torsion = false;
};

// Coefficient system attached to a group: J per unique divisibility of the
// abelianization, then H and R by the torsion dichotomy.
CoeffSystem derive_coeffs(const GroupExpr& g);

// One homology group passes the R-acyclicity test: uniquely p-divisible at
// every p in J when R is the mod-p sum, J'-torsion when R is Z_(J).
bool group_passes_r(const GroupExpr& a, const CoeffSystem& c, std::string* why = nullptr);

// Reduced homology profile (indexed from degree 1) against R.  Two-valued on
// fragment inputs: never Unknown.
Verdict hr_acyclic(const std::vector<GroupExpr>& homology, const CoeffSystem& c);

}  // namespace mcell

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcell/coeffs.hpp"
#include "mcell/moore.hpp"
#include "mcell/space.hpp"
#include "mcell/verdict.hpp"

namespace mcell {

// Reduced R-homology vanishing for a symbolic space.  Two-valued on fragment
// descriptors with known homology; Unknown when the profile is undetermined.
Verdict space_hr_acyclic(const SpaceDesc& x, const CoeffSystem& c);

// Conservative G-cellularity certificate: trivial groups, G itself, finite
// sums of copies of G, and recorded cellularization outputs are certified;
// everything else is Unknown (never No).
Verdict group_g_cellular(const std::optional<GroupExpr>& pi1, const GroupExpr& g);

// The rule cascade over the characterization theorems.  First decisive
// full-iff rule wins; partial rules upgrade Unknown to Yes only.
Verdict is_cellular(const MooreModel& m, const SpaceDesc& x);

struct CwResult {
    std::optional<SpaceDesc> space;
    Verdict context;  // trail, witnesses, and the unknown-reason when absent
};

// Symbolic CW_M for the covered inputs: cellular spaces are fixed, HR-acyclic
// K(A,2) goes through the universal-extension reduction, subring G through the
// completion fiber (with the worked instances evaluated).
CwResult cw(const MooreModel& m, const SpaceDesc& x);

// Is M(a,1) m-cellular: the multiplication-cokernel rule, the direct-summand
// rule, then the general cascade.
Verdict moore_on_moore(const MooreModel& m, const GroupExpr& a);

// Test mode: every applicable rule evaluated independently, for the
// no-contradiction assertions.
struct RuleOutcome {
    std::string rule;
    bool full_iff = false;
    Verdict verdict;
};
std::vector<RuleOutcome> cellular_cascade_all(const MooreModel& m, const SpaceDesc& x);

}  // namespace mcell

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcell/coeffs.hpp"
#include "mcell/group.hpp"
#include "mcell/verdict.hpp"

namespace mcell {

// T_G N computed summand-wise on N through the reachability rules; on every
// fragment primitive the radical is either zero or the whole summand, so the
// subgroup is witnessed as a sub-sum of N's canonical form.
struct RadicalResult {
    bool supported = false;
    std::string unsupported_reason;
    GroupExpr radical_subgroup;
    GroupExpr reduction;  // N / T_G N
    unsigned stages = 0;  // image-sum iterations (max over summands)
    std::vector<std::string> notes;
};

RadicalResult radical(const GroupExpr& g, const GroupExpr& n);

// Yes iff the reduction vanishes; Unknown when the pair is unsupported.
Verdict is_radical(const GroupExpr& g, const GroupExpr& n);

struct UniversalExtension {
    GroupExpr base;  // A
    GroupExpr gab;
    bool index_supported = false;
    GroupExpr index;  // Ext(G_ab, A)
    std::string index_unsupported_reason;
    GroupExpr total;          // A when the index vanishes, else a formal colimit
    Verdict h_radical;        // Definition 1.6 hypothesis: A is H-radical
    std::optional<Prime> h_failing_prime;
    std::vector<std::string> notes;
};

UniversalExtension universal_extension(const GroupExpr& g, const GroupExpr& a);

// Rule cascade: radical groups are quasi-radical; a vanishing index decides by
// the definition; certified instances answer with their citations; torsion and
// rank-one Moore groups certify through the simply connected characterizations.
// Everything else is Unknown.
Verdict is_quasi_radical(const GroupExpr& g, const GroupExpr& a);

}  // namespace mcell

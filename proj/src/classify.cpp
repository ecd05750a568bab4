#include "mcell/classify.hpp"

#include "mcell/errors.hpp"

namespace mcell {

StructureReport::StructureReport(const GroupExpr& g) : group_(normalize(g)) {
    if (!group_.is_abelian_fragment())
        throw UnsupportedConstructor("classify requires an abelian group in the input fragment: " +
                                     g.to_string());
    summands_ = group_.summands();
    for (const GroupExpr& s : summands_) {
        switch (s.kind()) {
            case GroupKind::Int:
                ++rank_;
                uniquely_divisible_ = PrimeSet::none();
                divisible_ = PrimeSet::none();
                break;
            case GroupKind::Cyclic:
                torsion_support_.insert(s.prime());
                uniquely_divisible_ = uniquely_divisible_.intersect(PrimeSet::cofinite({s.prime()}));
                divisible_ = divisible_.intersect(PrimeSet::cofinite({s.prime()}));
                break;
            case GroupKind::Prufer:
                torsion_support_.insert(s.prime());
                uniquely_divisible_ = uniquely_divisible_.intersect(PrimeSet::cofinite({s.prime()}));
                break;
            case GroupKind::RankOne: {
                ++rank_;
                PrimeSet inf = s.baer_type().infinite_support();
                uniquely_divisible_ = uniquely_divisible_.intersect(inf);
                divisible_ = divisible_.intersect(inf);
                break;
            }
            default:
                break;
        }
    }
}

GroupExpr StructureReport::torsion_subgroup() const {
    std::vector<GroupExpr> parts;
    for (auto& s : summands_)
        if (s.kind() == GroupKind::Cyclic || s.kind() == GroupKind::Prufer) parts.push_back(s);
    return normalize(GroupExpr::sum(std::move(parts)));
}

GroupExpr StructureReport::torsion_free_part() const {
    std::vector<GroupExpr> parts;
    for (auto& s : summands_)
        if (s.kind() == GroupKind::Int || s.kind() == GroupKind::RankOne) parts.push_back(s);
    return normalize(GroupExpr::sum(std::move(parts)));
}

GroupExpr StructureReport::primary_component(Prime p) const {
    std::vector<GroupExpr> parts;
    for (auto& s : summands_)
        if ((s.kind() == GroupKind::Cyclic || s.kind() == GroupKind::Prufer) && s.prime() == p)
            parts.push_back(s);
    return normalize(GroupExpr::sum(std::move(parts)));
}

ExtNat StructureReport::exponent_at(Prime p) const {
    ExtNat e = ExtNat::fin(0);
    for (auto& s : summands_) {
        if (s.kind() == GroupKind::Prufer && s.prime() == p) return ExtNat::inf();
        if (s.kind() == GroupKind::Cyclic && s.prime() == p && ExtNat::fin(s.exponent()) > e)
            e = ExtNat::fin(s.exponent());
    }
    return e;
}

unsigned StructureReport::cyclic_summands_at(Prime p) const {
    unsigned n = 0;
    for (auto& s : summands_)
        if (s.kind() == GroupKind::Cyclic && s.prime() == p) ++n;
    return n;
}

unsigned StructureReport::prufer_summands_at(Prime p) const {
    unsigned n = 0;
    for (auto& s : summands_)
        if (s.kind() == GroupKind::Prufer && s.prime() == p) ++n;
    return n;
}

bool StructureReport::is_torsion_supported_in(const PrimeSet& ps) const {
    if (rank_ != 0) return false;
    for (Prime p : torsion_support_)
        if (!ps.contains(p)) return false;
    return true;
}

bool StructureReport::uniquely_divisible_on(const PrimeSet& ps, Prime* witness) const {
    // Failing primes form ps minus the uniquely-divisible set.
    PrimeSet failing = ps.intersect(uniquely_divisible_.complement());
    if (failing.empty()) return true;
    if (witness) *witness = failing.smallest();
    return false;
}

StructureReport classify(const GroupExpr& g) { return StructureReport(g); }

}  // namespace mcell

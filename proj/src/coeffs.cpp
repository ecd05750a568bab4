#include "mcell/coeffs.hpp"

#include <sstream>

#include "mcell/errors.hpp"

namespace mcell {

std::string RingExpr::to_string() const {
    switch (kind) {
        case Zero:
            return "0";
        case ZLocalized: {
            PrimeSet inverted = j.complement();
            if (inverted.empty()) return "Z";
            if (!inverted.is_cofinite()) {
                std::ostringstream os;
                os << "Z[1/";
                bool first = true;
                for (Prime p : inverted.listed()) {
                    if (!first) os << ",";
                    os << p;
                    first = false;
                }
                os << "]";
                return os.str();
            }
            return "Z_(" + j.to_string() + ")";
        }
        case SumModP: {
            if (!j.is_cofinite()) {
                std::ostringstream os;
                bool first = true;
                for (Prime p : j.listed()) {
                    if (!first) os << " + ";
                    os << "Z/" << p;
                    first = false;
                }
                return os.str();
            }
            return "Sum_{p in " + j.to_string() + "} Z/p";
        }
    }
    return "?";
}

CoeffSystem derive_coeffs(const GroupExpr& g) {
    if (g.is_extended())
        throw UnsupportedConstructor("derive_coeffs: extended constructors are not valid inputs");
    GroupExpr ab = abelianize(g);
    StructureReport rep = classify(ab);

    CoeffSystem c;
    c.j = rep.uniquely_divisible_set();
    c.jprime = c.j.complement();
    c.gab_torsion = rep.is_torsion();
    if (c.gab_torsion) {
        // J' is the torsion support here, always finite
        std::vector<GroupExpr> parts;
        for (Prime p : c.jprime.listed()) parts.push_back(GroupExpr::cyclic(p, 1));
        c.h = normalize(GroupExpr::sum(std::move(parts)));
        c.r = RingExpr{RingExpr::ZLocalized, c.j};
    } else {
        std::map<Prime, ExtNat> ex;
        if (c.j.is_cofinite()) {
            for (Prime p : c.j.listed()) ex.emplace(p, ExtNat::fin(0));
            c.h = normalize(GroupExpr::rank_one(BaerType(ExtNat::inf(), std::move(ex))));
        } else {
            for (Prime p : c.j.listed()) ex.emplace(p, ExtNat::inf());
            c.h = normalize(GroupExpr::rank_one(BaerType(ExtNat::fin(0), std::move(ex))));
        }
        c.r = c.j.empty() ? RingExpr{RingExpr::Zero, PrimeSet::none()}
                          : RingExpr{RingExpr::SumModP, c.j};
    }
    return c;
}

bool group_passes_r(const GroupExpr& a, const CoeffSystem& c, std::string* why) {
    if (c.r.is_zero()) return true;
    StructureReport rep = classify(a);
    if (c.r.kind == RingExpr::SumModP) {
        Prime witness = 0;
        if (rep.uniquely_divisible_on(c.r.j, &witness)) return true;
        if (why) {
            std::ostringstream os;
            os << a.to_string() << " is not uniquely " << witness
               << "-divisible (tensor or Tor against Z/" << witness << " survives)";
            *why = os.str();
        }
        return false;
    }
    // R = Z_(J): the group must be J'-torsion
    if (rep.is_torsion_supported_in(c.jprime)) return true;
    if (why) {
        std::ostringstream os;
        if (!rep.is_torsion()) {
            os << a.to_string() << " is not torsion";
        } else {
            Prime bad = 0;
            for (Prime p : rep.torsion_support())
                if (!c.jprime.contains(p)) {
                    bad = p;
                    break;
                }
            os << a.to_string() << " has " << bad << "-torsion with " << bad << " in J";
        }
        *why = os.str();
    }
    return false;
}

Verdict hr_acyclic(const std::vector<GroupExpr>& homology, const CoeffSystem& c) {
    Verdict v;
    v.cite("hr-acyclicity");
    if (c.r.is_zero()) {
        v.answer = Answer::Yes;
        v.witness("R", "0");
        return v;
    }
    for (std::size_t i = 0; i < homology.size(); ++i) {
        std::string why;
        if (!group_passes_r(homology[i], c, &why)) {
            v.answer = Answer::No;
            v.witness("degree", std::to_string(i + 1));
            v.witness("failure", why);
            return v;
        }
    }
    v.answer = Answer::Yes;
    return v;
}

}  // namespace mcell

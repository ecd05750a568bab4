#include "mcell/radical.hpp"

#include <algorithm>
#include <sstream>

#include "mcell/classify.hpp"
#include "mcell/errors.hpp"
#include "mcell/homalg.hpp"
#include "mcell/moore.hpp"

namespace mcell {

namespace {

BaerType type_of(const GroupExpr& g) {
    return g.kind() == GroupKind::Int ? BaerType::zero() : g.baer_type();
}

// Nonvanishing of Hom(S(t), S(u)), shared with the homalg rules.
bool rank_hom_nonzero(const BaerType& t, const BaerType& u) {
    if (t.tail().is_inf() && !u.tail().is_inf()) return false;
    if (!t.tail().is_inf() && !u.tail().is_inf() && t.tail() > u.tail()) return false;
    std::set<Prime> ps;
    for (auto& [p, k] : t.exceptions()) ps.insert(p);
    for (auto& [p, k] : u.exceptions()) ps.insert(p);
    for (Prime p : ps)
        if (t.value_at(p).is_inf() && !u.value_at(p).is_inf()) return false;
    return true;
}

struct SummandFate {
    enum Kind { Zero, Full, Transfinite } kind = Zero;
    unsigned stages = 0;
};

// Fate of one primitive summand of N under the iterated image sums from the
// summands of g.
SummandFate summand_radical(const std::vector<GroupExpr>& g_parts, const GroupExpr& n) {
    SummandFate fate;
    switch (n.kind()) {
        case GroupKind::Cyclic: {
            Prime p = n.prime();
            std::uint32_t k = n.exponent();
            bool direct = false;
            std::uint32_t best_a = 0;
            for (const GroupExpr& s : g_parts) {
                if (s.kind() == GroupKind::Int ||
                    (s.kind() == GroupKind::RankOne && !s.baer_type().value_at(p).is_inf()))
                    direct = true;  // a surjection exists at once
                if (s.kind() == GroupKind::Cyclic && s.prime() == p)
                    best_a = std::max(best_a, s.exponent());
            }
            if (direct) return {SummandFate::Full, 1};
            if (best_a > 0) return {SummandFate::Full, (k + best_a - 1) / best_a};
            return fate;
        }
        case GroupKind::Prufer: {
            Prime p = n.prime();
            bool one_stage = false, bounded_only = false;
            for (const GroupExpr& s : g_parts) {
                if (s.kind() == GroupKind::Int || s.kind() == GroupKind::RankOne ||
                    (s.kind() == GroupKind::Prufer && s.prime() == p))
                    one_stage = true;  // unbounded or divisible images fill at once
                if (s.kind() == GroupKind::Cyclic && s.prime() == p) bounded_only = true;
            }
            if (one_stage) return {SummandFate::Full, 1};
            if (bounded_only) return {SummandFate::Transfinite, 0};
            return fate;
        }
        case GroupKind::Int:
        case GroupKind::RankOne: {
            BaerType u = type_of(n);
            for (const GroupExpr& s : g_parts) {
                if ((s.kind() == GroupKind::Int || s.kind() == GroupKind::RankOne) &&
                    rank_hom_nonzero(type_of(s), u))
                    return {SummandFate::Full, 1};
            }
            return fate;
        }
        default:
            return fate;
    }
}

}  // namespace

RadicalResult radical(const GroupExpr& g_in, const GroupExpr& n_in) {
    RadicalResult out;
    if (g_in.is_extended() || n_in.is_extended())
        throw UnsupportedConstructor("radical: extended constructors are not valid inputs");
    if (n_in.kind() == GroupKind::FreeProduct)
        throw UnsupportedConstructor("radical: N must be an abelian fragment group");
    GroupExpr g = abelianize(g_in);
    GroupExpr n = normalize(n_in);

    std::vector<GroupExpr> g_parts = g.summands();
    std::vector<GroupExpr> full, zero;
    unsigned stages = 0;
    for (const GroupExpr& s : n.summands()) {
        SummandFate fate = summand_radical(g_parts, s);
        switch (fate.kind) {
            case SummandFate::Full:
                full.push_back(s);
                stages = std::max(stages, fate.stages);
                break;
            case SummandFate::Zero:
                zero.push_back(s);
                break;
            case SummandFate::Transfinite:
                out.unsupported_reason = "the radical of " + s.to_string() + " under " +
                                         g.to_string() +
                                         " stabilizes only transfinitely (outside the rule table)";
                return out;
        }
    }
    out.supported = true;
    out.radical_subgroup = normalize(GroupExpr::sum(std::move(full)));
    out.reduction = normalize(GroupExpr::sum(std::move(zero)));
    out.stages = stages;
    return out;
}

Verdict is_radical(const GroupExpr& g, const GroupExpr& n) {
    RadicalResult r = radical(g, n);
    Verdict v;
    v.cite("radical-definition");
    if (!r.supported) {
        v.witness("unsupported", r.unsupported_reason);
        return v;
    }
    v.answer = r.reduction == GroupExpr::trivial() ? Answer::Yes : Answer::No;
    if (v.no()) v.witness("reduction", r.reduction.to_string());
    v.witness("stages", std::to_string(r.stages));
    return v;
}

UniversalExtension universal_extension(const GroupExpr& g, const GroupExpr& a_in) {
    UniversalExtension ue;
    ue.base = normalize(a_in);
    ue.gab = abelianize(g);

    CoeffSystem c = derive_coeffs(g);
    ue.h_radical = is_radical(c.h, ue.base);
    if (ue.h_radical.no()) {
        // smallest prime where H still maps somewhere: the failing reduction
        RadicalResult r = radical(c.h, ue.base);
        StructureReport rep = classify(r.reduction);
        if (!rep.torsion_support().empty())
            ue.h_failing_prime = *rep.torsion_support().begin();
        else if (!c.jprime.empty())
            ue.h_failing_prime = c.jprime.smallest();
        else
            ue.h_failing_prime = 2;
    }

    BifValue ext = bifunctor(BifunctorKind::Ext, ue.gab, ue.base);
    ue.index_supported = ext.supported();
    if (!ext.supported()) {
        ue.index_unsupported_reason = ext.unsupported_reason;
        ue.total = GroupExpr::formal_colimit("univ-ext", GroupExpr::trivial(), ue.base);
        return ue;
    }
    ue.index = ext.get();
    if (ue.index == GroupExpr::trivial()) {
        ue.total = ue.base;
    } else {
        ue.total = GroupExpr::formal_colimit("univ-ext", ue.index, ue.base);
    }

    // the worked tail-one instance: the colimit over Ext(S,Z) is S-radical
    if (ue.gab == GroupExpr::rank_one(BaerType(ExtNat::fin(1))) && ue.base == GroupExpr::integers())
        ue.notes.push_back("total is S-radical for the tail-one type S (Example 2.6)");
    return ue;
}

namespace {

// (G_ab, A) instances certified by worked results, with their citations.
struct CertifiedQuasi {
    bool matches(const GroupExpr& gab, const GroupExpr& a) const { return match(gab, a); }
    bool (*match)(const GroupExpr&, const GroupExpr&);
    Answer answer;
    const char* cite;
};

bool match_prufer_modp(const GroupExpr& gab, const GroupExpr& a) {
    return gab.kind() == GroupKind::Prufer && a.kind() == GroupKind::Cyclic &&
           a.prime() == gab.prime() && a.exponent() == 1;
}

bool match_tail_one_int(const GroupExpr& gab, const GroupExpr& a) {
    return gab == GroupExpr::rank_one(BaerType(ExtNat::fin(1))) && a == GroupExpr::integers();
}

bool match_counterexample_int(const GroupExpr& gab, const GroupExpr& a) {
    // Z[1/p] + Z/p against A = Z, any prime p
    if (a != GroupExpr::integers() || gab.kind() != GroupKind::Sum) return false;
    auto parts = gab.summands();
    if (parts.size() != 2) return false;
    if (parts[0].kind() != GroupKind::Cyclic || parts[0].exponent() != 1) return false;
    Prime p = parts[0].prime();
    return parts[1] == GroupExpr::rank_one(BaerType::inverted({p}));
}

const CertifiedQuasi kCertified[] = {
    {match_prufer_modp, Answer::Yes, "rem-strict-inclusion"},
    {match_tail_one_int, Answer::Yes, "ex-ext-tail-one"},
    {match_counterexample_int, Answer::No, "thm-counterexample"},
};

}  // namespace

Verdict is_quasi_radical(const GroupExpr& g, const GroupExpr& a_in) {
    GroupExpr a = normalize(a_in);
    GroupExpr gab = abelianize(g);
    UniversalExtension ue = universal_extension(g, a);

    Verdict v;
    v.cite("def-quasi-radical");
    if (ue.h_radical.no()) {
        std::ostringstream os;
        os << a.to_string() << " is not H-radical";
        if (ue.h_failing_prime) os << " (failing prime " << *ue.h_failing_prime << ")";
        v.witness("precondition", os.str());
        return v;
    }

    // radical groups are quasi-radical (strict inclusion)
    Verdict rad = is_radical(gab, a);
    if (rad.yes()) {
        v.answer = Answer::Yes;
        v.cite("rem-strict-inclusion");
        v.merge_trail(rad);
        return v;
    }

    // vanishing index: the universal extension is A itself
    if (ue.index_supported && ue.index == GroupExpr::trivial() && !rad.unknown()) {
        v.answer = rad.answer;
        v.witness("index", "Ext(G_ab, A) = 0, so the universal extension is A");
        v.merge_trail(rad);
        return v;
    }

    for (const CertifiedQuasi& c : kCertified) {
        if (c.matches(gab, a)) {
            v.answer = c.answer;
            v.cite(c.cite);
            if (c.answer == Answer::No) v.cite("prop-em2-criterion");
            return v;
        }
    }

    // torsion Moore groups: M(A,2) is M-cellular iff A is J'-torsion, and the
    // pi_2 of a cellular simply connected space is quasi radical
    CoeffSystem c = derive_coeffs(g);
    if (a.is_abelian_fragment()) {
        bool constructible = false;
        try {
            constructible = exists_moore(gab).yes() && moore_model(gab).constructible();
        } catch (const InputError&) {
            constructible = false;
        }
        if (constructible && c.gab_torsion && classify(a).is_torsion_supported_in(c.jprime)) {
            v.answer = Answer::Yes;
            v.cite("thm-torsion-sc");
            v.cite("cor-pi2-quasi");
            v.witness("route", "M(A,2) is HZ_(J)-acyclic, hence M-cellular with pi_2 = A");
            return v;
        }
        StructureReport grep = classify(gab);
        if (constructible && !c.gab_torsion && grep.rank() == 1 &&
            grep.torsion_subgroup() == GroupExpr::trivial() && group_passes_r(a, c)) {
            v.answer = Answer::Yes;
            v.cite("thm-rank-one-sc");
            v.cite("cor-pi2-quasi");
            v.witness("route", "M(A,2) is HR-acyclic, hence M-cellular with pi_2 = A");
            return v;
        }
    }

    v.witness("attempted",
              "radical implication, vanishing index, certified instances, simply connected "
              "Moore-group criteria");
    return v;
}

}  // namespace mcell

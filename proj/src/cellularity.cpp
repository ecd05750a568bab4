#include "mcell/cellularity.hpp"

#include <sstream>

#include "mcell/classify.hpp"
#include "mcell/errors.hpp"
#include "mcell/homalg.hpp"
#include "mcell/radical.hpp"

namespace mcell {

namespace {

bool is_subring_group(const GroupExpr& g) {
    if (g.kind() == GroupKind::Int) return true;
    if (g.kind() != GroupKind::RankOne) return false;
    const BaerType& t = g.baer_type();
    if (!t.tail().is_zero() && !t.tail().is_inf()) return false;
    for (auto& [p, k] : t.exceptions())
        if (!k.is_zero() && !k.is_inf()) return false;
    return true;
}

bool is_rank_one_tf(const GroupExpr& g) {
    return g.kind() == GroupKind::Int || g.kind() == GroupKind::RankOne;
}

bool is_torsion_abelian(const GroupExpr& g) {
    if (!g.is_abelian_fragment()) return false;
    return classify(g).is_torsion();
}

bool is_pure_cyclic_torsion(const GroupExpr& g) {
    if (!g.is_abelian_fragment()) return false;
    for (const GroupExpr& s : g.summands())
        if (s.kind() != GroupKind::Cyclic) return false;
    return true;
}

bool group_in_fragment(const GroupExpr& g) { return g.in_input_fragment(); }

bool space_in_fragment(const SpaceDesc& x) {
    switch (x.kind()) {
        case SpaceKind::Point:
        case SpaceKind::Sphere:
            return true;
        case SpaceKind::EM:
        case SpaceKind::MooreSpace:
            return group_in_fragment(x.group());
        case SpaceKind::Generic: {
            if (!group_in_fragment(x.pi1_field())) return false;
            if (x.homology_field())
                for (auto& h : *x.homology_field())
                    if (!group_in_fragment(h)) return false;
            if (x.pi2_field() && !group_in_fragment(*x.pi2_field())) return false;
            return true;
        }
        case SpaceKind::Product: {
            for (auto& f : x.factors())
                if (!space_in_fragment(f)) return false;
            return true;
        }
        default:
            return false;
    }
}

// ---- worked cellularization outputs -----------------------------------

GroupExpr adele_quotient() {
    return GroupExpr::formal_quotient(
        {GroupExpr::formal_product(PrimeSet::all(), {FamilyFactor::PadicEach, 1})},
        GroupExpr::integers());
}

SpaceDesc sphere_cw_output() {
    return SpaceDesc::generic(adele_quotient(), false, true, std::nullopt, adele_quotient());
}

GroupExpr counterexample_cw_group(Prime p) {
    return normalize(GroupExpr::sum(
        {GroupExpr::cyclic(p, 1),
         GroupExpr::formal_quotient({GroupExpr::padic(p)}, GroupExpr::integers())}));
}

// G = Z[1/p] exactly, returning p.
std::optional<Prime> single_inverted_prime(const GroupExpr& g) {
    if (g.kind() != GroupKind::RankOne) return std::nullopt;
    const BaerType& t = g.baer_type();
    if (!t.tail().is_zero() || t.exceptions().size() != 1) return std::nullopt;
    auto& [p, k] = *t.exceptions().begin();
    if (!k.is_inf()) return std::nullopt;
    return p;
}

// G = Z[1/p] * Z/p (the counterexample group), returning p.
std::optional<Prime> counterexample_prime(const GroupExpr& g) {
    if (g.kind() != GroupKind::FreeProduct) return std::nullopt;
    auto parts = g.children();
    if (parts.size() != 2) return std::nullopt;
    if (parts[0].kind() != GroupKind::Cyclic || parts[0].exponent() != 1) return std::nullopt;
    Prime p = parts[0].prime();
    if (parts[1] != GroupExpr::rank_one(BaerType::inverted({p}))) return std::nullopt;
    return p;
}

std::optional<Verdict> certified_cw_output(const GroupExpr& g, const SpaceDesc& x) {
    if (auto p = single_inverted_prime(g)) {
        if (x == SpaceDesc::em(GroupExpr::padic_field(*p), 1)) {
            Verdict v = Verdict::yes_by("ex-cw-prufer");
            v.cite("cw-idempotence");
            return v;
        }
    }
    if (g == GroupExpr::rank_one(BaerType::all_inf()) && x == sphere_cw_output()) {
        Verdict v = Verdict::yes_by("ex-cw-sphere");
        v.cite("cw-idempotence");
        return v;
    }
    if (auto p = counterexample_prime(g)) {
        if (x == SpaceDesc::em(counterexample_cw_group(*p), 1)) {
            Verdict v = Verdict::yes_by("thm-counterexample");
            v.cite("cw-idempotence");
            return v;
        }
    }
    return std::nullopt;
}

// ---- rule components ---------------------------------------------------

// "pi_1 generated by elements of order p^l, l <= k_p": decidable for abelian
// fundamental groups, Unknown for free products other than G itself.
Verdict pi1_generated_by_bounded(const std::optional<GroupExpr>& pi1, const StructureReport& grep) {
    Verdict v;
    v.cite("thm-bounded-torsion");
    if (!pi1) {
        v.witness("pi1", "not determined by the descriptor");
        return v;
    }
    if (*pi1 == GroupExpr::trivial() || *pi1 == grep.group()) {
        v.answer = Answer::Yes;
        return v;
    }
    if (pi1->kind() == GroupKind::FreeProduct) {
        v.witness("pi1", "nonabelian and not equal to G: undecided");
        return v;
    }
    StructureReport rep = classify(*pi1);
    if (!rep.is_torsion()) {
        v.answer = Answer::No;
        v.witness("pi1", pi1->to_string() + " has elements of infinite order");
        return v;
    }
    for (Prime p : rep.torsion_support()) {
        ExtNat bound = grep.exponent_at(p);
        if (bound.is_zero()) {
            v.answer = Answer::No;
            v.witness("pi1", pi1->to_string() + " has " + std::to_string(p) +
                                 "-torsion but G has none");
            return v;
        }
        if (rep.prufer_summands_at(p) > 0 || rep.exponent_at(p) > bound) {
            v.answer = Answer::No;
            v.witness("pi1", "the subgroup of " + pi1->to_string() +
                                 " generated by elements of order dividing " + std::to_string(p) +
                                 "^" + bound.to_string() + " is proper");
            return v;
        }
    }
    v.answer = Answer::Yes;
    return v;
}

Verdict conjunction(const std::string& rule, const Verdict& a, const Verdict& b) {
    Verdict v;
    v.cite(rule);
    if (a.no()) {
        v.answer = Answer::No;
        v.merge_trail(a);
        return v;
    }
    if (b.no()) {
        v.answer = Answer::No;
        v.merge_trail(b);
        return v;
    }
    if (a.yes() && b.yes()) {
        v.answer = Answer::Yes;
        v.merge_trail(a);
        v.merge_trail(b);
        return v;
    }
    v.merge_trail(a);
    v.merge_trail(b);
    return v;
}

}  // namespace

Verdict space_hr_acyclic(const SpaceDesc& x, const CoeffSystem& c) {
    Verdict v;
    v.cite("hr-acyclicity");
    if (c.r.is_zero()) {
        v.answer = Answer::Yes;
        v.witness("R", "0");
        return v;
    }
    switch (x.kind()) {
        case SpaceKind::Point:
            v.answer = Answer::Yes;
            return v;
        case SpaceKind::Sphere: {
            std::vector<GroupExpr> profile(x.degree(), GroupExpr::trivial());
            profile.back() = GroupExpr::integers();
            return hr_acyclic(profile, c);
        }
        case SpaceKind::EM: {
            // K(A,n) is R-acyclic iff A passes the coefficient test; for a free
            // product K(N,1) is the wedge of the factors, and the flags agree
            // with the abelianization
            std::string why;
            if (group_passes_r(abelianize(x.group()), c, &why)) {
                v.answer = Answer::Yes;
            } else {
                v.answer = Answer::No;
                v.witness("failure", why);
            }
            return v;
        }
        case SpaceKind::MooreSpace: {
            std::string why;
            if (group_passes_r(abelianize(x.group()), c, &why)) {
                v.answer = Answer::Yes;
            } else {
                v.answer = Answer::No;
                v.witness("failure", why);
            }
            return v;
        }
        case SpaceKind::Generic: {
            if (!x.homology_field()) {
                v.witness("homology", "profile not provided");
                return v;
            }
            return hr_acyclic(*x.homology_field(), c);
        }
        case SpaceKind::Product: {
            bool unknown = false;
            for (auto& f : x.factors()) {
                Verdict sub = space_hr_acyclic(f, c);
                if (sub.no()) return sub;
                if (!sub.yes()) unknown = true;
            }
            if (!unknown) v.answer = Answer::Yes;
            return v;
        }
        default:
            v.witness("space", "acyclicity undetermined for this descriptor");
            return v;
    }
}

Verdict group_g_cellular(const std::optional<GroupExpr>& pi1, const GroupExpr& g) {
    Verdict v;
    v.cite("g-cellular-conservative");
    if (!pi1) {
        v.witness("pi1", "not determined by the descriptor");
        return v;
    }
    GroupExpr n = normalize(*pi1);
    if (n == GroupExpr::trivial() || n == g) {
        v.answer = Answer::Yes;
        return v;
    }
    // finite sums of copies of an abelian G are colimits of G
    if (g.is_abelian_fragment() && g != GroupExpr::trivial() && n.is_abelian_fragment()) {
        std::vector<GroupExpr> gs = g.summands(), ns = n.summands();
        if (!gs.empty() && ns.size() % gs.size() == 0) {
            std::size_t copies = ns.size() / gs.size();
            std::vector<GroupExpr> rebuilt;
            for (std::size_t i = 0; i < copies; ++i)
                rebuilt.insert(rebuilt.end(), gs.begin(), gs.end());
            if (normalize(GroupExpr::sum(rebuilt)) == n && copies >= 1) {
                v.answer = Answer::Yes;
                v.witness("pi1", "a finite sum of copies of G");
                return v;
            }
        }
    }
    // recorded cellularization outputs
    if (auto p = single_inverted_prime(g)) {
        if (n == GroupExpr::padic_field(*p)) {
            v.answer = Answer::Yes;
            v.cite("ex-cw-prufer");
            return v;
        }
    }
    if (g == GroupExpr::rank_one(BaerType::all_inf()) && n == adele_quotient()) {
        v.answer = Answer::Yes;
        v.cite("ex-cw-sphere");
        return v;
    }
    v.witness("pi1", "no cellularity certificate for " + n.to_string());
    return v;
}

namespace {

struct CascadeContext {
    GroupExpr g;
    CoeffSystem coeffs;
    bool g_abelian = false;
};

CascadeContext make_context(const MooreModel& m) {
    CascadeContext ctx;
    ctx.g = normalize(m.group);
    ctx.coeffs = derive_coeffs(ctx.g);
    ctx.g_abelian = ctx.g.kind() != GroupKind::FreeProduct;
    return ctx;
}

std::vector<RuleOutcome> run_rules(const CascadeContext& ctx, const SpaceDesc& x) {
    std::vector<RuleOutcome> out;
    const GroupExpr& g = ctx.g;
    const CoeffSystem& c = ctx.coeffs;

    if (x == SpaceDesc::point()) {
        out.push_back({"point", true, Verdict::yes_by("point-cellular")});
        return out;
    }
    if (auto cert = certified_cw_output(g, x)) {
        out.push_back({"cw-certified", true, *cert});
        return out;
    }
    if (!space_in_fragment(x))
        throw UnsupportedConstructor(
            "is_cellular: the space descriptor carries non-fragment group data: " + x.to_string());

    std::optional<GroupExpr> pi1 = fundamental_group(x);
    Verdict acyclic = space_hr_acyclic(x, c);
    bool sc = known_simply_connected(x);

    // full characterizations
    if (is_subring_group(g)) {
        Verdict cellular_pi1 = group_g_cellular(pi1, g);
        out.push_back({"subring-iff", true, conjunction("thm-subring", cellular_pi1, acyclic)});
    }
    if (ctx.g_abelian && is_pure_cyclic_torsion(g)) {
        Verdict genby = pi1_generated_by_bounded(pi1, classify(g));
        out.push_back(
            {"bounded-torsion-iff", true, conjunction("thm-bounded-torsion", genby, acyclic)});
    }
    if (sc && ctx.g_abelian && is_rank_one_tf(g)) {
        Verdict v = acyclic;
        v.cite("thm-rank-one-sc");
        out.push_back({"rank-one-sc-iff", true, v});
    }
    if (sc && ctx.g_abelian && is_torsion_abelian(g)) {
        Verdict v = acyclic;
        v.cite("thm-torsion-sc");
        if (g.kind() == GroupKind::Prufer) v.cite("thm-prufer-sc");
        out.push_back({"torsion-sc-iff", true, v});
    }
    if (x.kind() == SpaceKind::EM && x.degree() == 2) {
        if (acyclic.no()) {
            Verdict v = acyclic;
            v.cite("acyclicity-necessary");
            out.push_back({"em2-quasi-iff", true, v});
        } else if (acyclic.yes()) {
            Verdict q = is_quasi_radical(g, x.group());
            Verdict v;
            v.answer = q.answer;
            v.cite("prop-em2-criterion");
            v.merge_trail(q);
            out.push_back({"em2-quasi-iff", true, v});
        }
    }

    // necessary conditions
    if (acyclic.no()) {
        Verdict v = acyclic;
        v.cite("acyclicity-necessary");
        v.answer = Answer::No;
        out.push_back({"acyclicity-necessary", true, v});
    }
    std::optional<GroupExpr> pi2 = second_homotopy(x);
    if (sc && pi2 && pi2->in_input_fragment()) {
        Verdict q = is_quasi_radical(g, *pi2);
        if (q.no()) {
            Verdict v;
            v.answer = Answer::No;
            v.cite("cor-pi2-quasi");
            v.merge_trail(q);
            v.witness("pi2", pi2->to_string());
            out.push_back({"pi2-quasi-necessary", true, v});
        }
    }

    // sufficient upgrades
    std::optional<GroupExpr> h2 = second_homology(x);
    if (h2 && h2->in_input_fragment()) {
        Verdict rad = is_radical(abelianize(g), *h2);
        if (rad.yes()) {
            Verdict cellular_pi1 = group_g_cellular(pi1, g);
            if (cellular_pi1.yes() && acyclic.yes()) {
                Verdict v = Verdict::yes_by("thm-h2-radical");
                v.merge_trail(rad);
                v.merge_trail(cellular_pi1);
                v.witness("H2", h2->to_string());
                out.push_back({"h2-radical-upgrade", false, v});
            }
        }
    }
    if (pi2 && pi2->in_input_fragment()) {
        Verdict cellular_pi1 = group_g_cellular(pi1, g);
        if (cellular_pi1.yes() && acyclic.yes()) {
            Verdict rad = is_radical(abelianize(g), *pi2);
            if (rad.yes()) {
                Verdict v = Verdict::yes_by("cor-pi2-radical");
                v.merge_trail(rad);
                v.witness("pi2", pi2->to_string());
                out.push_back({"pi2-radical-upgrade", false, v});
            } else {
                Verdict q = is_quasi_radical(g, *pi2);
                if (q.yes()) {
                    Verdict v = Verdict::yes_by("prop-pi2-quasi");
                    v.merge_trail(q);
                    v.witness("pi2", pi2->to_string());
                    out.push_back({"pi2-quasi-upgrade", false, v});
                }
            }
        }
    }
    return out;
}

}  // namespace

Verdict is_cellular(const MooreModel& m, const SpaceDesc& x) {
    CascadeContext ctx = make_context(m);
    std::vector<RuleOutcome> outcomes = run_rules(ctx, x);
    std::vector<std::string> attempted;
    for (const RuleOutcome& o : outcomes) {
        attempted.push_back(o.rule);
        if (o.full_iff && !o.verdict.unknown()) return o.verdict;
        if (!o.full_iff && o.verdict.yes()) return o.verdict;
    }
    Verdict v;
    v.cite("thm-general-description");
    if (ctx.g_abelian) v.cite("question-naive-abelian");
    std::string tried;
    for (auto& a : attempted) tried += (tried.empty() ? "" : ", ") + a;
    v.witness("attempted", tried.empty() ? "no applicable rule" : tried);
    v.witness("undecided",
              "condition (3), whether the universal extension group E is G_ab-radical, has no "
              "decision procedure here");
    return v;
}

std::vector<RuleOutcome> cellular_cascade_all(const MooreModel& m, const SpaceDesc& x) {
    return run_rules(make_context(m), x);
}

CwResult cw(const MooreModel& m, const SpaceDesc& x) {
    CwResult out;
    Verdict cellular = is_cellular(m, x);
    if (cellular.yes()) {
        out.space = x;
        out.context = cellular;
        out.context.cite("cw-idempotence");
        return out;
    }
    CascadeContext ctx = make_context(m);
    const GroupExpr& g = ctx.g;
    const CoeffSystem& c = ctx.coeffs;

    // K(A,2) through the universal-extension reduction (needs HR-acyclicity;
    // otherwise the completion fiber below may still apply)
    bool em2_not_acyclic = false;
    if (x.kind() == SpaceKind::EM && x.degree() == 2 && space_hr_acyclic(x, c).no())
        em2_not_acyclic = true;
    if (x.kind() == SpaceKind::EM && x.degree() == 2 && !em2_not_acyclic) {
        GroupExpr a = normalize(x.group());
        if (auto p = counterexample_prime(g)) {
            if (a == GroupExpr::integers()) {
                out.space = SpaceDesc::em(counterexample_cw_group(*p), 1);
                out.context = Verdict::yes_by("thm-cw-em2");
                out.context.cite("thm-counterexample");
                out.context.witness("phi", "Z -> Zhat(" + std::to_string(*p) +
                                               "), injective with cokernel Zhat/Z x Z/p");
                return out;
            }
        }
        BifValue index = bifunctor(BifunctorKind::Ext, abelianize(g), a);
        if (index.supported() && index.get() == GroupExpr::trivial()) {
            RadicalResult rad = radical(abelianize(g), a);
            if (rad.supported) {
                GroupExpr ker = rad.radical_subgroup;  // phi: A -> A / T_G A
                out.space = ker == GroupExpr::trivial() ? SpaceDesc::point()
                                                        : SpaceDesc::em(ker, 2);
                out.context = Verdict::yes_by("thm-cw-em2");
                out.context.witness("E", "the universal extension is A itself (Ext = 0)");
                out.context.witness("ker phi", ker.to_string());
                return out;
            }
        }
        out.context.cite("thm-cw-em2");
        out.context.witness("undecided", "E/T_G E is not computable for this pair");
        return out;
    }

    // subring G on nilpotent spaces with radical fundamental group
    if (is_subring_group(g) && known_nilpotent(x)) {
        std::optional<GroupExpr> pi1 = fundamental_group(x);
        if (pi1 && pi1->in_input_fragment() && is_radical(g, *pi1).yes()) {
            if (auto p = single_inverted_prime(g)) {
                if (x == SpaceDesc::em(GroupExpr::prufer(*p), 1)) {
                    out.space = SpaceDesc::em(GroupExpr::padic_field(*p), 1);
                    out.context = Verdict::yes_by("ex-cw-prufer");
                    out.context.cite("prop-completion-fiber");
                    return out;
                }
            }
            if (g == GroupExpr::rank_one(BaerType::all_inf()) && x == SpaceDesc::sphere(2)) {
                out.space = sphere_cw_output();
                out.context = Verdict::yes_by("ex-cw-sphere");
                out.context.cite("prop-completion-fiber");
                out.context.witness("pi1 = pi2", adele_quotient().to_string());
                return out;
            }
            if (c.j.empty()) {
                // M = M(Z,1) = S^1: every connected space is already cellular
                out.space = x;
                out.context = Verdict::yes_by("prop-completion-fiber");
                out.context.witness("J", "empty: the completion product is a point");
                return out;
            }
            out.space = SpaceDesc::formal_fiber(x, SpaceDesc::completion_product(c.j, x));
            out.context = Verdict::yes_by("prop-completion-fiber");
            return out;
        }
    }

    if (em2_not_acyclic)
        throw InputError(
            "cw: K(A,2) must be HR-acyclic for the reduction formula; this input is not");
    out.context.cite("thm-general-description");
    out.context.witness("undecided", "no cellularization formula covers this input");
    return out;
}

Verdict moore_on_moore(const MooreModel& m, const GroupExpr& a_in) {
    GroupExpr a = normalize(a_in);
    Verdict exists = exists_moore(a);
    if (exists.no())
        throw InputError("moore_on_moore: no Moore space exists for " + a.to_string());

    GroupExpr g = normalize(m.group);
    // multiplication-cokernel rule: a = Z/n with every prime of n outside J
    if (is_rank_one_tf(g) && a.is_abelian_fragment()) {
        StructureReport arep = classify(a);
        bool finite_cyclic = arep.is_torsion();
        for (Prime p : arep.torsion_support())
            if (arep.prufer_summands_at(p) > 0 || arep.cyclic_summands_at(p) > 1)
                finite_cyclic = false;
        if (finite_cyclic && a != GroupExpr::trivial()) {
            BaerType t = g.kind() == GroupKind::Int ? BaerType::zero() : g.baer_type();
            bool all_outside_j = true;
            for (Prime p : arep.torsion_support())
                if (t.value_at(p).is_inf()) all_outside_j = false;
            if (all_outside_j) {
                Verdict v = Verdict::yes_by("lemma-mod-n-cellular");
                v.witness("n", arep.group().to_string());
                return v;
            }
        }
    }
    // direct-summand rule
    if (g.is_abelian_fragment() && a.is_abelian_fragment()) {
        std::vector<GroupExpr> gs = g.summands(), as = a.summands();
        bool submultiset = true;
        std::vector<bool> used(gs.size(), false);
        for (const GroupExpr& s : as) {
            bool found = false;
            for (std::size_t i = 0; i < gs.size() && !found; ++i)
                if (!used[i] && gs[i] == s) {
                    used[i] = true;
                    found = true;
                }
            if (!found) submultiset = false;
        }
        if (submultiset) {
            Verdict v = Verdict::yes_by("lemma-summand-cellular");
            v.witness("summand", a.to_string());
            return v;
        }
    }
    return is_cellular(m, SpaceDesc::moore(a, 1));
}

}  // namespace mcell

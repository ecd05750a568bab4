#include "mcell/homalg.hpp"

#include <algorithm>
#include <sstream>

#include "mcell/errors.hpp"

namespace mcell {

const char* bifunctor_name(BifunctorKind k) {
    switch (k) {
        case BifunctorKind::Hom: return "hom";
        case BifunctorKind::Tensor: return "tensor";
        case BifunctorKind::Tor: return "tor";
        case BifunctorKind::Ext: return "ext";
    }
    return "?";
}

namespace {

// Internally Z is the rank-one group of the all-zero type; one S(t) rule then
// covers the Z row/column as the t = 0 instance.
GroupExpr as_rank_one_form(const GroupExpr& g) {
    if (g.kind() == GroupKind::Int) return GroupExpr::rank_one(BaerType::zero());
    return g;
}

struct PrimOut {
    std::optional<GroupExpr> val;
    const char* rule = nullptr;
    std::string why;
};

PrimOut ok(GroupExpr g, const char* rule) { return {std::move(g), rule, {}}; }
PrimOut unsupported(std::string why) { return {std::nullopt, nullptr, std::move(why)}; }

// Hom(S(t), S(u)) is nonzero iff t <= u up to finitely many finite gaps; the
// value is the rank-one group of the clamped difference type.
bool hom_rank_rank_nonzero(const BaerType& t, const BaerType& u) {
    if (t.tail().is_inf() && !u.tail().is_inf()) return false;
    if (!t.tail().is_inf() && !u.tail().is_inf() && t.tail() > u.tail()) return false;
    std::set<Prime> ps;
    for (auto& [p, k] : t.exceptions()) ps.insert(p);
    for (auto& [p, k] : u.exceptions()) ps.insert(p);
    for (Prime p : ps)
        if (t.value_at(p).is_inf() && !u.value_at(p).is_inf()) return false;
    return true;
}

BaerType hom_rank_rank_type(const BaerType& t, const BaerType& u) {
    std::set<Prime> ps;
    for (auto& [p, k] : t.exceptions()) ps.insert(p);
    for (auto& [p, k] : u.exceptions()) ps.insert(p);
    ExtNat tail = u.tail().is_inf() ? ExtNat::inf() : ExtNat::fin(u.tail().finite() - t.tail().finite());
    std::map<Prime, ExtNat> ex;
    for (Prime p : ps) {
        ExtNat ku = u.value_at(p), kt = t.value_at(p);
        ExtNat w = ku.is_inf() ? ExtNat::inf()
                               : ExtNat::fin(ku.finite() > kt.finite() ? ku.finite() - kt.finite() : 0);
        ex.emplace(p, w);
    }
    return BaerType(tail, std::move(ex));
}

// Ext(S(t), S(u)) vanishes exactly when the telescope tower is Mittag-Leffler:
// infinite entries of t stay infinite in u, and only finitely many primes have
// k_p(t) > 0 with k_p(u) finite.
bool ext_rank_rank_zero(const BaerType& t, const BaerType& u) {
    if (t.tail().is_inf() && !u.tail().is_inf()) return false;
    std::set<Prime> ps;
    for (auto& [p, k] : t.exceptions()) ps.insert(p);
    for (auto& [p, k] : u.exceptions()) ps.insert(p);
    for (Prime p : ps)
        if (t.value_at(p).is_inf() && !u.value_at(p).is_inf()) return false;
    if (!t.tail().is_zero() && !u.tail().is_inf()) return false;
    return true;
}

// Ext(S(t), Z) = (prod of Zhat(p) / Z/p^k factors over positive entries) / Z,
// collapsing to 0 when S(t) is free of finite index (finite total exponent).
GroupExpr ext_rank_int(const BaerType& t) {
    if (t.total_finite_exponent().has_value()) return GroupExpr::trivial();
    std::vector<GroupExpr> factors;
    for (auto& [p, k] : t.exceptions()) {
        if (k.is_inf())
            factors.push_back(GroupExpr::padic(p));
        else if (!k.is_zero())
            factors.push_back(GroupExpr::cyclic(p, k.finite()));
    }
    std::set<Prime> excluded;
    for (auto& [p, k] : t.exceptions()) excluded.insert(p);
    if (t.tail().is_inf())
        factors.push_back(GroupExpr::formal_product(PrimeSet::cofinite(excluded),
                                                    {FamilyFactor::PadicEach, 1}));
    else if (!t.tail().is_zero())
        factors.push_back(GroupExpr::formal_product(PrimeSet::cofinite(excluded),
                                                    {FamilyFactor::CyclicPow, t.tail().finite()}));
    return GroupExpr::formal_quotient(std::move(factors), GroupExpr::integers());
}

PrimOut prim_hom(const GroupExpr& a, const GroupExpr& b) {
    GroupKind ka = a.kind(), kb = b.kind();
    if (ka == GroupKind::Trivial || kb == GroupKind::Trivial)
        return ok(GroupExpr::trivial(), "hom-zero");
    if (ka == GroupKind::Cyclic) {
        if (kb == GroupKind::Cyclic)
            return a.prime() == b.prime()
                       ? ok(GroupExpr::cyclic(a.prime(), std::min(a.exponent(), b.exponent())),
                            "hom-cyc-cyc")
                       : ok(GroupExpr::trivial(), "hom-cyc-cyc");
        if (kb == GroupKind::Prufer)
            return a.prime() == b.prime() ? ok(a, "hom-cyc-pru") : ok(GroupExpr::trivial(), "hom-cyc-pru");
        return ok(GroupExpr::trivial(), "hom-cyc-tf");  // torsion-free target
    }
    if (ka == GroupKind::Prufer) {
        if (kb == GroupKind::Prufer && a.prime() == b.prime())
            return ok(GroupExpr::padic(a.prime()), "hom-pru-pru");
        return ok(GroupExpr::trivial(), "hom-pru-reduced");
    }
    // ka == RankOne (Z folded in as the zero type)
    const BaerType& t = a.baer_type();
    if (kb == GroupKind::Cyclic)
        return t.value_at(b.prime()).is_inf() ? ok(GroupExpr::trivial(), "hom-rank-cyc")
                                              : ok(b, "hom-rank-cyc");
    if (kb == GroupKind::Prufer)
        return t.value_at(b.prime()).is_inf() ? ok(GroupExpr::padic_field(b.prime()), "hom-rank-pru")
                                              : ok(b, "hom-rank-pru");
    // rank-one target
    const BaerType& u = b.baer_type();
    if (!hom_rank_rank_nonzero(t, u)) return ok(GroupExpr::trivial(), "hom-rank-rank");
    return ok(GroupExpr::rank_one(hom_rank_rank_type(t, u)), "hom-rank-rank");
}

PrimOut prim_tensor(const GroupExpr& a, const GroupExpr& b) {
    GroupKind ka = a.kind(), kb = b.kind();
    if (ka == GroupKind::Trivial || kb == GroupKind::Trivial)
        return ok(GroupExpr::trivial(), "tensor-zero");
    if (ka > kb) return prim_tensor(b, a);  // symmetric; canonical operand order
    if (ka == GroupKind::Cyclic) {
        if (kb == GroupKind::Cyclic)
            return a.prime() == b.prime()
                       ? ok(GroupExpr::cyclic(a.prime(), std::min(a.exponent(), b.exponent())),
                            "tensor-cyc-cyc")
                       : ok(GroupExpr::trivial(), "tensor-cyc-cyc");
        if (kb == GroupKind::Prufer) return ok(GroupExpr::trivial(), "tensor-cyc-pru");
        return b.baer_type().value_at(a.prime()).is_inf()
                   ? ok(GroupExpr::trivial(), "tensor-cyc-rank")
                   : ok(a, "tensor-cyc-rank");
    }
    if (ka == GroupKind::Prufer) {
        if (kb == GroupKind::Prufer) return ok(GroupExpr::trivial(), "tensor-pru-pru");
        return b.baer_type().value_at(a.prime()).is_inf()
                   ? ok(GroupExpr::trivial(), "tensor-pru-rank")
                   : ok(a, "tensor-pru-rank");
    }
    // rank-one (x) rank-one: types add
    return ok(GroupExpr::rank_one(a.baer_type().plus(b.baer_type())), "tensor-rank-rank");
}

PrimOut prim_tor(const GroupExpr& a, const GroupExpr& b) {
    GroupKind ka = a.kind(), kb = b.kind();
    if (ka == GroupKind::Trivial || kb == GroupKind::Trivial || ka == GroupKind::RankOne ||
        kb == GroupKind::RankOne)
        return ok(GroupExpr::trivial(), "tor-flat");
    if (ka > kb) return prim_tor(b, a);  // symmetric
    if (ka == GroupKind::Cyclic) {
        if (kb == GroupKind::Cyclic)
            return a.prime() == b.prime()
                       ? ok(GroupExpr::cyclic(a.prime(), std::min(a.exponent(), b.exponent())),
                            "tor-cyc-cyc")
                       : ok(GroupExpr::trivial(), "tor-cyc-cyc");
        return a.prime() == b.prime() ? ok(a, "tor-cyc-pru") : ok(GroupExpr::trivial(), "tor-cyc-pru");
    }
    // Prufer (x) Prufer: the p-primary torsion of Z(q^inf)
    return a.prime() == b.prime() ? ok(a, "tor-pru-pru") : ok(GroupExpr::trivial(), "tor-pru-pru");
}

PrimOut prim_ext(const GroupExpr& a, const GroupExpr& b) {
    GroupKind ka = a.kind(), kb = b.kind();
    if (ka == GroupKind::Trivial || kb == GroupKind::Trivial)
        return ok(GroupExpr::trivial(), "ext-zero");
    // divisible targets are injective
    if (kb == GroupKind::Prufer) return ok(GroupExpr::trivial(), "ext-inj");
    if (kb == GroupKind::RankOne && b.baer_type().is_all_inf())
        return ok(GroupExpr::trivial(), "ext-inj");
    if (ka == GroupKind::Cyclic) {
        if (kb == GroupKind::Cyclic)
            return a.prime() == b.prime()
                       ? ok(GroupExpr::cyclic(a.prime(), std::min(a.exponent(), b.exponent())),
                            "ext-cyc-cyc")
                       : ok(GroupExpr::trivial(), "ext-cyc-cyc");
        // rank-one target: S/p^a S
        return b.baer_type().value_at(a.prime()).is_inf() ? ok(GroupExpr::trivial(), "ext-cyc-rank")
                                                          : ok(a, "ext-cyc-rank");
    }
    if (ka == GroupKind::Prufer) {
        if (kb == GroupKind::Cyclic)
            return a.prime() == b.prime() ? ok(b, "ext-pru-cyc") : ok(GroupExpr::trivial(), "ext-pru-cyc");
        const BaerType& u = b.baer_type();
        if (u.is_zero()) return ok(GroupExpr::padic(a.prime()), "ext-pru-int");
        if (u.value_at(a.prime()).is_inf()) return ok(GroupExpr::trivial(), "ext-pru-rank");
        return unsupported("ext(" + a.to_string() + ", " + b.to_string() +
                           ") is a lim^1 with no closed form in the rule table");
    }
    // rank-one source
    const BaerType& t = a.baer_type();
    if (kb == GroupKind::Cyclic) return ok(GroupExpr::trivial(), "ext-rank-cyc");
    const BaerType& u = b.baer_type();
    if (u.is_zero()) return ok(ext_rank_int(t), "ext-rank-int");
    if (ext_rank_rank_zero(t, u)) return ok(GroupExpr::trivial(), "ext-rank-rank");
    return unsupported("ext(" + a.to_string() + ", " + b.to_string() +
                       ") is a nonvanishing lim^1 outside the rule table");
}

PrimOut prim(BifunctorKind k, const GroupExpr& a, const GroupExpr& b) {
    switch (k) {
        case BifunctorKind::Hom: return prim_hom(a, b);
        case BifunctorKind::Tensor: return prim_tensor(a, b);
        case BifunctorKind::Tor: return prim_tor(a, b);
        case BifunctorKind::Ext: return prim_ext(a, b);
    }
    return unsupported("unknown bifunctor");
}

}  // namespace

BifValue bifunctor(BifunctorKind k, const GroupExpr& a_in, const GroupExpr& b_in) {
    if (a_in.is_extended() || b_in.is_extended())
        throw UnsupportedConstructor(std::string(bifunctor_name(k)) +
                                     ": extended constructors are not valid inputs");
    if (b_in.kind() == GroupKind::FreeProduct)
        throw UnsupportedConstructor(std::string(bifunctor_name(k)) +
                                     ": second argument must be abelian");
    GroupExpr a = abelianize(a_in);  // hom out of a free product factors through it
    GroupExpr b = normalize(b_in);

    BifValue out;
    std::vector<GroupExpr> parts;
    std::vector<std::string> rules;
    for (const GroupExpr& sa : a.summands()) {
        for (const GroupExpr& sb : b.summands()) {
            PrimOut r = prim(k, as_rank_one_form(sa), as_rank_one_form(sb));
            if (!r.val.has_value()) {
                out.unsupported_reason = r.why;
                return out;
            }
            parts.push_back(std::move(*r.val));
            if (std::find(rules.begin(), rules.end(), r.rule) == rules.end())
                rules.emplace_back(r.rule);
        }
    }
    out.value = normalize(GroupExpr::sum(std::move(parts)));
    out.rules = std::move(rules);
    return out;
}

namespace {

std::vector<RuleInfo> build_rules() {
    auto V = [](const char* id, const char* kind, const char* l, const char* r, const char* res,
                const char* prov) { return RuleInfo{id, kind, l, r, res, true, prov}; };
    auto N = [](const char* id, const char* kind, const char* l, const char* r, const char* res,
                const char* prov) { return RuleInfo{id, kind, l, r, res, false, prov}; };
    // S(t) denotes the rank-one group of type t; Z is its t = 0 instance.
    // p, q are distinct primes; a, b positive exponents; k_p reads off t.
    return {
        V("hom-zero", "hom", "0", "A", "0", "trivial group"),
        V("hom-cyc-cyc", "hom", "Z/p^a", "Z/q^b", "[p=q] Z/p^min(a,b); [p!=q] 0",
          "generator order gcd; oracle-swept"),
        V("hom-cyc-pru", "hom", "Z/p^a", "Z(q^inf)", "[p=q] Z/p^a; [p!=q] 0",
          "image lands in the p^a-torsion Z/p^a of the Prufer group"),
        V("hom-cyc-tf", "hom", "Z/p^a", "S(u)", "0", "torsion into torsion-free"),
        N("hom-pru-pru", "hom", "Z(p^inf)", "Z(q^inf)", "[p=q] Zhat(p); [p!=q] 0",
          "endomorphisms of the Prufer group are the p-adic integers"),
        V("hom-pru-reduced", "hom", "Z(p^inf)", "Z, Z/q^b, S(u)", "0",
          "divisible image in a reduced or torsion-free group vanishes"),
        V("hom-rank-cyc", "hom", "S(t)", "Z/q^b", "[k_q<inf] Z/q^b; [k_q=inf] 0",
          "hom(S,Z/q^b)=hom(S/q^b S,Z/q^b); S/q^b S is Z/q^b unless S is q-divisible"),
        N("hom-rank-pru", "hom", "S(t)", "Z(q^inf)", "[k_q=inf] Qhat(q); [k_q<inf] Z(q^inf)",
          "inverse limit of the telescope tower on Z(q^inf); hom(Z[1/q],Z(q^inf))=Qhat(q)"),
        N("hom-rank-rank", "hom", "S(t)", "S(u)",
          "[t<=u up to finitely many finite gaps] S(max(u-t,0)); else 0",
          "hom group is {x in Q : x S(t) <= S(u)}; types subtract"),
        V("tensor-zero", "tensor", "0", "A", "0", "trivial group"),
        V("tensor-cyc-cyc", "tensor", "Z/p^a", "Z/q^b", "[p=q] Z/p^min(a,b); [p!=q] 0",
          "Z/m (x) Z/n = Z/gcd(m,n); oracle-swept"),
        V("tensor-cyc-pru", "tensor", "Z/p^a", "Z(q^inf)", "0",
          "tensor with a divisible torsion group kills bounded torsion"),
        V("tensor-cyc-rank", "tensor", "Z/p^a", "S(u)", "[k_p<inf] Z/p^a; [k_p=inf] 0",
          "Z/p^a (x) S = S/p^a S"),
        N("tensor-pru-pru", "tensor", "Z(p^inf)", "Z(q^inf)", "0",
          "divisible torsion (x) torsion vanishes"),
        N("tensor-pru-rank", "tensor", "Z(p^inf)", "S(u)", "[k_p<inf] Z(p^inf); [k_p=inf] 0",
          "colim of S/p^j S along multiplication by p"),
        N("tensor-rank-rank", "tensor", "S(t)", "S(u)", "S(t+u)", "types add pointwise"),
        V("tor-flat", "tor", "S(t), 0", "A", "0", "torsion-free groups are flat"),
        V("tor-cyc-cyc", "tor", "Z/p^a", "Z/q^b", "[p=q] Z/p^min(a,b); [p!=q] 0",
          "Tor(Z/m,Z/n)=Z/gcd; oracle-swept"),
        V("tor-cyc-pru", "tor", "Z/p^a", "Z(q^inf)", "[p=q] Z/p^a; [p!=q] 0",
          "Tor(Z/p^a,-) is the p^a-torsion subgroup"),
        N("tor-pru-pru", "tor", "Z(p^inf)", "Z(q^inf)", "[p=q] Z(p^inf); [p!=q] 0",
          "Tor(Z(p^inf),-) is the p-primary torsion"),
        V("ext-zero", "ext", "0, Z", "A", "0", "free or trivial first argument"),
        V("ext-inj", "ext", "A", "Z(q^inf), Q", "0", "divisible groups are injective"),
        V("ext-cyc-cyc", "ext", "Z/p^a", "Z/q^b", "[p=q] Z/p^min(a,b); [p!=q] 0",
          "from 0 -> Z -> Z -> Z/p^a -> 0; oracle-swept"),
        V("ext-cyc-rank", "ext", "Z/p^a", "S(u)", "[k_u(p)<inf] Z/p^a; [k_u(p)=inf] 0",
          "ext(Z/p^a,S) = S/p^a S from the cyclic resolution"),
        N("ext-pru-int", "ext", "Z(p^inf)", "Z", "Zhat(p)",
          "ext(Z(p^inf),A) is the p-completion of A for reduced A; here Zhat(p)"),
        N("ext-pru-cyc", "ext", "Z(p^inf)", "Z/q^b", "[p=q] Z/p^b; [p!=q] 0",
          "p-completion of a bounded group is itself"),
        N("ext-pru-rank", "ext", "Z(p^inf)", "S(u)", "[k_p=inf] 0; else unsupported",
          "vanishes when p acts invertibly on S; otherwise an uncomputed lim^1"),
        N("ext-rank-cyc", "ext", "S(t)", "Z/q^b", "0",
          "the telescope tower on a bounded group is Mittag-Leffler"),
        N("ext-rank-int", "ext", "S(t)", "Z",
          "0 when sum k_p < inf; else (prod over k_p>0 of Zhat(p) / Z/p^(k_p)) / Z",
          "connecting map of 0 -> Z -> S -> coker -> 0; ext(coker,Z) is the product"),
        N("ext-rank-rank", "ext", "S(t)", "S(u)",
          "0 when the tower is Mittag-Leffler (inf entries persist and only finitely many"
          " positive finite gaps); else unsupported",
          "lim^1 of the telescope tower on S(u)"),
    };
}

}  // namespace

const std::vector<RuleInfo>& bifunctor_rules() {
    static const std::vector<RuleInfo> rules = build_rules();
    return rules;
}

const RuleInfo* find_rule(const std::string& id) {
    for (const RuleInfo& r : bifunctor_rules())
        if (r.id == id) return &r;
    return nullptr;
}

std::string bifunctor_rules_text() {
    std::ostringstream os;
    os << "# Bifunctor rule table: primitive pairs of the group fragment.\n";
    os << "# Format: id | kind | lhs | rhs | result | status | provenance\n";
    os << "# S(t) is the rank-one group of Baer type t (Z is the t = 0 instance);\n";
    os << "# p, q are distinct primes, a, b positive exponents, k_p the entry of t at p.\n";
    os << "# status 'oracle' rules are swept against the finite brute-force engine;\n";
    os << "# status 'note' rules involve infinite groups and ship a derivation note.\n";
    for (const RuleInfo& r : bifunctor_rules()) {
        os << r.id << " | " << r.kind << " | " << r.lhs << " | " << r.rhs << " | " << r.result
           << " | " << (r.oracle_verified ? "oracle" : "note") << " | " << r.provenance << "\n";
    }
    return os.str();
}

}  // namespace mcell

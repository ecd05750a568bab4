#include "mcell/verdict.hpp"

#include <stdexcept>

namespace mcell {

const char* answer_name(Answer a) {
    switch (a) {
        case Answer::Yes: return "Yes";
        case Answer::No: return "No";
        case Answer::Unknown: return "Unknown";
    }
    return "?";
}

Verdict& Verdict::cite(const std::string& rule_id) {
    const Citation* c = find_citation(rule_id);
    if (!c) throw std::logic_error("unknown citation id: " + rule_id);
    for (auto& e : trail)
        if (e.rule == rule_id) return *this;
    trail.push_back({c->id, c->label, c->statement});
    return *this;
}

Verdict& Verdict::witness(std::string name, std::string value) {
    witnesses.emplace_back(std::move(name), std::move(value));
    return *this;
}

Verdict& Verdict::merge_trail(const Verdict& other) {
    for (auto& e : other.trail) {
        bool dup = false;
        for (auto& own : trail)
            if (own.rule == e.rule) dup = true;
        if (!dup) trail.push_back(e);
    }
    for (auto& w : other.witnesses) witnesses.push_back(w);
    return *this;
}

Verdict Verdict::make(Answer a, const std::string& rule_id) {
    Verdict v;
    v.answer = a;
    v.cite(rule_id);
    return v;
}

const std::vector<Citation>& citation_registry() {
    static const std::vector<Citation> reg = {
        {"notation-coefficients", "Notation 1.3",
         "J collects the primes where the abelianization is uniquely divisible; for torsion "
         "abelianizations H is the sum of Z/p over the complement J' and R = Z_(J), otherwise "
         "H = Z[J^-1] and R is the sum of Z/p over J"},
        {"hr-acyclicity", "Notation 1.3",
         "reduced R-homology vanishes iff each homology group is uniquely p-divisible for every "
         "p in J (R a sum of Z/p) or J'-torsion (R = Z_(J)); the zero ring accepts everything"},
        {"thm-general-description", "Theorem 1.5",
         "a space is M-cellular iff its fundamental group is G-cellular, it is HR-acyclic, and "
         "the universal extension group E is G_ab-radical"},
        {"acyclicity-necessary", "Theorem 1.5(2)",
         "every M-cellular space is HR-acyclic"},
        {"radical-definition", "Definition of T_G (Bousfield)",
         "T_G N is the smallest subgroup with Hom(G, N/T_G N) = 0; computed by iterated image "
         "sums, summand-wise on the fragment"},
        {"def-quasi-radical", "Definition 1.6",
         "an H-radical abelian group A is quasi G-radical when the universal extension of the "
         "Ext(G_ab,A)-indexed sum of G_ab by A is G_ab-radical"},
        {"rem-strict-inclusion", "Remark 1.7",
         "G_ab-radical groups are quasi G-radical; for the Prufer group Z(p^inf) the group Z/p "
         "is quasi radical but not radical"},
        {"thm-h2-radical", "Theorem 1.8",
         "when H_2 X is G_ab-radical, the space is M-cellular iff its fundamental group is "
         "G-cellular and it is HR-acyclic"},
        {"prop-em2-criterion", "Proposition 1.8",
         "an HR-acyclic K(A,2) is M-cellular iff A is quasi G-radical"},
        {"cor-pi2-quasi", "Corollary 1.9",
         "a simply connected M-cellular space has quasi G-radical pi_2 and J'-torsion "
         "(resp. uniquely J-divisible) homotopy"},
        {"cor-pi2-radical", "Corollary 1.10",
         "G_ab-radical pi_2 plus a G-cellular fundamental group and HR-acyclicity force "
         "M-cellularity"},
        {"prop-pi2-quasi", "Proposition 1.11",
         "quasi G-radical pi_2 plus a G-cellular fundamental group and HR-acyclicity force "
         "M-cellularity"},
        {"thm-varadarajan", "Theorem 2.1 (Varadarajan)",
         "a Moore space M(G,1) exists iff G/T has rank at most one, every primary part T(p) is "
         "divisible or divisible plus one cyclic, and T(p) tensor G/T vanishes"},
        {"telescope-construction", "Telescope construction (2.2)",
         "the circle telescope along the prime-power multiplier sequence realizes a "
         "two-dimensional M(S,1) for every rank-one S"},
        {"cofiber-construction", "Cofiber construction (2.3)",
         "collapsing the unit circle of M(S,1) realizes a two-dimensional Moore space for the "
         "cokernel of Z in S"},
        {"classical-cyclic", "Classical Moore space",
         "the homotopy cofiber of the degree-n self-map of the circle is M(Z/n,1)"},
        {"question-moore-list", "Question 2.4",
         "whether two-dimensional Moore spaces exist with abelian fundamental group outside the "
         "constructed classes is open; the engine answers NoRecipe"},
        {"presentation-injectivity", "Remark after Question 2.4",
         "a Moore space presentation must have injective abelianized boundary, certified by full "
         "row rank of the Smith normal form"},
        {"thm-rank-one-sc", "Theorem 2.5",
         "for M(S,1) with S a subgroup of Q, a simply connected space is M-cellular iff it is "
         "HR-acyclic"},
        {"lemma-mod-n-cellular", "Lemma 2.3",
         "M(Z/n,1) is M(S,1)-cellular when every prime of n avoids J, via the multiplication-"
         "by-n cokernel"},
        {"ex-ext-tail-one", "Example 2.6",
         "for the tail-one type S, Ext(S,Z) is (prod over p of Z/p)/Z and Z is quasi S-radical: "
         "the colimit of all extensions of S by Z is S-radical"},
        {"ex-cw-sphere", "Example 2.7",
         "for G = Q the cellularization of the 2-sphere is a two-stage space whose pi_1 and "
         "pi_2 are both (prod over p of Zhat(p))/Z"},
        {"ex-cw-prufer", "Example 2.8",
         "for G = Z[1/p] the cellularization of K(Z(p^inf),1) is K(Qhat(p),1)"},
        {"thm-subring", "Theorem 2.8",
         "for M(Z[J^-1],1), a space is M-cellular iff its fundamental group is Z[J^-1]-cellular "
         "and it is HR-acyclic"},
        {"prop-completion-fiber", "Proposition 2.9",
         "for subring G and nilpotent X with G-radical fundamental group, CW_M X is the fiber of "
         "X -> prod over J of the p-completions of X"},
        {"thm-bounded-torsion", "Theorem 2.10",
         "for torsion G = sum of Z/p^{k_p} with no divisible summand, X is M-cellular iff pi_1 X "
         "is generated by elements of order p^l (l <= k_p) and X is HZ_(J)-acyclic"},
        {"thm-prufer-sc", "Theorem 2.12",
         "for M(Z(p^inf),1), a simply connected space is M-cellular iff it is HZ[1/p]-acyclic"},
        {"lemma-summand-cellular", "Lemma 2.13",
         "when M(A+B,1) is two-dimensional, both M(A,1) and M(B,1) are M(A+B,1)-cellular"},
        {"thm-torsion-sc", "Theorem 2.14",
         "for torsion abelian G, a simply connected space is M-cellular iff it is "
         "HZ_(J)-acyclic"},
        {"thm-cw-em2", "Theorem 3.1",
         "for HR-acyclic K(A,2), CW_M K(A,2) = K(ker phi,2) x K(coker phi,1) with phi the "
         "composite A -> E -> E/T_G E through the universal extension"},
        {"thm-counterexample", "Theorem 3.2",
         "for M = M(Z[1/p],1) v M(Z/p,1) the ring R is zero and K(Z,2) is HR-acyclic with "
         "Z[1/p]*Z/p-cellular fundamental group, yet not M-cellular: its cellularization is "
         "K(Zhat(p)/Z x Z/p, 1)"},
        {"question-naive-abelian", "Question 3.3",
         "whether the naive characterization holds for abelian fundamental groups (already for "
         "Z(p^inf)) is open; the engine answers Unknown in that range"},
        {"wedge-construction", "Wedge of Moore spaces (3.2)",
         "free products are realized by wedges of the factor Moore spaces; a construction-level "
         "rule, not an instance of the abelian existence theorem"},
        {"point-cellular", "Empty colimit",
         "the point is the empty pointed homotopy colimit, hence M-cellular for every M"},
        {"cw-idempotence", "CW_M idempotence",
         "cellularization outputs are M-cellular by construction and CW_M fixes M-cellular "
         "spaces"},
        {"g-cellular-conservative", "G-cellular groups (conservative rule)",
         "a group is certified G-cellular when it is trivial, G itself, a finite sum of copies "
         "of G, or a recorded cellularization output; no decision procedure exists in general"},
        {"finite-oracle", "Brute-force oracle",
         "exhaustive computation on finite abelian groups: enumerated homomorphism images, "
         "kernels, quotients, and Smith normal forms"},
    };
    return reg;
}

const Citation* find_citation(const std::string& id) {
    for (const Citation& c : citation_registry())
        if (id == c.id) return &c;
    return nullptr;
}

}  // namespace mcell

#include "doctest.h"

#include <random>

#include "mcell/cellularity.hpp"
#include "mcell/errors.hpp"
#include "mcell/parse.hpp"

using namespace mcell;

namespace {

GroupExpr P(const std::string& s) { return parse_group(s); }

MooreModel model(const std::string& g) {
    MooreModelResult r = moore_model(P(g));
    REQUIRE(r.constructible());
    return *r.model;
}

SpaceDesc S(const std::string& s) { return parse_space(s); }

bool trail_cites(const Verdict& v, const std::string& label) {
    for (auto& e : v.trail)
        if (e.citation.find(label) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("the point is cellular for every model") {
    for (auto& g : {"Z", "Q", "Z/4", "Z(2^inf)", "Z[1/3]", "Z[1/2] * Z/2"}) {
        Verdict v = is_cellular(model(g), S("pt"));
        CHECK(v.yes());
        CHECK(!v.trail.empty());
    }
}

TEST_CASE("counterexample triple: R = 0, yet K(Z,2) is not cellular") {
    MooreModel m = model("Z[1/2] * Z/2");
    CoeffSystem c = derive_coeffs(m.group);
    CHECK(c.r.is_zero());
    CHECK(space_hr_acyclic(S("K(Z,2)"), c).yes());

    Verdict v = is_cellular(m, S("K(Z,2)"));
    CHECK(v.no());
    CHECK(trail_cites(v, "Theorem 3.2"));

    // the same wedge for any prime
    CHECK(is_cellular(model("Z[1/5] * Z/5"), S("K(Z,2)")).no());
}

TEST_CASE("simply connected rank-one rule: S^2 is cellular for the tail-one model") {
    Verdict v = is_cellular(model("type(1)"), S("S^2"));
    CHECK(v.yes());
    CHECK(trail_cites(v, "Theorem 2.5"));
    // but not for Q, whose coefficient ring sees every prime
    CHECK(is_cellular(model("Q"), S("S^2")).no());
    // and not for Z[1/2] (Z homology is not uniquely 2-divisible)
    CHECK(is_cellular(model("Z[1/2]"), S("S^2")).no());
}

TEST_CASE("bounded-order generation witnesses") {
    Verdict v = is_cellular(model("Z/3"), S("space{pi1=Z/9; H=[Z/9,Z/3]; sc=false; nilp=false}"));
    CHECK(v.no());
    CHECK(trail_cites(v, "Theorem 2.10"));
    bool has_pi1_witness = false;
    for (auto& [k, val] : v.witnesses)
        if (k == "pi1") has_pi1_witness = true;
    CHECK(has_pi1_witness);

    // same group generated in bounded orders: acyclicity decides
    Verdict ok = is_cellular(model("Z/9"), S("space{pi1=Z/9; H=[Z/9,Z/3]; sc=false; nilp=false}"));
    CHECK(ok.yes());
    // non-torsion pi1 fails immediately
    CHECK(is_cellular(model("Z/3"), S("K(Z,1)")).no());
}

TEST_CASE("torsion simply connected rule") {
    // M(Z/p^k, 2) is cellular for the Prufer model (2.12 via 2.14)
    Verdict v = is_cellular(model("Z(2^inf)"), S("M(Z/4,2)"));
    CHECK(v.yes());
    CHECK(trail_cites(v, "Theorem 2.14"));
    CHECK(trail_cites(v, "Theorem 2.12"));
    CHECK(is_cellular(model("Z(2^inf)"), S("M(Z/3,2)")).no());
    CHECK(is_cellular(model("Z(2^inf)"), S("S^2")).no());
    CHECK(is_cellular(model("Z/6"), S("M(Z/2,2)")).yes());
}

TEST_CASE("K(A,2) decides through quasi-radicality") {
    // K(Q,2) for the Prufer model: Q is not even H-radical -> undecided
    Verdict undecided = is_cellular(model("Z[1/2] * Z/2"), S("K(Z + Z/3,2)"));
    CHECK(undecided.unknown());

    // K(Z/p,2) over the Prufer model: quasi-radical (strict inclusion), cellular
    Verdict yes = is_cellular(model("Z(3^inf)"), S("K(Z/3,2)"));
    CHECK(yes.yes());
}

TEST_CASE("acyclicity is necessary") {
    // K(Z(2^inf),1) is not HR-acyclic for the Z[1/2] model
    Verdict v = is_cellular(model("Z[1/2]"), S("K(Z(2^inf),1)"));
    CHECK(v.no());
    CHECK(trail_cites(v, "Theorem 2.8"));
}

TEST_CASE("certified cellularization outputs are cellular") {
    SpaceDesc k_qhat2 = SpaceDesc::em(GroupExpr::padic_field(2), 1);
    CHECK(is_cellular(model("Z[1/2]"), k_qhat2).yes());
    MooreModel q = model("Q");
    CwResult two_stage = cw(q, S("S^2"));
    REQUIRE(two_stage.space.has_value());
    CHECK(is_cellular(q, *two_stage.space).yes());
}

TEST_CASE("non-fragment data is rejected outside the certified table") {
    SpaceDesc k_qhat2 = SpaceDesc::em(GroupExpr::padic_field(2), 1);
    CHECK_THROWS_AS(is_cellular(model("Z/2"), k_qhat2), UnsupportedConstructor);
    // extended forms never parse as cellularity inputs
    CHECK_THROWS_AS(S("K(Qhat(2),1)"), ParseError);
}

TEST_CASE("cw: cellular inputs are fixed") {
    MooreModel m = model("Z(2^inf)");
    CwResult r = cw(m, S("M(Z/4,2)"));
    REQUIRE(r.space.has_value());
    CHECK(*r.space == S("M(Z/4,2)"));
    bool cites_idem = false;
    for (auto& e : r.context.trail)
        if (e.rule == "cw-idempotence") cites_idem = true;
    CHECK(cites_idem);
}

TEST_CASE("cw golden: K(Z(p^inf),1) cellularizes to K(Qhat(p),1) under Z[1/p]") {
    CwResult r = cw(model("Z[1/2]"), S("K(Z(2^inf),1)"));
    REQUIRE(r.space.has_value());
    CHECK(*r.space == SpaceDesc::em(GroupExpr::padic_field(2), 1));
    CHECK(r.space->to_string() == "K(Qhat(2),1)");
    CHECK(trail_cites(r.context, "Example 2.8"));

    CwResult r5 = cw(model("Z[1/5]"), S("K(Z(5^inf),1)"));
    REQUIRE(r5.space.has_value());
    CHECK(r5.space->to_string() == "K(Qhat(5),1)");
}

TEST_CASE("cw golden: the sphere under the rationals model") {
    CwResult r = cw(model("Q"), S("S^2"));
    REQUIRE(r.space.has_value());
    REQUIRE(r.space->kind() == SpaceKind::Generic);
    GroupExpr pi1 = r.space->pi1_field();
    REQUIRE(r.space->pi2_field().has_value());
    CHECK(pi1 == *r.space->pi2_field());
    CHECK(pi1.to_string() == "(Prod_{p in P} Zhat(p))/Z");
    CHECK(trail_cites(r.context, "Example 2.7"));
}

TEST_CASE("cw golden: the counterexample cellularization") {
    CwResult r = cw(model("Z[1/2] * Z/2"), S("K(Z,2)"));
    REQUIRE(r.space.has_value());
    CHECK(r.space->to_string() == "K(Z/2 + Zhat(2)/Z,1)");
    CHECK(trail_cites(r.context, "Theorem 3.1"));
    CHECK(trail_cites(r.context, "Theorem 3.2"));
    // and that output is certified cellular
    CHECK(is_cellular(model("Z[1/2] * Z/2"), *r.space).yes());
}

TEST_CASE("cw: generic completion fiber and undecided cases") {
    // nilpotent space with radical fundamental group, no golden evaluation
    CwResult fib = cw(model("Z[1/2]"), S("K(Z(2^inf),2)"));
    REQUIRE(fib.space.has_value());
    CHECK(fib.space->kind() == SpaceKind::FormalFiber);
    CHECK(fib.space->to_string() ==
          "Fib(K(Z(2^inf),2) -> Prod_{p in {2}} hat(K(Z(2^inf),2))_p)");

    // K(A,2) with undecidable universal extension
    CwResult unk = cw(model("Z[1/2] * Z/2"), S("K(Z + Z/3,2)"));
    CHECK(!unk.space.has_value());
    bool noted = false;
    for (auto& [k, v] : unk.context.witnesses)
        if (k == "undecided") noted = true;
    CHECK(noted);

    // non-acyclic K(A,2) is a precondition error
    CHECK_THROWS_AS(cw(model("Z/3"), S("K(Q,2)")), InputError);
}

TEST_CASE("moore-on-moore rules") {
    // multiplication-cokernel rule: primes of n outside J
    Verdict v23 = moore_on_moore(model("Z[1/2]"), P("Z/3"));
    CHECK(v23.yes());
    CHECK(trail_cites(v23, "Lemma 2.3"));
    CHECK(moore_on_moore(model("type(1)"), P("Z/6")).yes());

    // direct summand rule
    Verdict vsum = moore_on_moore(model("Z(2^inf) + Z/9"), P("Z(2^inf)"));
    CHECK(vsum.yes());
    CHECK(trail_cites(vsum, "Lemma 2.13"));

    // fallback to the cascade: M(Z/4,1) is not M(Z/2,1)-cellular
    Verdict vno = moore_on_moore(model("Z/2"), P("Z/4"));
    CHECK(vno.no());
    CHECK(trail_cites(vno, "Theorem 2.10"));

    // nonexistent Moore space for the target
    CHECK_THROWS_AS(moore_on_moore(model("Z/2"), P("Z + Z/2")), InputError);

    // a Prufer target over the matching rank-one model: cokernel of the unit
    CHECK(moore_on_moore(model("Z[1/2]"), P("Z/2")).no());
}

TEST_CASE("no rule ever contradicts another (randomized)") {
    std::mt19937_64 rng(2025);
    std::vector<std::string> models = {"Z", "Q", "Z/4", "Z/6", "Z(2^inf)", "Z[1/2]", "type(1)",
                                       "Z[1/2] * Z/2", "Z(2^inf) + Z/9", "Z[1/2,3]"};
    std::vector<std::string> groups = {"0", "Z", "Z/2", "Z/4", "Z/3", "Z/6", "Z(2^inf)", "Q",
                                       "Z[1/2]", "Z + Z/3"};
    auto random_space = [&]() -> SpaceDesc {
        switch (rng() % 5) {
            case 0: return SpaceDesc::sphere(1 + rng() % 3);
            case 1: return SpaceDesc::em(P(groups[rng() % groups.size()]), 1 + rng() % 3);
            case 2: {
                GroupExpr g = P(groups[rng() % groups.size()]);
                Verdict e = exists_moore(g);
                if (!e.yes()) return SpaceDesc::point();
                return SpaceDesc::moore(g, 1 + rng() % 3);
            }
            case 3: {
                GroupExpr pi1 = P(groups[rng() % groups.size()]);
                std::vector<GroupExpr> homology = {abelianize(pi1)};
                for (unsigned i = 0, n = rng() % 3; i < n; ++i)
                    homology.push_back(P(groups[rng() % groups.size()]));
                std::optional<GroupExpr> pi2;
                if (rng() % 2 && homology.size() >= 2) pi2 = homology[1];
                return SpaceDesc::generic(pi1, normalize(pi1) == GroupExpr::trivial() && rng() % 2,
                                          rng() % 2, homology, pi2);
            }
            default: return SpaceDesc::point();
        }
    };
    int checked = 0;
    for (int i = 0; i < 220; ++i) {
        MooreModel m = model(models[rng() % models.size()]);
        SpaceDesc x = random_space();
        auto outcomes = cellular_cascade_all(m, x);
        bool saw_yes = false, saw_no = false;
        for (auto& o : outcomes) {
            if (o.verdict.yes()) saw_yes = true;
            if (o.verdict.no()) saw_no = true;
        }
        CHECK(!(saw_yes && saw_no));
        ++checked;
    }
    CHECK(checked == 220);
}

TEST_CASE("rule pairs agree where both apply") {
    // subring G and simply connected x: the subring rule and the rank-one rule
    for (auto& gs : {"Z[1/2]", "Q", "Z[1/2,3]", "Z"}) {
        for (auto& xs : {"S^2", "K(Q,2)", "M(Z/3,2)", "K(Z(2^inf),2)"}) {
            auto outcomes = cellular_cascade_all(model(gs), S(xs));
            std::optional<Answer> r1, r3;
            for (auto& o : outcomes) {
                if (o.rule == "subring-iff") r1 = o.verdict.answer;
                if (o.rule == "rank-one-sc-iff") r3 = o.verdict.answer;
            }
            REQUIRE(r1.has_value());
            REQUIRE(r3.has_value());
            CHECK(*r1 == *r3);
        }
    }
    // pure cyclic torsion G and simply connected x: bounded-torsion vs torsion-sc
    for (auto& gs : {"Z/4", "Z/6", "Z/9"}) {
        for (auto& xs : {"S^2", "M(Z/2,2)", "M(Z/3,2)", "K(Z/8,3)"}) {
            auto outcomes = cellular_cascade_all(model(gs), S(xs));
            std::optional<Answer> r2, r4;
            for (auto& o : outcomes) {
                if (o.rule == "bounded-torsion-iff") r2 = o.verdict.answer;
                if (o.rule == "torsion-sc-iff") r4 = o.verdict.answer;
            }
            REQUIRE(r2.has_value());
            REQUIRE(r4.has_value());
            CHECK(*r2 == *r4);
        }
    }
}

TEST_CASE("every yes/no verdict carries a citation trail") {
    std::vector<std::pair<std::string, std::string>> cases = {
        {"Z[1/2] * Z/2", "K(Z,2)"}, {"type(1)", "S^2"},    {"Z/3", "K(Z,1)"},
        {"Q", "S^2"},               {"Z(2^inf)", "M(Z/4,2)"}, {"Z/2", "pt"},
    };
    for (auto& [g, x] : cases) {
        Verdict v = is_cellular(model(g), S(x));
        if (!v.unknown()) {
            CHECK(!v.trail.empty());
            for (auto& e : v.trail) CHECK(find_citation(e.rule) != nullptr);
        }
    }
}

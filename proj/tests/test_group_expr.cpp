#include "doctest.h"

#include <random>

#include "mcell/classify.hpp"
#include "mcell/errors.hpp"
#include "mcell/parse.hpp"

using namespace mcell;

namespace {

GroupExpr P(const std::string& s) { return parse_group(s); }

// Random abelian fragment expression over small primes.
GroupExpr random_fragment(std::mt19937_64& rng, int max_summands = 4) {
    std::vector<Prime> primes = {2, 3, 5, 7};
    int n = 1 + int(rng() % max_summands);
    std::vector<GroupExpr> parts;
    for (int i = 0; i < n; ++i) {
        switch (rng() % 5) {
            case 0: parts.push_back(GroupExpr::trivial()); break;
            case 1: parts.push_back(GroupExpr::integers()); break;
            case 2:
                parts.push_back(GroupExpr::cyclic(primes[rng() % 4], 1 + rng() % 3));
                break;
            case 3: parts.push_back(GroupExpr::prufer(primes[rng() % 4])); break;
            default: {
                std::map<Prime, ExtNat> ex;
                for (Prime p : primes)
                    if (rng() % 2) ex.emplace(p, rng() % 3 ? ExtNat::fin(rng() % 4) : ExtNat::inf());
                ExtNat tail = rng() % 4 ? ExtNat::fin(rng() % 2) : ExtNat::inf();
                parts.push_back(GroupExpr::rank_one(BaerType(tail, std::move(ex))));
            }
        }
    }
    return GroupExpr::sum(std::move(parts));
}

}  // namespace

TEST_CASE("parse basic forms") {
    CHECK(P("0").kind() == GroupKind::Trivial);
    CHECK(P("Z").kind() == GroupKind::Int);
    CHECK(P("Z/8") == GroupExpr::cyclic(2, 3));
    CHECK(P("Z(5^inf)") == GroupExpr::prufer(5));
    CHECK(P("Q") == GroupExpr::rank_one(BaerType::all_inf()));
    CHECK(P("Z[1/2,3]") == GroupExpr::rank_one(BaerType::inverted({2, 3})));
    CHECK(P("type(1)") == GroupExpr::rank_one(BaerType(ExtNat::fin(1))));
    CHECK(P(" Z / 4 + Z/2 ") ==
          GroupExpr::sum({GroupExpr::cyclic(2, 2), GroupExpr::cyclic(2, 1)}));
}

TEST_CASE("parse transcription examples") {
    GroupExpr g = P("Z/4 + Z/2");
    REQUIRE(g.kind() == GroupKind::Sum);
    CHECK(g.children()[0] == GroupExpr::cyclic(2, 2));
    CHECK(g.children()[1] == GroupExpr::cyclic(2, 1));

    GroupExpr fp = P("Z[1/3] * Z/3");
    REQUIRE(fp.kind() == GroupKind::FreeProduct);
    CHECK(fp.children()[0] == GroupExpr::rank_one(BaerType::inverted({3})));
    CHECK(fp.children()[1] == GroupExpr::cyclic(3, 1));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(P("Z/0"), ParseError);
    CHECK_THROWS_AS(P("Z/"), ParseError);
    CHECK_THROWS_AS(P("Z(4^inf)"), ParseError);   // 4 is not prime
    CHECK_THROWS_AS(P("Z[1/6]"), ParseError);
    CHECK_THROWS_AS(P("Zhat(2)"), ParseError);    // extended forms rejected on input
    CHECK_THROWS_AS(P("Z + "), ParseError);
    CHECK_THROWS_AS(P("(Z * Z/2) + Z"), ParseError);  // free product must be outermost
    CHECK_THROWS_AS(P(""), ParseError);
    try {
        P("Z/0");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("precedence: + binds tighter than *") {
    GroupExpr g = P("Z/2 + Z/3 * Z");
    REQUIRE(g.kind() == GroupKind::FreeProduct);
    CHECK(g.children()[0].kind() == GroupKind::Sum);
    CHECK(g.children()[1].kind() == GroupKind::Int);
}

TEST_CASE("normalize: primary decomposition, unit removal, zero type") {
    CHECK(normalize(P("Z/6")) == P("Z/2 + Z/3"));
    CHECK(normalize(P("Z/2 + Z/2 + 0")) == P("Z/2 + Z/2"));
    CHECK(normalize(GroupExpr::rank_one(BaerType::zero())) == GroupExpr::integers());
    CHECK(normalize(P("Z/12")) == normalize(P("Z/3 + Z/4")));
    // fixed total order: Z < Z/2 < Z/4 < Z/3 is false; sorted by (p, k)
    CHECK(normalize(P("Z/3 + Z + Z/4 + Z/2")).to_string() == "Z + Z/2 + Z/4 + Z/3");
}

TEST_CASE("print/parse round trip and normalize idempotence on random expressions") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        GroupExpr g = random_fragment(rng);
        GroupExpr n = normalize(g);
        CHECK(normalize(n) == n);                   // idempotent
        CHECK(parse_group(n.to_string()) == n);     // canonical text round trips
        GroupExpr raw = parse_group(g.to_string());
        CHECK(normalize(raw) == n);                 // printing loses nothing
    }
}

TEST_CASE("classify primitives") {
    auto r = classify(P("Z(3^inf)"));
    CHECK(r.is_torsion());
    CHECK(r.is_p_divisible(3));
    CHECK(!r.is_uniquely_p_divisible(3));
    CHECK(r.is_uniquely_p_divisible(5));
    CHECK(r.is_divisible());
    CHECK(r.exponent_at(3).is_inf());

    auto z = classify(P("Z"));
    CHECK(!z.is_torsion());
    CHECK(z.rank() == 1);
    CHECK(z.uniquely_divisible_set().empty());

    auto c = classify(P("Z/27"));
    CHECK(c.is_torsion());
    CHECK(!c.is_p_divisible(3));
    CHECK(c.is_uniquely_p_divisible(2));
    CHECK(c.is_uniquely_p_divisible(5));
    CHECK(c.exponent_at(3) == ExtNat::fin(3));

    auto q = classify(P("Q"));
    CHECK(q.is_divisible());
    CHECK(q.uniquely_divisible_set().is_all());
    CHECK(q.rank() == 1);
}

TEST_CASE("classify sums follow conjunction laws") {
    std::mt19937_64 rng(99);
    std::vector<Prime> primes = {2, 3, 5, 7, 11};
    for (int i = 0; i < 200; ++i) {
        GroupExpr a = random_fragment(rng, 2), b = random_fragment(rng, 2);
        GroupExpr s = normalize(GroupExpr::sum({a, b}));
        auto ra = classify(a), rb = classify(b), rs = classify(s);
        for (Prime p : primes) {
            CHECK(rs.is_uniquely_p_divisible(p) ==
                  (ra.is_uniquely_p_divisible(p) && rb.is_uniquely_p_divisible(p)));
            CHECK(rs.is_p_divisible(p) == (ra.is_p_divisible(p) && rb.is_p_divisible(p)));
        }
        CHECK(rs.is_torsion() == (ra.is_torsion() && rb.is_torsion()));
        CHECK(rs.rank() == ra.rank() + rb.rank());
    }
}

TEST_CASE("classify torsion subgroup and primary components") {
    auto r = classify(P("Z + Z/8 + Z/3 + Z(3^inf)"));
    CHECK(r.torsion_subgroup() == normalize(P("Z/8 + Z/3 + Z(3^inf)")));
    CHECK(r.primary_component(3) == normalize(P("Z/3 + Z(3^inf)")));
    CHECK(r.primary_component(2) == P("Z/8"));
    CHECK(r.primary_component(5) == GroupExpr::trivial());
    CHECK(r.rank() == 1);
    CHECK(r.cyclic_summands_at(3) == 1);
    CHECK(r.prufer_summands_at(3) == 1);
}

TEST_CASE("classify rejects nonabelian and extended input") {
    CHECK_THROWS_AS(classify(P("Z * Z/2")), UnsupportedConstructor);
    CHECK_THROWS_AS(classify(GroupExpr::padic(2)), UnsupportedConstructor);
}

TEST_CASE("abelianize") {
    CHECK(abelianize(P("Z[1/2] * Z/2")) == normalize(P("Z[1/2] + Z/2")));
    GroupExpr g = normalize(P("Z/4 + Z/3"));
    CHECK(abelianize(g) == g);
    CHECK(abelianize(P("(Z * Z/2) * Z/3")) == normalize(P("Z + Z/2 + Z/3")));
}

TEST_CASE("baer equivalence is a separate predicate") {
    BaerType a(ExtNat::fin(0), {{3, ExtNat::inf()}});
    BaerType b(ExtNat::fin(0), {{3, ExtNat::inf()}, {2, ExtNat::fin(1)}});
    CHECK(baer_equivalent(a, b));            // one finite difference
    CHECK(!baer_equivalent(a, BaerType::zero()));  // inf vs 0 at 3
    CHECK(!baer_equivalent(BaerType(ExtNat::fin(1)), BaerType::zero()));  // infinitely many gaps
    CHECK(GroupExpr::rank_one(a) != GroupExpr::rank_one(b));  // not folded into equality
}

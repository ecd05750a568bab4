#include "doctest.h"

#include "mcell/errors.hpp"
#include "mcell/parse.hpp"
#include "mcell/space.hpp"

using namespace mcell;

namespace {
GroupExpr P(const std::string& s) { return parse_group(s); }
}

TEST_CASE("space parse and print round trip") {
    std::vector<std::string> texts = {
        "pt",
        "S^2",
        "K(Z,2)",
        "K(Z(2^inf),1)",
        "M(Z/4 + Z/2,1)",
        "K(Z[1/2] * Z/2,1)",
        "space{pi1=Z/9; H=[Z/9,Z/3]; sc=false; nilp=false}",
        "space{pi1=0; sc=true; nilp=true; pi2=Q}",
    };
    for (auto& t : texts) {
        SpaceDesc s = parse_space(t);
        CHECK(parse_space(s.to_string()) == s);
    }
    CHECK(parse_space(" K( Z/6 , 2 ) ") == SpaceDesc::em(P("Z/6"), 2));
    CHECK(parse_space("space{sc=true}") ==
          SpaceDesc::generic(GroupExpr::trivial(), true, false, std::nullopt, std::nullopt));
}

TEST_CASE("space parse errors") {
    CHECK_THROWS_AS(parse_space("S^"), ParseError);
    CHECK_THROWS_AS(parse_space("K(Z)"), ParseError);
    CHECK_THROWS_AS(parse_space("K(Z,0)"), InputError);
    CHECK_THROWS_AS(parse_space("space{pi1=Z; sc=true}"), InputError);
    CHECK_THROWS_AS(parse_space("space{nilp=true}"), ParseError);  // pi1 required
    CHECK_THROWS_AS(parse_space("space{pi1=Z/2; H=[Z/4]}"), InputError);  // H1 != ab(pi1)
    CHECK_THROWS_AS(parse_space("banana"), ParseError);
    CHECK_THROWS_AS(parse_space("K(Z,2) x"), ParseError);
    CHECK_THROWS_AS(parse_space("M(Z * Z, 2)"), InputError);
}

TEST_CASE("profile extraction") {
    CHECK(*fundamental_group(parse_space("S^1")) == P("Z"));
    CHECK(*fundamental_group(parse_space("S^2")) == GroupExpr::trivial());
    CHECK(*fundamental_group(parse_space("K(Z/4,1)")) == P("Z/4"));
    CHECK(*fundamental_group(parse_space("K(Z[1/2] * Z/2,1)")) == normalize(P("Z[1/2] * Z/2")));
    CHECK(*second_homotopy(parse_space("S^2")) == P("Z"));
    CHECK(*second_homotopy(parse_space("K(Q,2)")) == P("Q"));
    CHECK(*second_homotopy(parse_space("M(Z/3,2)")) == P("Z/3"));
    CHECK(!second_homotopy(parse_space("M(Z/3,1)")).has_value());
    CHECK(*second_homology(parse_space("M(Z/3,1)")) == GroupExpr::trivial());
    CHECK(*second_homology(parse_space("S^2")) == P("Z"));
    CHECK(*second_homology(parse_space("K(Z/2,1)")) == GroupExpr::trivial());
    // exterior square of a sum: pairwise tensors
    CHECK(*second_homology(parse_space("K(Z/2 + Z/2,1)")) == P("Z/2"));
    CHECK(*second_homology(parse_space("K(Z + Z,1)")) == P("Z"));
    CHECK(*second_homology(parse_space("K(Z/2 + Z/3,1)")) == GroupExpr::trivial());
    CHECK(known_simply_connected(parse_space("K(Q,2)")));
    CHECK(!known_simply_connected(parse_space("K(Q,1)")));
    CHECK(known_nilpotent(parse_space("K(Z(2^inf),1)")));
    CHECK(!known_nilpotent(parse_space("K(Z * Z/2,1)")));
    CHECK(!known_nilpotent(parse_space("M(Z/5,1)")));
    CHECK(known_nilpotent(parse_space("space{pi1=Z/5; nilp=true}")));
}

TEST_CASE("generic space homology consistency") {
    SpaceDesc s = parse_space("space{pi1=Z/9; H=[Z/9,Z/3,Z/9]; sc=false; nilp=false}");
    REQUIRE(s.homology_field().has_value());
    CHECK(s.homology_field()->size() == 3);
    CHECK(*second_homology(s) == P("Z/3"));
    SpaceDesc sc = parse_space("space{H=[]; sc=true}");
    CHECK(*fundamental_group(sc) == GroupExpr::trivial());
}

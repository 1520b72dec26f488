#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "sublat/group.hpp"
#include "sublat/lattice.hpp"
#include "sublat/spec_parser.hpp"

using namespace sublat;

TEST_CASE("parsing terms") {
    GroupSpec s = parse_spec("C12");
    CHECK(s.kind == GroupSpec::Kind::cyclic);
    CHECK(s.n == 12);

    s = parse_spec("C2:C3[2]");
    CHECK(s.kind == GroupSpec::Kind::semidirect);
    CHECK(s.actor == 2);
    CHECK(s.base == 3);
    CHECK(s.k == 2);

    CHECK(parse_spec("E27").kind == GroupSpec::Kind::named_e27);
    CHECK(parse_spec("M16").kind == GroupSpec::Kind::named_m16);
    CHECK(parse_spec("D8").kind == GroupSpec::Kind::dihedral);
    CHECK(parse_spec("Q16").kind == GroupSpec::Kind::quaternion);
    CHECK(parse_spec("A4").kind == GroupSpec::Kind::alternating);
    CHECK(parse_spec("S5").kind == GroupSpec::Kind::symmetric);

    s = parse_spec("S3 x C5");
    CHECK(s.kind == GroupSpec::Kind::product);
    CHECK(s.parts.size() == 2);

    s = parse_spec("C2xC2xC2");
    CHECK(s.parts.size() == 3);
}

TEST_CASE("parse errors carry positions") {
    for (const char* bad : {"", "C", "Cx", "C2:", "C2:C3", "C2:C3[", "C2:C3[2", "Z4", "E28",
                            "M15", "C2yC3", "C2 C3", "C2:D3[2]"}) {
        INFO(bad);
        bool threw = false;
        try {
            parse_spec(bad);
        } catch (const Error& e) {
            threw = true;
            CHECK(e.code() == Errc::parse);
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
        CHECK(threw);
    }
}

TEST_CASE("semantic errors are distinct from parse errors") {
    // parses fine, fails the automorphism condition
    try {
        build_group(parse_spec("C2:C8[2]"));
        FAIL("expected invalid_argument");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_argument);
    }
    // parses fine, blows the size cap
    try {
        build_group(parse_spec("C100xC100"));
        FAIL("expected size_cap");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::size_cap);
    }
}

TEST_CASE("round trip through to_string") {
    for (const char* text : {"C12", "D8", "Q16", "A4", "S5", "E27", "M16", "C2:C3[2]", "Q8xC3",
                             "C2xC2xC2", "C4:C3[2]xC2"}) {
        GroupSpec s = parse_spec(text);
        CHECK(to_string(s) == text);
        CHECK(parse_spec(to_string(s)) == s);
    }
    CHECK(to_string(parse_spec("S3 x C5")) == "S3xC5");
}

TEST_CASE("built groups match their specs") {
    CHECK(build_group(parse_spec("C1")).order() == 1);

    Group s3 = build_group(parse_spec("C2:C3[2]"));
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.abelian());

    Group m16 = build_group(parse_spec("C2:C8[5]"));
    CHECK(m16.order() == 16);
    CHECK(are_isomorphic(m16, named(NamedGroup::m16)));
    CHECK(count_subgroups(m16) == 11);

    CHECK(build_group(parse_spec("S4")).order() == 24);
    CHECK(build_group(parse_spec("A5")).order() == 60);
    CHECK(build_group(parse_spec("S1")).order() == 1);
    CHECK(build_group(parse_spec("A2")).order() == 1);
    CHECK(build_group(parse_spec("A3")).order() == 3);
    CHECK(are_isomorphic(build_group(parse_spec("A4")),
                         from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}})));
    CHECK(are_isomorphic(build_group(parse_spec("S3")), build_group(parse_spec("D6"))));

    CHECK(build_group(parse_spec("Q8xC5")).order() == 40);
    CHECK_THROWS_AS(build_group(parse_spec("S8")), Error);
    CHECK_THROWS_AS(build_group(parse_spec("A8")), Error);
}

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "sublat/group.hpp"
#include "sublat/lattice.hpp"
#include "sublat/numeric.hpp"

using namespace sublat;

namespace {

Group make_a4() { return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"); }

// Oracle: check a member set is closed under multiplication by brute force.
bool brute_closed(const Group& g, const Bits& m) {
    auto list = m.members();
    for (int a : list)
        for (int b : list)
            if (!m.test(g.mul(a, b))) return false;
    return m.test(0);
}

// Oracle: normality by conjugating with every element, not just generators.
bool brute_normal(const Group& g, const Bits& m) {
    for (int t = 0; t < g.order(); ++t)
        for (int x : m.members())
            if (!m.test(g.mul(g.mul(t, x), g.inverse(t)))) return false;
    return true;
}

}  // namespace

TEST_CASE("closure of element sets") {
    Group s3 = semidirect_cyclic(3, 2, 2);
    Subgroup t = closure(s3, {});
    CHECK(t.order == 1);

    Subgroup whole = closure(s3, s3.generators());
    CHECK(whole.order == 6);

    Group a4 = make_a4();
    // a 3-cycle: any element of order 3
    Elem three = 0;
    for (int x = 1; x < 12; ++x)
        if (a4.element_order(x) == 3) {
            three = static_cast<Elem>(x);
            break;
        }
    Subgroup c3 = closure(a4, {three});
    CHECK(c3.order == 3);
}

TEST_CASE("subgroup counts of named groups") {
    CHECK(count_subgroups(semidirect_cyclic(3, 2, 2)) == 6);
    CHECK(count_subgroups(direct_product(cyclic(2), cyclic(2))) == 5);
    CHECK(count_subgroups(semidirect_cyclic(3, 16, 2)) == 12);
    CHECK(count_subgroups(quaternion(8)) == 6);
    CHECK(count_subgroups(cyclic(1)) == 1);
    CHECK(count_subgroups(direct_product(cyclic(3), cyclic(9))) == 10);
    CHECK(count_subgroups(dihedral(8)) == 10);
    CHECK(count_subgroups(dihedral(10)) == 8);
    CHECK(count_subgroups(dihedral(14)) == 10);
    CHECK(count_subgroups(make_a4()) == 10);
    CHECK(count_subgroups(direct_product(semidirect_cyclic(3, 2, 2), cyclic(5))) == 12);
}

TEST_CASE("cyclic subgroup counts match the divisor oracle") {
    for (int n = 1; n <= 64; ++n) CHECK(count_subgroups(cyclic(n)) == divisor_count(n));
}

TEST_CASE("subgroup counts multiply across coprime direct factors") {
    Group s3 = semidirect_cyclic(3, 2, 2);
    Group v25 = direct_product(cyclic(5), cyclic(5));
    CHECK(count_subgroups(direct_product(s3, v25)) ==
          count_subgroups(s3) * count_subgroups(v25));

    Group d8 = dihedral(8);
    Group v9 = direct_product(cyclic(3), cyclic(3));
    CHECK(count_subgroups(direct_product(d8, v9)) == 10 * 6);

    Group q8 = quaternion(8);
    CHECK(count_subgroups(direct_product(q8, cyclic(15))) == 6 * 4);
}

TEST_CASE("isomorphic groups have equal profiles and subgroup counts") {
    std::vector<std::pair<Group, Group>> pairs;
    pairs.emplace_back(cyclic(6), direct_product(cyclic(2), cyclic(3)));
    pairs.emplace_back(dihedral(16), semidirect_cyclic(8, 2, 7));
    pairs.emplace_back(dihedral(6), semidirect_cyclic(3, 2, 2));
    pairs.emplace_back(named(NamedGroup::m16), semidirect_cyclic(8, 2, 5));
    for (const auto& [a, b] : pairs) {
        REQUIRE(are_isomorphic(a, b));
        CHECK(a.order() == b.order());
        CHECK(a.order_profile() == b.order_profile());
        CHECK(count_subgroups(a) == count_subgroups(b));
    }
}

TEST_CASE("lattice entries are closed, ordered, and satisfy Lagrange") {
    for (const Group& g : {dihedral(12), quaternion(16), make_a4(),
                           direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)))}) {
        auto lat = all_subgroups(g);
        CHECK(lat.subgroups.front().order == 1);
        CHECK(lat.subgroups.back().order == g.order());
        for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
            const auto& s = lat.subgroups[i];
            CHECK(brute_closed(g, s.members));
            CHECK(g.order() % s.order == 0);
            CHECK(s.order == s.members.count());
            if (i > 0) {
                const auto& p = lat.subgroups[i - 1];
                bool ordered = p.order < s.order || (p.order == s.order && p.members.lex_less(s.members));
                CHECK(ordered);
            }
        }
    }
}

TEST_CASE("lattice is closed under join and intersection") {
    for (const Group& g : {dihedral(12), make_a4(), quaternion(16)}) {
        auto lat = all_subgroups(g);
        std::set<std::size_t> keys;
        for (const auto& s : lat.subgroups) keys.insert(s.members.hash());
        for (const auto& a : lat.subgroups)
            for (const auto& b : lat.subgroups) {
                Bits meet = a.members & b.members;
                CHECK(keys.count(meet.hash()) == 1);
                Bits join = detail::saturate(g, a.members | b.members);
                CHECK(keys.count(join.hash()) == 1);
            }
    }
}

TEST_CASE("normality") {
    Group s3 = semidirect_cyclic(3, 2, 2);
    auto lat = all_subgroups(s3);
    CHECK(is_normal(s3, lat.subgroups.back()));
    int normal2 = 0, total2 = 0;
    for (const auto& s : lat.subgroups)
        if (s.order == 2) {
            ++total2;
            CHECK(s.normal == brute_normal(s3, s.members));
            if (s.normal) ++normal2;
        }
    CHECK(total2 == 3);
    CHECK(normal2 == 0);

    Group a4 = make_a4();
    for (const auto& s : all_subgroups(a4).subgroups) {
        CHECK(s.normal == brute_normal(a4, s.members));
        if (s.order == 4) CHECK(s.normal);
    }
}

TEST_CASE("dot export") {
    auto triv = all_subgroups(cyclic(1));
    std::string d1 = dot_export(triv);
    CHECK(d1.find("n0") != std::string::npos);
    CHECK(d1.find("->") == std::string::npos);

    auto c5 = cyclic(5);
    auto lat5 = all_subgroups(c5);
    CHECK(covering_edges(lat5).size() == 1);

    Group s3 = semidirect_cyclic(3, 2, 2);
    auto lat = all_subgroups(s3);
    CHECK(lat.count() == 6);
    auto edges = covering_edges(lat);
    // oracle: inclusion pairs with nothing strictly between
    int expect = 0;
    for (const auto& a : lat.subgroups)
        for (const auto& b : lat.subgroups) {
            if (a.order >= b.order || !b.members.contains(a.members)) continue;
            bool between = false;
            for (const auto& c : lat.subgroups)
                if (c.order > a.order && c.order < b.order && c.members.contains(a.members) &&
                    b.members.contains(c.members))
                    between = true;
            if (!between) ++expect;
        }
    CHECK(expect == 8);
    CHECK(static_cast<int>(edges.size()) == expect);

    std::string dot = dot_export(lat);
    CHECK(dot.find("label=\"order=6\"") != std::string::npos);
}

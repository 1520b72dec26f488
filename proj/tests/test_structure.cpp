#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "sublat/group.hpp"
#include "sublat/lattice.hpp"
#include "sublat/numeric.hpp"
#include "sublat/structure.hpp"

using namespace sublat;

namespace {

Group make_a4() { return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"); }

// Oracle: number of conjugates of a subgroup under the whole group.
int conjugate_orbit_size(const Group& g, const Bits& members) {
    std::set<std::size_t> orbit;
    for (int t = 0; t < g.order(); ++t) {
        Bits img(g.order());
        for (int x : members.members()) img.set(g.mul(g.mul(t, x), g.inverse(t)));
        orbit.insert(img.hash());
    }
    return static_cast<int>(orbit.size());
}

// Oracle: commutation scan, independent of center().
int brute_center_size(const Group& g) {
    int c = 0;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int y = 0; y < g.order(); ++y)
            if (g.mul(x, y) != g.mul(y, x)) ok = false;
        if (ok) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("sylow analysis") {
    Group s3 = semidirect_cyclic(3, 2, 2);
    auto lat3 = all_subgroups(s3);
    SylowInfo p3 = sylow(s3, lat3, 3);
    CHECK(p3.order == 3);
    CHECK(p3.count == 1);
    CHECK(p3.cyclic);
    CHECK_FALSE(p3.central);
    SylowInfo p2 = sylow(s3, lat3, 2);
    CHECK(p2.order == 2);
    CHECK(p2.count == 3);
    CHECK(p2.count == conjugate_orbit_size(s3, p2.representative.members));

    Group z12 = cyclic(12);
    SylowInfo z2 = sylow(z12, 2);
    CHECK(z2.order == 4);
    CHECK(z2.count == 1);
    CHECK(z2.cyclic);
    CHECK(z2.central);

    Group a4 = make_a4();
    SylowInfo a3 = sylow(a4, 3);
    CHECK(a3.order == 3);
    CHECK(a3.count == 4);
    CHECK(a3.count % 3 == 1);
    CHECK(a3.count == conjugate_orbit_size(a4, a3.representative.members));
    SylowInfo a2 = sylow(a4, 2);
    CHECK(a2.order == 4);
    CHECK(a2.count == 1);
    CHECK_FALSE(a2.cyclic);

    CHECK_THROWS_AS(sylow(s3, 5), Error);
    CHECK_THROWS_AS(sylow(s3, 4), Error);
}

TEST_CASE("sylow counts are 1 mod p") {
    for (const Group& g : {dihedral(12), dihedral(20), make_a4(),
                           semidirect_cyclic(7, 3, 2), semidirect_cyclic(5, 4, 2)}) {
        auto lat = all_subgroups(g);
        for (auto [p, e] : factorize(g.order())) CHECK(sylow(g, lat, p).count % p == 1);
    }
}

TEST_CASE("center") {
    Group ab = direct_product(cyclic(4), cyclic(5));
    CHECK(center(ab).order == 20);

    Group q8 = quaternion(8);
    Subgroup zq = center(q8);
    CHECK(zq.order == 2);
    CHECK(zq.order == brute_center_size(q8));

    Group s3 = semidirect_cyclic(3, 2, 2);
    CHECK(center(s3).order == 1);
    CHECK(brute_center_size(s3) == 1);

    // center is a normal abelian subgroup
    for (const Group& g : {dihedral(16), quaternion(16), make_a4()}) {
        Subgroup z = center(g);
        CHECK(is_normal(g, z));
        auto ms = z.members.members();
        for (int a : ms)
            for (int b : ms) CHECK(g.mul(a, b) == g.mul(b, a));
    }
}

TEST_CASE("tilde decomposition") {
    auto d6 = decompose(cyclic(6));
    CHECK(d6.tilde.order() == 1);
    CHECK(d6.stripped == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}});

    Group s3z5 = direct_product(semidirect_cyclic(3, 2, 2), cyclic(5));
    auto ds = decompose(s3z5);
    CHECK(ds.stripped == std::vector<std::pair<int, int>>{{5, 1}});
    CHECK(ds.tilde.order() == 6);
    CHECK(are_isomorphic(ds.tilde, semidirect_cyclic(3, 2, 2)));

    Group a4 = make_a4();
    auto da = decompose(a4);
    CHECK(da.stripped.empty());
    CHECK(da.tilde.order() == 12);
}

TEST_CASE("tilde fixedness") {
    CHECK(is_tilde_fixed(cyclic(1)));
    CHECK_FALSE(is_tilde_fixed(cyclic(5)));
    CHECK_FALSE(is_tilde_fixed(cyclic(7)));
    CHECK(is_tilde_fixed(quaternion(8)));
    CHECK(is_tilde_fixed(dihedral(8)));
    CHECK(is_tilde_fixed(direct_product(cyclic(2), cyclic(2))));
    CHECK_FALSE(is_tilde_fixed(direct_product(quaternion(8), cyclic(3))));
}

TEST_CASE("decomposition bookkeeping and idempotence") {
    std::vector<Group> gs;
    gs.push_back(cyclic(12));
    gs.push_back(cyclic(30));
    gs.push_back(direct_product(quaternion(8), cyclic(3)));
    gs.push_back(direct_product(semidirect_cyclic(3, 2, 2), cyclic(5)));
    gs.push_back(make_a4());
    gs.push_back(dihedral(12));
    for (const auto& g : gs) {
        auto d = decompose(g);
        long prod = d.tilde.order();
        for (auto [p, e] : d.stripped) prod *= pow_int(p, e);
        CHECK(prod == g.order());
        CHECK(decompose(d.tilde).stripped.empty());
        CHECK(is_tilde_fixed(d.tilde));

        // subgroup count law: stripped factors multiply the count by (e+1)
        long law = count_subgroups(d.tilde);
        for (auto [p, e] : d.stripped) law *= e + 1;
        CHECK(law == count_subgroups(g));
    }
}

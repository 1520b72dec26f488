#pragma once

#include <utility>
#include <vector>

#include "sublat/group.hpp"
#include "sublat/lattice.hpp"
#include "sublat/numeric.hpp"

namespace sublat {

struct SylowInfo {
    int prime = 0;
    int order = 1;        // full p-part of |G|
    int exponent = 0;     // order = prime^exponent
    int count = 0;        // number of Sylow p-subgroups
    bool cyclic = false;
    bool central = false;
    Subgroup representative;
};

/// Elements commuting with everything; always a normal subgroup.
inline Subgroup center(const Group& g) {
    int n = g.order();
    Bits bits(n);
    for (int x = 0; x < n; ++x) {
        bool commutes = true;
        for (int y = 0; y < n && commutes; ++y)
            if (g.mul(static_cast<Elem>(x), static_cast<Elem>(y)) !=
                g.mul(static_cast<Elem>(y), static_cast<Elem>(x)))
                commutes = false;
        if (commutes) bits.set(x);
    }
    Subgroup s;
    s.parent = &g;
    s.order = bits.count();
    s.members = std::move(bits);
    s.normal = true;
    return s;
}

inline SylowInfo sylow(const Group& g, const SubgroupLattice& lat, int p) {
    if (!is_prime(p) || g.order() % p != 0)
        throw Error(Errc::invalid_argument, "sylow: prime does not divide the group order");
    auto [pe, e] = p_part(g.order(), p);

    SylowInfo info;
    info.prime = p;
    info.order = pe;
    info.exponent = e;

    // Subgroups whose order is the full p-part are exactly the Sylow p-subgroups.
    for (const auto& s : lat.subgroups) {
        if (s.order != pe) continue;
        ++info.count;
        if (info.count == 1) info.representative = s;
    }

    const Subgroup& rep = info.representative;
    for (int x : rep.members.members())
        if (g.element_order(static_cast<Elem>(x)) == pe) {
            info.cyclic = true;
            break;
        }
    Subgroup z = center(g);
    info.central = z.members.contains(rep.members);
    return info;
}

inline SylowInfo sylow(const Group& g, int p) { return sylow(g, all_subgroups(g), p); }

/// G with its cyclic central Sylow factors stripped: `stripped` lists the
/// (prime, exponent) of each removed factor, `tilde` is the induced group on
/// the elements whose order is coprime to all stripped primes.
struct Decomposition {
    std::vector<std::pair<int, int>> stripped;
    Group tilde;
    int original_order = 0;
};

namespace detail {

/// A Sylow p-subgroup is cyclic and central exactly when some central
/// element realizes the full p-part as its order.
inline bool has_central_cyclic_sylow(const Group& g, const Bits& center_bits, int p) {
    int pe = p_part(g.order(), p).first;
    for (int x : center_bits.members())
        if (g.element_order(static_cast<Elem>(x)) == pe) return true;
    return false;
}

}  // namespace detail

inline Decomposition decompose(const Group& g) {
    Bits zbits = center(g).members;

    std::vector<std::pair<int, int>> stripped;
    long strip_product = 1;
    for (auto [p, e] : factorize(g.order())) {
        if (detail::has_central_cyclic_sylow(g, zbits, p)) {
            stripped.emplace_back(p, e);
            strip_product *= pow_int(p, e);
        }
    }

    // Induced group on {x : gcd(order(x), stripped primes) = 1}.
    std::vector<int> keep;
    for (int x = 0; x < g.order(); ++x) {
        bool coprime = true;
        for (auto [p, e] : stripped)
            if (g.element_order(static_cast<Elem>(x)) % p == 0) coprime = false;
        if (coprime) keep.push_back(x);
    }

    int m = static_cast<int>(keep.size());
    if (static_cast<long>(m) * strip_product != g.order())
        throw Error(Errc::data_integrity, "decompose: stripped factor bookkeeping failed for " + g.label());

    std::vector<int> reindex(g.order(), -1);
    for (int i = 0; i < m; ++i) reindex[keep[i]] = i;

    std::vector<Elem> table(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Elem p = g.mul(static_cast<Elem>(keep[a]), static_cast<Elem>(keep[b]));
            if (reindex[p] < 0)
                throw Error(Errc::data_integrity, "decompose: coprime-order set not closed in " + g.label());
            table[static_cast<std::size_t>(a) * m + b] = static_cast<Elem>(reindex[p]);
        }

    if (m == g.order()) return Decomposition{std::move(stripped), g, g.order()};
    auto gens = detail::greedy_generators(m, table);
    Group tilde = Group::from_table("~" + g.label(), m, std::move(table), std::move(gens));
    return Decomposition{std::move(stripped), std::move(tilde), g.order()};
}

inline bool is_tilde_fixed(const Group& g) {
    Bits zbits = center(g).members;
    for (auto [p, e] : factorize(g.order()))
        if (detail::has_central_cyclic_sylow(g, zbits, p)) return false;
    return true;
}

}  // namespace sublat

#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sublat/bits.hpp"
#include "sublat/group.hpp"

namespace sublat {

struct Subgroup {
    const Group* parent = nullptr;
    Bits members;
    int order = 0;
    bool normal = false;

    std::vector<int> member_list() const { return members.members(); }
};

/// Complete set of subgroups, sorted by (order, lowest differing member).
struct SubgroupLattice {
    const Group* parent = nullptr;
    std::vector<Subgroup> subgroups;

    int count() const { return static_cast<int>(subgroups.size()); }
};

namespace detail {

/// Product-saturate a seed set into the smallest containing subgroup.
/// Stops early once every element is in (the whole group is closed).
inline Bits saturate(const Group& g, const Bits& seed) {
    int n = g.order();
    Bits bits(n);
    bits.set(0);
    std::vector<Elem> list{0};
    for (int m : seed.members())
        if (!bits.test(m)) {
            bits.set(m);
            list.push_back(static_cast<Elem>(m));
        }
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (static_cast<int>(list.size()) == n) break;
        for (std::size_t j = 0; j <= i; ++j) {
            Elem p = g.mul(list[i], list[j]);
            if (!bits.test(p)) {
                bits.set(p);
                list.push_back(p);
            }
            Elem q = g.mul(list[j], list[i]);
            if (!bits.test(q)) {
                bits.set(q);
                list.push_back(q);
            }
        }
    }
    return bits;
}

}  // namespace detail

/// True iff conjugation by every generator of g maps h onto itself.
inline bool is_normal(const Group& g, const Bits& members) {
    for (Elem t : g.generators()) {
        Elem ti = g.inverse(t);
        for (int m : members.members())
            if (!members.test(g.mul(g.mul(t, static_cast<Elem>(m)), ti))) return false;
    }
    return true;
}

inline bool is_normal(const Group& g, const Subgroup& h) {
    if (h.members.capacity() != g.order() || !h.members.test(0))
        throw Error(Errc::invalid_argument, "is_normal: subgroup does not belong to this group");
    return is_normal(g, h.members);
}

/// Smallest subgroup containing `seed`.
inline Subgroup closure(const Group& g, const std::vector<Elem>& seed) {
    Bits start(g.order());
    start.set(0);
    for (Elem x : seed) {
        if (x >= g.order()) throw Error(Errc::invalid_argument, "closure: element out of range");
        start.set(x);
    }
    Subgroup s;
    s.parent = &g;
    s.members = detail::saturate(g, start);
    s.order = s.members.count();
    s.normal = is_normal(g, s.members);
    return s;
}

/// Exact subgroup lattice: all distinct cyclic subgroups, then pairwise
/// joins to a fixpoint. Each unordered pair is processed exactly once.
inline SubgroupLattice all_subgroups(const Group& g) {
    int n = g.order();
    std::unordered_map<Bits, int, BitsHash> seen;
    std::vector<Bits> subs;

    auto add = [&](const Bits& b) -> bool {
        if (seen.emplace(b, static_cast<int>(subs.size())).second) {
            subs.push_back(b);
            return true;
        }
        return false;
    };

    for (int x = 0; x < n; ++x) {
        Bits b(n);
        b.set(0);
        Elem y = static_cast<Elem>(x);
        while (y != 0) {
            b.set(y);
            y = g.mul(y, static_cast<Elem>(x));
        }
        add(b);
    }

    for (std::size_t i = 1; i < subs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const Bits &a = subs[i], &b = subs[j];
            if (a.contains(b) || b.contains(a)) continue;
            add(detail::saturate(g, a | b));
        }
    }

    SubgroupLattice lat;
    lat.parent = &g;
    lat.subgroups.reserve(subs.size());
    for (auto& b : subs) {
        Subgroup s;
        s.parent = &g;
        s.order = b.count();
        s.members = std::move(b);
        lat.subgroups.push_back(std::move(s));
    }
    std::sort(lat.subgroups.begin(), lat.subgroups.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order != y.order) return x.order < y.order;
        return x.members.lex_less(y.members);
    });
    for (auto& s : lat.subgroups) s.normal = is_normal(g, s.members);
    return lat;
}

inline int count_subgroups(const Group& g) { return all_subgroups(g).count(); }

/// Covering relations (maximal proper inclusions) as index pairs (sub, super).
inline std::vector<std::pair<int, int>> covering_edges(const SubgroupLattice& lat) {
    int k = lat.count();
    std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const auto &a = lat.subgroups[i], &b = lat.subgroups[j];
            if (a.order < b.order && b.order % a.order == 0 && b.members.contains(a.members))
                below[i][j] = true;
        }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (!below[i][j]) continue;
            bool covering = true;
            for (int l = 0; l < k && covering; ++l)
                if (below[i][l] && below[l][j]) covering = false;
            if (covering) edges.emplace_back(i, j);
        }
    return edges;
}

/// DOT digraph of the lattice; nodes in canonical order, edges point from
/// subgroup to immediate supergroup.
inline std::string dot_export(const SubgroupLattice& lat) {
    std::string out = "digraph subgroups {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < lat.count(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"order=" +
               std::to_string(lat.subgroups[i].order) + "\"];\n";
    for (auto [a, b] : covering_edges(lat))
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace sublat

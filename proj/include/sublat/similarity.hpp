#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "sublat/group.hpp"
#include "sublat/lattice.hpp"
#include "sublat/numeric.hpp"
#include "sublat/structure.hpp"

namespace sublat {

/// Isomorphism key of the tilde group plus the multiset of exponents of the
/// stripped cyclic central Sylow factors. The key fields are invariants;
/// are_isomorphic stays the final arbiter when keys collide.
struct SimilaritySignature {
    int tilde_order = 1;
    std::vector<int> tilde_profile;
    int tilde_subgroup_count = 1;
    bool tilde_nonabelian = false;
    std::vector<int> exponents;  // sorted ascending

    bool operator==(const SimilaritySignature&) const = default;
};

inline SimilaritySignature signature(const Group& g) {
    auto d = decompose(g);
    SimilaritySignature s;
    s.tilde_order = d.tilde.order();
    s.tilde_profile = d.tilde.order_profile();
    s.tilde_subgroup_count = count_subgroups(d.tilde);
    s.tilde_nonabelian = !d.tilde.abelian();
    for (auto [p, e] : d.stripped) s.exponents.push_back(e);
    std::sort(s.exponents.begin(), s.exponents.end());
    return s;
}

/// Similarity: isomorphic tilde groups and matching exponent multisets.
inline bool similar(const Group& g, const Group& h) {
    auto dg = decompose(g);
    auto dh = decompose(h);
    std::vector<int> eg, eh;
    for (auto [p, e] : dg.stripped) eg.push_back(e);
    for (auto [p, e] : dh.stripped) eh.push_back(e);
    std::sort(eg.begin(), eg.end());
    std::sort(eh.begin(), eh.end());
    if (eg != eh) return false;
    return are_isomorphic(dg.tilde, dh.tilde);
}

/// A tilde-fixed group together with its subgroup count.
struct InventoryEntry {
    std::shared_ptr<const Group> group;
    int subgroup_count = 0;
};

/// One similarity class: a tilde-fixed representative and the exponents of
/// the coprime cyclic factors attached to it.
struct ClassDescriptor {
    std::shared_ptr<const Group> tilde_rep;
    std::vector<int> exponents;  // ascending
    int subgroup_count = 0;
    std::string display_name;
};

inline long class_count(const ClassDescriptor& d) {
    long c = count_subgroups(*d.tilde_rep);
    for (int e : d.exponents) c *= e + 1;
    return c;
}

namespace detail {

inline void factorizations_rec(int m, int min_factor, std::vector<int>& cur,
                               std::vector<std::vector<int>>& out) {
    if (m == 1) {
        out.push_back(cur);
        return;
    }
    for (int d = min_factor; d <= m; ++d)
        if (m % d == 0) {
            cur.push_back(d);
            factorizations_rec(m / d, d, cur, out);
            cur.pop_back();
        }
}

/// Unordered factorizations of m into factors >= 2, nondecreasing.
inline std::vector<std::vector<int>> factorizations(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    factorizations_rec(m, 2, cur, out);
    return out;
}

inline std::string class_display_name(const Group& tilde, const std::vector<int>& exponents) {
    static const char* placeholders = "pqrstuvw";
    std::string name;
    if (tilde.order() > 1) name = tilde.label();
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (!name.empty()) name += " x ";
        name += "C_";
        name += placeholders[i];
        if (exponents[i] > 1) name += "^" + std::to_string(exponents[i]);
    }
    if (name.empty()) name = "C1";
    return name;
}

inline void check_inventory(const std::vector<InventoryEntry>& inventory) {
    for (const auto& e : inventory) {
        if (!e.group) throw Error(Errc::invalid_argument, "inventory entry without a group");
        if (!is_tilde_fixed(*e.group))
            throw Error(Errc::invalid_argument,
                        "inventory group " + e.group->label() + " is not tilde-fixed");
        if (e.subgroup_count < 1 || e.subgroup_count > 12)
            throw Error(Errc::invalid_argument,
                        "inventory count for " + e.group->label() + " out of range");
    }
}

}  // namespace detail

/// All similarity classes with exactly n subgroups, drawn from an inventory
/// of the tilde-fixed groups with at most 12 subgroups.
inline std::vector<ClassDescriptor> enumerate_classes(int n,
                                                      const std::vector<InventoryEntry>& inventory) {
    if (n < 1 || n > 12) throw Error(Errc::invalid_argument, "enumerate_classes: n must be in 1..12");
    detail::check_inventory(inventory);

    std::vector<ClassDescriptor> out;
    for (const auto& entry : inventory) {
        if (n % entry.subgroup_count != 0) continue;
        int rest = n / entry.subgroup_count;
        for (const auto& factors : detail::factorizations(rest)) {
            ClassDescriptor d;
            d.tilde_rep = entry.group;
            for (int f : factors) d.exponents.push_back(f - 1);
            d.subgroup_count = n;
            d.display_name = detail::class_display_name(*entry.group, d.exponents);
            out.push_back(std::move(d));
        }
    }
    std::sort(out.begin(), out.end(), [](const ClassDescriptor& a, const ClassDescriptor& b) {
        int ca = a.tilde_rep->order(), cb = b.tilde_rep->order();
        if (ca != cb) return ca < cb;
        if (a.tilde_rep->label() != b.tilde_rep->label()) return a.tilde_rep->label() < b.tilde_rep->label();
        if (a.exponents.size() != b.exponents.size()) return a.exponents.size() < b.exponents.size();
        return a.exponents < b.exponents;
    });
    return out;
}

/// Counts of tilde-fixed inventory groups per subgroup count 1..12.
inline std::vector<int> tilde_sequence(const std::vector<InventoryEntry>& inventory) {
    detail::check_inventory(inventory);
    std::vector<int> seq(12, 0);
    for (const auto& e : inventory) ++seq[e.subgroup_count - 1];
    return seq;
}

/// Number of similarity classes per subgroup count 1..12.
inline std::vector<int> class_sequence(const std::vector<InventoryEntry>& inventory) {
    std::vector<int> seq(12, 0);
    for (int n = 1; n <= 12; ++n) seq[n - 1] = static_cast<int>(enumerate_classes(n, inventory).size());
    return seq;
}

/// Fresh primes for the cyclic factors: smallest primes not dividing the
/// tilde order, assigned in ascending-exponent order.
inline std::vector<int> fresh_primes(const ClassDescriptor& d) {
    std::vector<int> primes;
    int candidate = 2;
    while (primes.size() < d.exponents.size()) {
        if (is_prime(candidate) && d.tilde_rep->order() % candidate != 0) primes.push_back(candidate);
        ++candidate;
    }
    return primes;
}

inline long concrete_order(const ClassDescriptor& d) {
    auto primes = fresh_primes(d);
    long n = d.tilde_rep->order();
    for (std::size_t i = 0; i < d.exponents.size(); ++i) n *= pow_int(primes[i], d.exponents[i]);
    return n;
}

/// Concrete representative: tilde_rep times cyclic groups of fresh prime
/// power order. Throws size_cap when the result exceeds the order cap.
inline Group concrete_representative(const ClassDescriptor& d) {
    if (concrete_order(d) > kMaxOrder)
        throw Error(Errc::size_cap, "concrete representative exceeds the order cap");
    auto primes = fresh_primes(d);
    Group g = *d.tilde_rep;
    for (std::size_t i = 0; i < d.exponents.size(); ++i)
        g = direct_product(g, cyclic(static_cast<int>(pow_int(primes[i], d.exponents[i]))));
    return g;
}

/// Grammar form of the concrete representative, e.g. "Q8xC3".
inline std::string concrete_spec_string(const ClassDescriptor& d) {
    auto primes = fresh_primes(d);
    std::string s;
    if (d.tilde_rep->order() > 1) s = d.tilde_rep->label();
    for (std::size_t i = 0; i < d.exponents.size(); ++i) {
        if (!s.empty()) s += "x";
        s += "C" + std::to_string(pow_int(primes[i], d.exponents[i]));
    }
    if (s.empty()) s = "C1";
    return s;
}

}  // namespace sublat

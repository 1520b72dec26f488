#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sublat/bits.hpp"
#include "sublat/numeric.hpp"

namespace sublat {

using Elem = std::uint16_t;

/// Hard cap on group order. Cayley tables are O(n^2) memory, so this keeps
/// the largest admissible group at ~32 MB while still covering every check
/// the verification suites need (largest built order: 3125).
inline constexpr int kMaxOrder = 4096;

enum class Errc {
    size_cap,          // requested group exceeds kMaxOrder
    invalid_argument,  // parameter outside the constructor's domain
    parse,             // malformed text input
    data_integrity,    // catalog or table data failed validation
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

/// A finite group as an immutable multiplication table.
///
/// Element 0 is always the identity. Construction validates the table:
/// identity law, Latin square, associativity (Light's test over the
/// generating set), and that the generators actually generate.
class Group {
public:
    static Group from_table(std::string label, int order, std::vector<Elem> table,
                            std::vector<Elem> generators);

    int order() const { return order_; }
    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem inverse(Elem a) const { return inverse_[a]; }
    int element_order(Elem a) const { return element_orders_[a]; }
    const std::vector<Elem>& generators() const { return generators_; }
    const std::string& label() const { return label_; }
    bool abelian() const { return abelian_; }

    /// Sorted multiset of element orders; an isomorphism invariant.
    const std::vector<int>& order_profile() const { return profile_; }

    Group relabeled(std::string label) const {
        Group g = *this;
        g.label_ = std::move(label);
        return g;
    }

private:
    Group() = default;

    int order_ = 0;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    std::vector<int> element_orders_;
    std::vector<int> profile_;
    std::vector<Elem> generators_;
    std::string label_;
    bool abelian_ = true;
};

namespace detail {

/// Elements reachable from the identity by multiplying with `gens`.
inline std::vector<Elem> table_closure(int order, const std::vector<Elem>& table,
                                       const std::vector<Elem>& gens) {
    Bits seen(order);
    seen.set(0);
    std::vector<Elem> list{0};
    for (Elem g : gens)
        if (!seen.test(g)) {
            seen.set(g);
            list.push_back(g);
        }
    auto at = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * order + b]; };
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (Elem g : gens) {
            Elem p = at(list[i], g);
            if (!seen.test(p)) {
                seen.set(p);
                list.push_back(p);
            }
            Elem q = at(g, list[i]);
            if (!seen.test(q)) {
                seen.set(q);
                list.push_back(q);
            }
        }
    }
    return list;
}

}  // namespace detail

inline Group Group::from_table(std::string label, int order, std::vector<Elem> table,
                               std::vector<Elem> generators) {
    if (order < 1 || order > kMaxOrder)
        throw Error(Errc::size_cap, "group order " + std::to_string(order) + " out of range");
    if (table.size() != static_cast<std::size_t>(order) * order)
        throw Error(Errc::data_integrity, "table size mismatch for " + label);

    auto at = [&](Elem a, Elem b) -> Elem { return table[static_cast<std::size_t>(a) * order + b]; };

    for (int x = 0; x < order; ++x) {
        if (at(0, static_cast<Elem>(x)) != x || at(static_cast<Elem>(x), 0) != x)
            throw Error(Errc::data_integrity, "identity law fails in " + label);
    }

    // Latin square: every row and column is a permutation.
    std::vector<int> stamp(order, -1);
    for (int r = 0; r < order; ++r) {
        for (int c = 0; c < order; ++c) {
            Elem v = at(static_cast<Elem>(r), static_cast<Elem>(c));
            if (v >= order || stamp[v] == r)
                throw Error(Errc::data_integrity, "row " + std::to_string(r) + " of " + label +
                                                      " is not a permutation");
            stamp[v] = r;
        }
    }
    std::fill(stamp.begin(), stamp.end(), -1);
    for (int c = 0; c < order; ++c) {
        for (int r = 0; r < order; ++r) {
            Elem v = at(static_cast<Elem>(r), static_cast<Elem>(c));
            if (stamp[v] == c)
                throw Error(Errc::data_integrity, "column " + std::to_string(c) + " of " + label +
                                                      " is not a permutation");
            stamp[v] = c;
        }
    }

    // Dedup generators, drop the identity.
    std::vector<Elem> gens;
    for (Elem g : generators) {
        if (g >= order) throw Error(Errc::data_integrity, "generator out of range in " + label);
        if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }

    if (static_cast<int>(detail::table_closure(order, table, gens).size()) != order)
        throw Error(Errc::data_integrity, "generators do not generate " + label);

    // Light's associativity test: (a*c)*b == a*(c*b) for every generator c
    // extends to all triples once the generators generate.
    for (Elem c : gens) {
        for (int a = 0; a < order; ++a) {
            Elem ac = at(static_cast<Elem>(a), c);
            for (int b = 0; b < order; ++b) {
                if (at(ac, static_cast<Elem>(b)) !=
                    at(static_cast<Elem>(a), at(c, static_cast<Elem>(b))))
                    throw Error(Errc::data_integrity, "associativity fails in " + label);
            }
        }
    }

    Group g;
    g.order_ = order;
    g.table_ = std::move(table);
    g.generators_ = std::move(gens);
    g.label_ = std::move(label);

    g.inverse_.resize(order);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) {
                g.inverse_[a] = static_cast<Elem>(b);
                break;
            }
        }
    }

    g.element_orders_.resize(order);
    for (int a = 0; a < order; ++a) {
        int ord = 1;
        Elem x = static_cast<Elem>(a);
        while (x != 0) {
            x = g.mul(x, static_cast<Elem>(a));
            ++ord;
        }
        g.element_orders_[a] = ord;
        if (order % ord != 0)
            throw Error(Errc::data_integrity, "element order does not divide group order in " + label);
    }
    g.profile_ = g.element_orders_;
    std::sort(g.profile_.begin(), g.profile_.end());

    g.abelian_ = true;
    for (int a = 0; a < order && g.abelian_; ++a)
        for (int b = a + 1; b < order; ++b)
            if (g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) !=
                g.mul(static_cast<Elem>(b), static_cast<Elem>(a))) {
                g.abelian_ = false;
                break;
            }

    return g;
}

/// Z_n with element i at index i.
inline Group cyclic(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "cyclic: order must be positive");
    if (n > kMaxOrder) throw Error(Errc::size_cap, "cyclic: order exceeds cap");
    std::vector<Elem> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = static_cast<Elem>((a + b) % n);
    std::vector<Elem> gens;
    if (n > 1) gens.push_back(1);
    return Group::from_table("C" + std::to_string(n), n, std::move(table), std::move(gens));
}

/// Componentwise product; element (x, y) sits at index x*|h| + y.
inline Group direct_product(const Group& g, const Group& h) {
    long n = static_cast<long>(g.order()) * h.order();
    if (n > kMaxOrder) throw Error(Errc::size_cap, "direct_product: order exceeds cap");
    int hn = h.order(), nn = static_cast<int>(n);
    std::vector<Elem> table(static_cast<std::size_t>(nn) * nn);
    for (int a = 0; a < nn; ++a) {
        int ax = a / hn, ay = a % hn;
        for (int b = 0; b < nn; ++b) {
            int bx = b / hn, by = b % hn;
            table[static_cast<std::size_t>(a) * nn + b] = static_cast<Elem>(
                g.mul(static_cast<Elem>(ax), static_cast<Elem>(bx)) * hn +
                h.mul(static_cast<Elem>(ay), static_cast<Elem>(by)));
        }
    }
    std::vector<Elem> gens;
    for (Elem x : g.generators()) gens.push_back(static_cast<Elem>(x * hn));
    for (Elem y : h.generators()) gens.push_back(y);
    return Group::from_table(g.label() + "x" + h.label(), nn, std::move(table), std::move(gens));
}

/// <a, b | a^n, b^m, b a b^-1 = a^k>: the cyclic group C_m acting on C_n
/// through x -> x^k. Element (i, j) = a^i b^j sits at index i*m + j.
inline Group semidirect_cyclic(int n, int m, int k) {
    if (n < 1 || m < 1 || k < 0)
        throw Error(Errc::invalid_argument, "semidirect_cyclic: orders must be positive");
    long total = static_cast<long>(n) * m;
    if (total > kMaxOrder) throw Error(Errc::size_cap, "semidirect_cyclic: order exceeds cap");
    k %= n;
    if (std::gcd(k, n) != 1)
        throw Error(Errc::invalid_argument, "semidirect_cyclic: multiplier is not an automorphism");
    if (pow_mod(k, m, n) != 1 % n)
        throw Error(Errc::invalid_argument,
                    "semidirect_cyclic: multiplier order does not divide actor order");

    std::vector<int> kpow(m);  // k^j mod n
    kpow[0] = 1 % n;
    for (int j = 1; j < m; ++j) kpow[j] = static_cast<int>(static_cast<long>(kpow[j - 1]) * k % n);

    int nn = static_cast<int>(total);
    std::vector<Elem> table(static_cast<std::size_t>(nn) * nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < m; ++t) {
                    int ri = (i + static_cast<int>(static_cast<long>(s) * kpow[j] % n)) % n;
                    int rj = (j + t) % m;
                    table[static_cast<std::size_t>(i * m + j) * nn + (s * m + t)] =
                        static_cast<Elem>(ri * m + rj);
                }
    std::vector<Elem> gens;
    if (n > 1) gens.push_back(static_cast<Elem>(m));  // a = (1, 0)
    if (m > 1) gens.push_back(1);                     // b = (0, 1)
    std::string label =
        "C" + std::to_string(m) + ":C" + std::to_string(n) + "[" + std::to_string(k) + "]";
    return Group::from_table(std::move(label), nn, std::move(table), std::move(gens));
}

/// Dihedral group of the given ORDER (even, >= 4).
inline Group dihedral(int order) {
    if (order > kMaxOrder) throw Error(Errc::size_cap, "dihedral: order exceeds cap");
    if (order < 4 || order % 2 != 0)
        throw Error(Errc::invalid_argument, "dihedral: order must be even and at least 4");
    int m = order / 2;
    return semidirect_cyclic(m, 2, (m - 1) % m).relabeled("D" + std::to_string(order));
}

/// Generalized quaternion group of the given ORDER (power of two, >= 8).
inline Group quaternion(int order) {
    if (order > kMaxOrder) throw Error(Errc::size_cap, "quaternion: order exceeds cap");
    if (order < 8 || (order & (order - 1)) != 0)
        throw Error(Errc::invalid_argument, "quaternion: order must be a power of two, at least 8");
    int m = order / 2;  // order of a; b^2 = a^(m/2), b a b^-1 = a^-1
    std::vector<Elem> table(static_cast<std::size_t>(order) * order);
    auto idx = [](int i, int j) { return static_cast<Elem>(i * 2 + j); };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j)
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < 2; ++t) {
                    int ri, rj;
                    if (j == 0) {
                        ri = (i + s) % m;
                        rj = t;
                    } else {
                        ri = (i - s + m) % m;
                        if (t == 0) {
                            rj = 1;
                        } else {
                            ri = (ri + m / 2) % m;
                            rj = 0;
                        }
                    }
                    table[static_cast<std::size_t>(idx(i, j)) * order + idx(s, t)] = idx(ri, rj);
                }
    std::vector<Elem> gens{idx(1, 0), idx(0, 1)};
    return Group::from_table("Q" + std::to_string(order), order, std::move(table), std::move(gens));
}

enum class NamedGroup {
    e27,  // extraspecial of order 27 and exponent 9
    m16,  // modular group of order 16
};

inline Group named(NamedGroup which) {
    switch (which) {
        case NamedGroup::e27:
            return semidirect_cyclic(9, 3, 4).relabeled("E27");
        case NamedGroup::m16:
            return semidirect_cyclic(8, 2, 5).relabeled("M16");
    }
    throw Error(Errc::invalid_argument, "named: unknown group");
}

/// Group generated by permutations of [0, degree); elements are the closure,
/// identity first, in breadth-first discovery order.
inline Group from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                               std::string label = "") {
    if (degree < 1) throw Error(Errc::invalid_argument, "from_permutations: degree must be positive");
    for (const auto& p : gens) {
        if (static_cast<int>(p.size()) != degree)
            throw Error(Errc::invalid_argument, "from_permutations: generator degree mismatch");
        std::vector<bool> seen(degree, false);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v])
                throw Error(Errc::invalid_argument, "from_permutations: generator is not a bijection");
            seen[v] = true;
        }
    }

    std::vector<int> identity(degree);
    std::iota(identity.begin(), identity.end(), 0);

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    elems.push_back(identity);
    index[identity] = 0;

    auto compose = [degree](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> r(degree);
        for (int i = 0; i < degree; ++i) r[i] = f[g[i]];
        return r;
    };

    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            auto p = compose(elems[i], g);
            if (index.emplace(p, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(p));
                if (static_cast<int>(elems.size()) > kMaxOrder)
                    throw Error(Errc::size_cap, "from_permutations: closure exceeds cap");
            }
        }
    }

    int n = static_cast<int>(elems.size());
    std::vector<Elem> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] =
                static_cast<Elem>(index.at(compose(elems[a], elems[b])));

    std::vector<Elem> gen_idx;
    for (const auto& g : gens) gen_idx.push_back(static_cast<Elem>(index.at(g)));
    if (label.empty()) label = "perm" + std::to_string(degree);
    return Group::from_table(std::move(label), n, std::move(table), std::move(gen_idx));
}

namespace detail {

/// Greedy generating set over a raw table: scan elements in index order,
/// keep those that enlarge the closure. Deterministic; not minimal.
inline std::vector<Elem> greedy_generators(int n, const std::vector<Elem>& table) {
    std::vector<Elem> gens;
    if (n == 1) return gens;
    auto at = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * n + b]; };
    Bits seen(n);
    seen.set(0);
    std::vector<Elem> list{0};
    for (int x = 1; x < n && static_cast<int>(list.size()) < n; ++x) {
        if (seen.test(x)) continue;
        gens.push_back(static_cast<Elem>(x));
        seen.set(x);
        list.push_back(static_cast<Elem>(x));
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = 0; j < list.size(); ++j) {
                Elem p = at(list[i], list[j]);
                if (!seen.test(p)) {
                    seen.set(p);
                    list.push_back(p);
                }
            }
    }
    return gens;
}

}  // namespace detail

inline std::vector<Elem> find_generating_set(const Group& g) {
    std::vector<Elem> table(static_cast<std::size_t>(g.order()) * g.order());
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            table[static_cast<std::size_t>(a) * g.order() + b] =
                g.mul(static_cast<Elem>(a), static_cast<Elem>(b));
    return detail::greedy_generators(g.order(), table);
}

namespace detail {

/// |centralizer(x)| for every x; an isomorphism invariant per element.
inline std::vector<int> centralizer_sizes(const Group& g) {
    int n = g.order();
    std::vector<int> out(n, 0);
    for (int x = 0; x < n; ++x) {
        int c = 0;
        for (int y = 0; y < n; ++y)
            if (g.mul(static_cast<Elem>(x), static_cast<Elem>(y)) ==
                g.mul(static_cast<Elem>(y), static_cast<Elem>(x)))
                ++c;
        out[x] = c;
    }
    return out;
}

/// (element order, centralizer size) tag; images must share it.
inline std::vector<long> element_classes(const Group& g, const std::vector<int>& cz) {
    std::vector<long> cls(g.order());
    for (int x = 0; x < g.order(); ++x)
        cls[x] = static_cast<long>(g.element_order(static_cast<Elem>(x))) * (kMaxOrder + 1) + cz[x];
    return cls;
}

/// Generating sequence ordered so elements of the rarest invariant class
/// come first; keeps the isomorphism search fail-fast.
inline std::vector<Elem> iso_generating_sequence(const Group& g, const std::vector<long>& cls) {
    int n = g.order();
    std::map<long, int> freq;
    for (int x = 0; x < n; ++x) ++freq[cls[x]];

    std::vector<Elem> seq;
    Bits closed(n);
    closed.set(0);
    std::vector<Elem> list{0};
    while (static_cast<int>(list.size()) < n) {
        int best = -1;
        for (int x = 1; x < n; ++x) {
            if (closed.test(x)) continue;
            if (best == -1 || freq[cls[x]] < freq[cls[best]]) best = x;
        }
        seq.push_back(static_cast<Elem>(best));
        closed.set(best);
        list.push_back(static_cast<Elem>(best));
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = 0; j < list.size(); ++j) {
                Elem p = g.mul(list[i], list[j]);
                if (!closed.test(p)) {
                    closed.set(p);
                    list.push_back(p);
                }
            }
    }
    return seq;
}

struct IsoState {
    std::vector<int> g2h, h2g;
    std::vector<Elem> mapped;  // multiplication-closed set with defined images
};

/// Extend the partial map with gens[k] -> image and propagate products.
inline bool iso_extend(const Group& g, const Group& h, IsoState& st, Elem a, Elem b) {
    std::vector<std::pair<Elem, Elem>> todo{{a, b}};
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        if (st.g2h[x] != -1) {
            if (st.g2h[x] != y) return false;
            continue;
        }
        if (st.h2g[y] != -1) return false;
        if (g.element_order(x) != h.element_order(y)) return false;
        st.g2h[x] = y;
        st.h2g[y] = x;
        for (Elem m : st.mapped) {
            Elem im = static_cast<Elem>(st.g2h[m]);
            todo.emplace_back(g.mul(m, x), h.mul(im, y));
            todo.emplace_back(g.mul(x, m), h.mul(y, im));
        }
        todo.emplace_back(g.mul(x, x), h.mul(y, y));
        st.mapped.push_back(x);
    }
    return true;
}

inline bool iso_search(const Group& g, const Group& h, const std::vector<long>& cls_g,
                       const std::vector<long>& cls_h, const std::vector<Elem>& seq, std::size_t k,
                       IsoState& st) {
    if (k == seq.size()) {
        if (static_cast<int>(st.mapped.size()) != g.order()) return false;
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                if (st.g2h[g.mul(static_cast<Elem>(a), static_cast<Elem>(b))] !=
                    h.mul(static_cast<Elem>(st.g2h[a]), static_cast<Elem>(st.g2h[b])))
                    return false;
        return true;
    }
    Elem x = seq[k];
    if (st.g2h[x] != -1) return iso_search(g, h, cls_g, cls_h, seq, k + 1, st);
    long want = cls_g[x];
    for (int y = 0; y < h.order(); ++y) {
        if (cls_h[y] != want || st.h2g[y] != -1) continue;
        IsoState saved = st;
        if (iso_extend(g, h, st, x, static_cast<Elem>(y)) &&
            iso_search(g, h, cls_g, cls_h, seq, k + 1, st))
            return true;
        st = std::move(saved);
    }
    return false;
}

}  // namespace detail

/// Backtracking isomorphism test over generator images, pruned by element
/// order and centralizer size. Abelian groups short-circuit: their order
/// profile determines them.
inline bool are_isomorphic(const Group& g, const Group& h) {
    if (g.order() != h.order()) return false;
    if (g.abelian() != h.abelian()) return false;
    if (g.order_profile() != h.order_profile()) return false;
    if (g.order() == 1) return true;
    if (g.abelian()) return true;

    auto cz_g = detail::centralizer_sizes(g);
    auto cz_h = detail::centralizer_sizes(h);
    auto cls_g = detail::element_classes(g, cz_g);
    auto cls_h = detail::element_classes(h, cz_h);
    {
        std::vector<long> a = cls_g, b = cls_h;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    auto seq = detail::iso_generating_sequence(g, cls_g);
    detail::IsoState st;
    st.g2h.assign(g.order(), -1);
    st.h2g.assign(h.order(), -1);
    if (!detail::iso_extend(g, h, st, 0, 0)) return false;
    return detail::iso_search(g, h, cls_g, cls_h, seq, 0, st);
}

}  // namespace sublat

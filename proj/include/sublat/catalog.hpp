#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sublat/catalog_data.hpp"
#include "sublat/group.hpp"
#include "sublat/lattice.hpp"
#include "sublat/similarity.hpp"
#include "sublat/structure.hpp"

namespace sublat {

/// One catalog group: permutation generators in disjoint cycle notation.
///
/// Line format, UTF-8, one entry per line:
///   <order> <index> <name> <degree>; <gen>; <gen>; ...
/// where each <gen> is a permutation of 0-based points, e.g. "(0 1 2)(3 4)",
/// and the identity is written "()". Lines starting with '#' are comments.
struct CatalogEntry {
    int order = 0;
    int index = 0;  // 1-based position within its order
    std::string name;
    int degree = 0;
    std::vector<std::vector<int>> generators;
};

namespace detail {

inline std::vector<int> parse_cycles(const std::string& text, int degree, const std::string& where) {
    std::vector<int> perm(degree);
    for (int i = 0; i < degree; ++i) perm[i] = i;
    std::vector<bool> used(degree, false);

    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        if (text[i] != '(') throw Error(Errc::parse, where + ": expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!isdigit(static_cast<unsigned char>(text[i])))
                throw Error(Errc::parse, where + ": expected point number");
            int v = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v >= degree) throw Error(Errc::parse, where + ": point exceeds degree");
            if (used[v]) throw Error(Errc::parse, where + ": repeated point in cycle notation");
            used[v] = true;
            cycle.push_back(v);
            skip_ws();
        }
        if (i >= text.size()) throw Error(Errc::parse, where + ": unterminated cycle");
        ++i;  // ')'
        for (std::size_t k = 0; k < cycle.size(); ++k)
            perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
        any = true;
        skip_ws();
    }
    if (!any) throw Error(Errc::parse, where + ": empty generator");
    return perm;
}

inline std::string format_cycles(const std::vector<int>& perm) {
    int degree = static_cast<int>(perm.size());
    std::vector<bool> seen(degree, false);
    std::string out;
    for (int s = 0; s < degree; ++s) {
        if (seen[s] || perm[s] == s) continue;
        out += "(";
        int x = s;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(x);
            seen[x] = true;
            x = perm[x];
            first = false;
        } while (x != s);
        out += ")";
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace detail

inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::size_t semi = line.find(';');
        if (semi == std::string::npos) throw Error(Errc::parse, where + ": missing ';' after header");
        std::istringstream head(line.substr(0, semi));
        CatalogEntry e;
        if (!(head >> e.order >> e.index >> e.name >> e.degree))
            throw Error(Errc::parse, where + ": header must be <order> <index> <name> <degree>");
        std::string rest;
        if (head >> rest) throw Error(Errc::parse, where + ": unexpected token in header");
        if (e.order < 1 || e.order > kMaxOrder || e.degree < 1)
            throw Error(Errc::parse, where + ": order or degree out of range");

        std::string tail = line.substr(semi + 1);
        std::size_t pos = 0;
        while (pos <= tail.size()) {
            std::size_t next = tail.find(';', pos);
            std::string piece = tail.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (piece.find_first_not_of(" \t\r") != std::string::npos)
                e.generators.push_back(detail::parse_cycles(piece, e.degree, where));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (e.generators.empty()) throw Error(Errc::parse, where + ": entry has no generators");
        entries.push_back(std::move(e));
    }
    return entries;
}

inline std::string format_catalog_entry(const CatalogEntry& e) {
    std::string out = std::to_string(e.order) + " " + std::to_string(e.index) + " " + e.name + " " +
                      std::to_string(e.degree);
    for (const auto& g : e.generators) out += "; " + detail::format_cycles(g);
    return out;
}

inline Group build_entry(const CatalogEntry& e) { return from_permutations(e.degree, e.generators, e.name); }

/// Integrity: declared orders match closures, identities are unique, and
/// entries of equal order are pairwise non-isomorphic.
inline std::vector<Group> check_catalog_integrity(const std::vector<CatalogEntry>& entries) {
    std::set<std::pair<int, int>> ids;
    std::set<std::string> names;
    std::vector<Group> groups;
    groups.reserve(entries.size());
    for (const auto& e : entries) {
        if (!ids.emplace(e.order, e.index).second)
            throw Error(Errc::data_integrity,
                        "catalog: duplicate id " + std::to_string(e.order) + "." + std::to_string(e.index));
        if (!names.insert(e.name).second)
            throw Error(Errc::data_integrity, "catalog: duplicate name " + e.name);
        Group g = build_entry(e);
        if (g.order() != e.order)
            throw Error(Errc::data_integrity, "catalog: " + e.name + " declares order " +
                                                  std::to_string(e.order) + " but generates " +
                                                  std::to_string(g.order()));
        groups.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i + 1; j < groups.size(); ++j)
            if (groups[i].order() == groups[j].order() && are_isomorphic(groups[i], groups[j]))
                throw Error(Errc::data_integrity, "catalog: " + entries[i].name + " and " +
                                                      entries[j].name + " are isomorphic");
    return groups;
}

/// Number of isomorphism types per order, for the orders the embedded
/// catalog covers.
inline const std::map<int, int>& groups_per_order() {
    static const std::map<int, int> counts{
        {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},  {9, 2},
        {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14}, {17, 1}, {18, 5},
        {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {24, 15}, {27, 5}};
    return counts;
}

/// All isomorphism types of groups of order 1..24 and 27, validated on load.
inline std::vector<CatalogEntry> load_embedded() {
    auto entries = parse_catalog(embedded_catalog_text());
    check_catalog_integrity(entries);
    std::map<int, int> counts;
    for (const auto& e : entries) ++counts[e.order];
    if (counts != groups_per_order())
        throw Error(Errc::data_integrity, "embedded catalog does not cover the expected orders");
    return entries;
}

inline std::vector<CatalogEntry> load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_argument, "cannot open catalog file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto entries = parse_catalog(buf.str());
    check_catalog_integrity(entries);
    return entries;
}

struct CensusRow {
    CatalogEntry entry;
    int subgroup_count = 0;
    bool tilde_fixed = false;
};

/// Subgroup count and tilde-fixedness for every entry, sorted by (order, index).
inline std::vector<CensusRow> census(const std::vector<CatalogEntry>& entries) {
    std::vector<CensusRow> rows;
    rows.reserve(entries.size());
    for (const auto& e : entries) {
        Group g = build_entry(e);
        rows.push_back(CensusRow{e, count_subgroups(g), is_tilde_fixed(g)});
    }
    std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.entry.order != b.entry.order) return a.entry.order < b.entry.order;
        return a.entry.index < b.entry.index;
    });
    return rows;
}

/// One row of the verified classification: a group with no cyclic central
/// Sylow factor and at most twelve subgroups.
struct ClassificationRow {
    std::string name;
    int order = 0;
    int count = 0;
    std::function<Group()> build;
};

/// The complete classification, verified by the exhaustive census over the
/// embedded catalog plus direct checks of the representatives that fall
/// outside the embedded order range.
inline const std::vector<ClassificationRow>& verified_classification() {
    static const std::vector<ClassificationRow> rows = [] {
        std::vector<ClassificationRow> r;
        auto add = [&](std::string name, int order, int count, std::function<Group()> build) {
            r.push_back({std::move(name), order, count, std::move(build)});
        };
        add("C1", 1, 1, [] { return cyclic(1); });
        add("C2xC2", 4, 5, [] { return direct_product(cyclic(2), cyclic(2)); });
        add("S3", 6, 6, [] { return semidirect_cyclic(3, 2, 2); });
        add("Q8", 8, 6, [] { return quaternion(8); });
        add("C3xC3", 9, 6, [] { return direct_product(cyclic(3), cyclic(3)); });
        add("C2xC4", 8, 8, [] { return direct_product(cyclic(2), cyclic(4)); });
        add("C5xC5", 25, 8, [] { return direct_product(cyclic(5), cyclic(5)); });
        add("D10", 10, 8, [] { return dihedral(10); });
        add("C4:C3[2]", 12, 8, [] { return semidirect_cyclic(3, 4, 2); });
        add("D8", 8, 10, [] { return dihedral(8); });
        add("C3xC9", 27, 10, [] { return direct_product(cyclic(3), cyclic(9)); });
        add("C7xC7", 49, 10, [] { return direct_product(cyclic(7), cyclic(7)); });
        add("D14", 14, 10, [] { return dihedral(14); });
        add("A4", 12, 10, [] { return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"); });
        add("C3:C7[2]", 21, 10, [] { return semidirect_cyclic(7, 3, 2); });
        add("C4:C5[4]", 20, 10, [] { return semidirect_cyclic(5, 4, 4); });
        add("C8:C3[2]", 24, 10, [] { return semidirect_cyclic(3, 8, 2); });
        add("E27", 27, 10, [] { return named(NamedGroup::e27); });
        add("C2xC8", 16, 11, [] { return direct_product(cyclic(2), cyclic(8)); });
        add("Q16", 16, 11, [] { return quaternion(16); });
        add("M16", 16, 11, [] { return named(NamedGroup::m16); });
        add("C4:C7[6]", 28, 12, [] { return semidirect_cyclic(7, 4, 6); });
        add("C9:C7[2]", 63, 12, [] { return semidirect_cyclic(7, 9, 2); });
        add("C8:C5[4]", 40, 12, [] { return semidirect_cyclic(5, 8, 4); });
        add("C16:C3[2]", 48, 12, [] { return semidirect_cyclic(3, 16, 2); });
        return r;
    }();
    return rows;
}

struct CensusCheck {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Compare census results against the verified classification. Every
/// tilde-fixed row with at most 12 subgroups must match a classification
/// row up to isomorphism; classification rows whose order lies in
/// `complete_orders` must all be present.
inline CensusCheck check_census(const std::vector<CatalogEntry>& entries,
                                const std::vector<CensusRow>& rows,
                                const std::set<int>& complete_orders) {
    CensusCheck out;
    const auto& expected = verified_classification();
    std::vector<bool> matched(expected.size(), false);
    for (const auto& row : rows) {
        if (!row.tilde_fixed || row.subgroup_count > 12) continue;
        Group g = build_entry(row.entry);
        bool found = false;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (expected[i].order != row.entry.order || expected[i].count != row.subgroup_count)
                continue;
            if (are_isomorphic(g, expected[i].build())) {
                if (matched[i])
                    out.problems.push_back("duplicate match for " + expected[i].name);
                matched[i] = true;
                found = true;
                break;
            }
        }
        if (!found)
            out.problems.push_back("unexpected group " + row.entry.name + " (order " +
                                   std::to_string(row.entry.order) + ", " +
                                   std::to_string(row.subgroup_count) + " subgroups)");
    }
    (void)entries;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (!matched[i] && complete_orders.count(expected[i].order))
            out.problems.push_back("missing group " + expected[i].name + " (order " +
                                   std::to_string(expected[i].order) + ", " +
                                   std::to_string(expected[i].count) + " subgroups)");
    return out;
}

/// The inventory behind the sequences: tilde-fixed census survivors plus the
/// classification rows outside the embedded order range.
inline std::vector<InventoryEntry> standard_inventory() {
    auto entries = load_embedded();
    auto rows = census(entries);
    std::vector<InventoryEntry> inv;
    for (const auto& r : rows)
        if (r.tilde_fixed && r.subgroup_count <= 12)
            inv.push_back(InventoryEntry{std::make_shared<const Group>(build_entry(r.entry)),
                                         r.subgroup_count});
    const auto& covered = groups_per_order();
    for (const auto& row : verified_classification()) {
        if (covered.count(row.order)) continue;
        Group g = row.build().relabeled(row.name);
        int count = count_subgroups(g);
        if (count != row.count || !is_tilde_fixed(g))
            throw Error(Errc::data_integrity, "classification row " + row.name + " failed verification");
        inv.push_back(InventoryEntry{std::make_shared<const Group>(std::move(g)), count});
    }
    return inv;
}

}  // namespace sublat

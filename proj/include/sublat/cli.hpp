#pragma once

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sublat/catalog.hpp"
#include "sublat/formulas.hpp"
#include "sublat/group.hpp"
#include "sublat/lattice.hpp"
#include "sublat/similarity.hpp"
#include "sublat/spec_parser.hpp"
#include "sublat/structure.hpp"

namespace sublat {

inline nlohmann::ordered_json lattice_to_json(const Group& g, const SubgroupLattice& lat) {
    nlohmann::ordered_json j;
    j["group"] = g.label();
    j["order"] = g.order();
    j["subgroups"] = nlohmann::ordered_json::array();
    for (const auto& s : lat.subgroups) {
        nlohmann::ordered_json js;
        js["order"] = s.order;
        js["members"] = s.member_list();
        js["normal"] = s.normal;
        j["subgroups"].push_back(std::move(js));
    }
    return j;
}

namespace cli_detail {

inline int run_count(const std::string& spec, std::ostream& out) {
    out << count_subgroups(build_group(parse_spec(spec))) << "\n";
    return 0;
}

inline int run_lattice(const std::string& spec, bool dot, bool json, std::ostream& out,
                       std::ostream& err) {
    if (dot == json) {
        err << "lattice: pass exactly one of --dot or --json\n";
        return 2;
    }
    Group g = build_group(parse_spec(spec));
    auto lat = all_subgroups(g);
    if (dot)
        out << dot_export(lat);
    else
        out << lattice_to_json(g, lat).dump(2) << "\n";
    return 0;
}

inline int run_verify_formulas(int max_order, std::ostream& out) {
    FormulaReport rep = cross_validate(max_order);
    out << "family     params                     order  formula  enumerated  status\n";
    for (const auto& r : rep.rows) {
        std::ostringstream line;
        line << std::left << std::setw(11) << r.family << std::setw(27) << r.params
             << std::setw(7) << r.order << std::setw(9) << r.expected << std::setw(12) << r.actual
             << (r.pass ? "ok" : "MISMATCH");
        out << line.str() << "\n";
    }

    // the C_{p^a} x| C_{q^b} counts laid out per q, rows a, columns b
    for (auto [q, amax] : {std::pair<int, int>{3, 5}, {5, 4}, {7, 3}}) {
        out << "\nq = " << q << "      b=1  b=2\n";
        for (int a = 1; a <= amax; ++a) {
            out << "  a = " << a << "   ";
            for (int b = 1; b <= 2; ++b)
                out << std::left << std::setw(5) << two_prime_count({2, q, a, b});
            out << "\n";
        }
    }

    out << "\n" << rep.rows.size() << " instances, "
        << (rep.all_pass ? "all agree" : "MISMATCHES FOUND") << "\n";
    return rep.all_pass ? 0 : 1;
}

inline int run_census(int max_order, const std::string& extra, std::ostream& out,
                      std::ostream& err) {
    auto entries = load_embedded();
    if (!extra.empty()) {
        auto more = load_file(extra);
        entries.insert(entries.end(), more.begin(), more.end());
    }
    std::vector<CatalogEntry> kept;
    for (const auto& e : entries)
        if (e.order <= max_order) kept.push_back(e);

    auto rows = census(kept);
    out << "order index name count tilde_fixed\n";
    for (const auto& r : rows)
        out << r.entry.order << " " << r.entry.index << " " << r.entry.name << " "
            << r.subgroup_count << " " << (r.tilde_fixed ? "yes" : "no") << "\n";

    std::set<int> complete;
    for (auto [o, c] : groups_per_order())
        if (o <= max_order) complete.insert(o);
    auto check = check_census(kept, rows, complete);
    if (check.ok()) {
        out << "census matches the verified classification\n";
        return 0;
    }
    for (const auto& p : check.problems) err << "census mismatch: " << p << "\n";
    return 1;
}

inline int run_sequence(int terms, bool tilde, std::ostream& out, std::ostream& err) {
    if (terms < 1 || terms > 12) {
        err << "sequence: --terms must be in 1..12\n";
        return 2;
    }
    auto inv = standard_inventory();
    auto seq = tilde ? tilde_sequence(inv) : class_sequence(inv);
    for (int i = 0; i < terms; ++i) out << seq[i] << (i + 1 < terms ? " " : "\n");
    return 0;
}

inline int run_classes(int n, bool as_json, std::ostream& out) {
    auto inv = standard_inventory();
    auto classes = enumerate_classes(n, inv);
    if (as_json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& c : classes) {
            nlohmann::ordered_json jc;
            jc["tilde"] = c.tilde_rep->order() == 1 ? "C1" : c.tilde_rep->label();
            jc["tilde_order"] = c.tilde_rep->order();
            jc["exponents"] = c.exponents;
            jc["subgroups"] = c.subgroup_count;
            jc["display"] = c.display_name;
            jc["representative"] = concrete_spec_string(c);
            j.push_back(std::move(jc));
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : classes)
            out << c.display_name << "  (representative " << concrete_spec_string(c) << ")\n";
        out << classes.size() << " classes with " << n << " subgroups\n";
    }
    return 0;
}

inline int run_similar(const std::string& a, const std::string& b, std::ostream& out) {
    bool s = similar(build_group(parse_spec(a)), build_group(parse_spec(b)));
    out << (s ? "true" : "false") << "\n";
    return 0;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 1 verification mismatch, 2 usage or parse error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "finite group subgroup-lattice toolkit\n"
        "group specs: Cn cyclic, Dn/Qn dihedral/quaternion of ORDER n, An/Sn of DEGREE n,\n"
        "E27, M16, Cm:Cn[k] semidirect (actor first), products with 'x' (e.g. Q8xC3)"};
    app.require_subcommand(1);

    std::string spec, spec_b, extra;
    int max_order = 512, terms = 12, n = 1;
    bool dot = false, json = false, tilde = false;

    auto* c_count = app.add_subcommand("count", "print the subgroup count of a group spec");
    c_count->add_option("spec", spec, "group spec, e.g. C2:C3[2] or Q8xC5")->required();

    auto* c_lat = app.add_subcommand("lattice", "emit the full subgroup lattice");
    c_lat->add_option("spec", spec)->required();
    c_lat->add_flag("--dot", dot, "DOT digraph of covering relations");
    c_lat->add_flag("--json", json, "JSON listing of all subgroups");

    auto* c_verify = app.add_subcommand("verify-formulas",
                                        "re-derive the closed-form subgroup counts by enumeration");
    c_verify->add_option("--max-order", max_order, "largest group order to build")
        ->default_val(512)
        ->check(CLI::Range(1, kMaxOrder));

    auto* c_census = app.add_subcommand("census", "subgroup census over the group catalog");
    c_census->add_option("--max-order", max_order)->default_val(kMaxOrder);
    c_census->add_option("--extra", extra, "additional catalog file (default: $SUBLAT_EXTRA_CATALOG)");

    auto* c_seq = app.add_subcommand("sequence", "similarity-class counts per subgroup count");
    c_seq->add_option("--terms", terms)->default_val(12);
    c_seq->add_flag("--tilde", tilde, "count tilde-fixed groups instead of classes");

    auto* c_classes = app.add_subcommand("classes", "similarity classes with a given subgroup count");
    c_classes->add_option("--n", n, "subgroup count")->required()->check(CLI::Range(1, 12));
    c_classes->add_flag("--json", json);

    auto* c_sim = app.add_subcommand("similar", "test whether two group specs are similar");
    c_sim->add_option("a", spec)->required();
    c_sim->add_option("b", spec_b)->required();

    std::vector<const char*> argv{"sublat"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_count)) return cli_detail::run_count(spec, out);
        if (app.got_subcommand(c_lat)) return cli_detail::run_lattice(spec, dot, json, out, err);
        if (app.got_subcommand(c_verify)) return cli_detail::run_verify_formulas(max_order, out);
        if (app.got_subcommand(c_census)) {
            if (extra.empty())
                if (const char* env = std::getenv("SUBLAT_EXTRA_CATALOG")) extra = env;
            return cli_detail::run_census(max_order, extra, out, err);
        }
        if (app.got_subcommand(c_seq)) return cli_detail::run_sequence(terms, tilde, out, err);
        if (app.got_subcommand(c_classes)) return cli_detail::run_classes(n, json, out);
        if (app.got_subcommand(c_sim)) return cli_detail::run_similar(spec, spec_b, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace sublat

#include "posetcoh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "posetcoh/errors.hpp"
#include "posetcoh/fuzz.hpp"
#include "posetcoh/io.hpp"

namespace posetcoh {

namespace {

struct RunConfig {
    std::string command;
    std::string poset_path;
    std::string document_path;
    std::string degrees;
    std::string order;
    bool oracle = false;
    bool no_shortcut = false;
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::size_t count = 100;
    std::size_t max_size = 8;
    std::size_t presheaves = 5;
    std::size_t size = 6;
    double density = 0.3;
};

struct DegreeRange {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

std::size_t parse_degree(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InputError("bad degree '" + s + "'");
    return std::stoul(s);
}

DegreeRange degree_range(const RunConfig& cfg, std::size_t default_hi) {
    if (cfg.degrees.empty()) return {0, default_hi};
    auto dots = cfg.degrees.find("..");
    DegreeRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_degree(cfg.degrees);
    } else {
        r.lo = parse_degree(cfg.degrees.substr(0, dots));
        r.hi = parse_degree(cfg.degrees.substr(dots + 2));
    }
    if (r.lo > r.hi) throw InputError("degree range '" + cfg.degrees + "' is empty");
    return r;
}

std::vector<std::size_t> parse_order(const std::string& text, const Poset& p) {
    std::vector<std::size_t> order;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto i = p.index_of(item);
        if (!i) throw InputError("--order mentions unknown element '" + item + "'");
        order.push_back(*i);
    }
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != p.size() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("--order must list every element exactly once");
    return order;
}

std::vector<std::size_t> identity_order(const Poset& p) {
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return order;
}

Json names_json(const Poset& p, const Subset& s) {
    Json a = Json::array();
    for (auto m : s.members()) a.push_back(p.name(m));
    return a;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
}

// Machine output goes through JSON; the human form is plain lines.
void emit(const RunConfig& cfg, std::ostream& out, const Json& machine, const std::string& human) {
    const std::string text = cfg.json ? machine.dump(2) + "\n" : human;
    if (cfg.out_path.empty()) out << text;
    else write_text(cfg.out_path, text);
}

Poset load_poset(const RunConfig& cfg) { return parse_poset(read_json_file(cfg.poset_path)); }

Presheaf load_presheaf(const RunConfig& cfg, const Poset& p) {
    std::filesystem::path doc(cfg.document_path);
    return parse_presheaf(read_json_file(doc), p, doc.parent_path());
}

// ---------------------------------------------------------------- commands

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    Poset p = load_poset(cfg);
    const std::size_t longest = p.height() + 1;
    std::ostringstream h;
    h << p.size() << " elements, " << p.covers().size() << " cover relations, longest chain " << longest << "\n";
    emit(cfg, out, Json{{"elements", p.size()}, {"cover_relations", p.covers().size()}, {"longest_chain", longest}},
         h.str());
    return 0;
}

int cmd_cuts(const RunConfig& cfg, std::ostream& out) {
    Poset p = load_poset(cfg);
    Json list = Json::array();
    std::ostringstream h;
    for (const auto& c : enumerate_cuts(p)) {
        list.push_back(Json{{"lower", names_json(p, c.lower)},
                            {"upper", names_json(p, c.upper)},
                            {"witness", names_json(p, c.witness)}});
        h << "lower " << subset_name(p, c.lower) << "  upper " << subset_name(p, c.upper) << "  witness "
          << subset_name(p, c.witness) << "\n";
    }
    emit(cfg, out, list, h.str());
    return 0;
}

int cmd_criterion(const RunConfig& cfg, std::ostream& out) {
    Poset p = load_poset(cfg);
    CriterionReport r = criterion(p, !cfg.no_shortcut);
    Json failures = Json::array();
    std::ostringstream h;
    h << (r.pass ? "PASS" : "FAIL") << ": " << r.cuts_examined << " cuts examined, shortcut "
      << to_string(r.shortcut) << "\n";
    for (const auto& f : r.failures) {
        failures.push_back(Json{{"lower", names_json(p, f.cut.lower)},
                                {"upper", names_json(p, f.cut.upper)},
                                {"witness", names_json(p, f.cut.witness)},
                                {"degree", f.degree},
                                {"group", group_json(f.group)}});
        h << "  cut lower " << subset_name(p, f.cut.lower) << " upper " << subset_name(p, f.cut.upper) << ": H_"
          << f.degree << " = " << f.group.to_string() << "\n";
    }
    emit(cfg, out,
         Json{{"verdict", r.pass ? "PASS" : "FAIL"},
              {"cuts_examined", r.cuts_examined},
              {"shortcut", to_string(r.shortcut)},
              {"failures", failures}},
         h.str());
    return r.pass ? 0 : 1;
}

int cmd_skeleton(const RunConfig& cfg, std::ostream& out) {
    Json doc = presheaf_skeleton(load_poset(cfg));
    const std::string text = doc.dump(2) + "\n";
    if (cfg.out_path.empty()) out << text;
    else write_text(cfg.out_path, text);
    return 0;
}

std::vector<CanonicalGroup> groups_of(const Complex& c, const DegreeRange& r) {
    std::vector<CanonicalGroup> g;
    for (std::size_t n = r.lo; n <= r.hi; ++n) g.push_back(c.homology_group(n));
    return g;
}

// Cech cohomology by the chosen route plus, under --oracle, every other route.
struct Routes {
    std::vector<CanonicalGroup> primary;
    std::vector<std::string> mismatches;
};

void compare_routes(Routes& r, const DegreeRange& range, const std::vector<CanonicalGroup>& other,
                    const std::string& label) {
    for (std::size_t k = 0; k < other.size(); ++k)
        if (!(other[k] == r.primary[k]))
            r.mismatches.push_back("degree " + std::to_string(range.lo + k) + ": " + label + " gives " +
                                   other[k].to_string() + " instead of " + r.primary[k].to_string());
}

Routes cech_routes(const RunConfig& cfg, const Presheaf& sh, const DegreeRange& range) {
    const Poset& p = sh.space();
    const bool ordered = !cfg.order.empty();
    const auto order = ordered ? parse_order(cfg.order, p) : identity_order(p);
    Routes r;
    Complex reduced = reduced_complex(sh.diagram(), range.hi);
    r.primary = ordered ? groups_of(cech_ordered_complex(sh, order), range) : groups_of(reduced, range);
    if (cfg.oracle) {
        compare_routes(r, range, groups_of(reduced, range), "intersection-poset limit");
        compare_routes(r, range, groups_of(cech_ordered_complex(sh, order), range), "ordered Cech complex");
        compare_routes(r, range, groups_of(full_complex_truncated(sh.diagram(), range.hi), range),
                       "unreduced complex");
    }
    return r;
}

Routes topos_routes(const RunConfig& cfg, const Presheaf& sh, const DegreeRange& range) {
    Diagram pulled = pullback_to_elements(sh);
    Routes r;
    r.primary = groups_of(reduced_complex(pulled, range.hi), range);
    if (cfg.oracle) compare_routes(r, range, groups_of(full_complex_truncated(pulled, range.hi), range), "unreduced complex");
    return r;
}

int report_mismatches(const std::vector<std::string>& m, std::ostream& err) {
    for (const auto& line : m) err << "oracle mismatch: " << line << "\n";
    return m.empty() ? 0 : 1;
}

int cmd_cohomology(const RunConfig& cfg, std::ostream& out, std::ostream& err, bool cech) {
    Poset p = load_poset(cfg);
    Presheaf sh = load_presheaf(cfg, p);
    DegreeRange range = degree_range(cfg, default_degree_cap(sh));
    Routes r = cech ? cech_routes(cfg, sh, range) : topos_routes(cfg, sh, range);
    Json rows = Json::array();
    std::ostringstream h;
    for (std::size_t k = 0; k < r.primary.size(); ++k) {
        rows.push_back(Json{{"degree", range.lo + k}, {"group", group_json(r.primary[k])}});
        h << "H^" << range.lo + k << " = " << r.primary[k].to_string() << "\n";
    }
    emit(cfg, out, Json{{"cohomology", cech ? "cech" : "topos"}, {"degrees", rows}}, h.str());
    return report_mismatches(r.mismatches, err);
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Poset p = load_poset(cfg);
    Presheaf sh = load_presheaf(cfg, p);
    DegreeRange range = degree_range(cfg, default_degree_cap(sh));
    ComparisonReport report = compare_report(sh, range.lo, range.hi);

    std::vector<std::string> mismatches;
    if (cfg.oracle) {
        Routes c = cech_routes(cfg, sh, range);
        Routes t = topos_routes(cfg, sh, range);
        for (std::size_t k = 0; k < report.degrees.size(); ++k) {
            const auto& d = report.degrees[k];
            if (!(c.primary[k] == d.cech))
                c.mismatches.push_back("degree " + std::to_string(d.degree) + ": comparison reports Cech " +
                                       d.cech.to_string() + ", routes give " + c.primary[k].to_string());
            if (!(t.primary[k] == d.topos))
                t.mismatches.push_back("degree " + std::to_string(d.degree) + ": comparison reports topos " +
                                       d.topos.to_string() + ", routes give " + t.primary[k].to_string());
        }
        mismatches = c.mismatches;
        mismatches.insert(mismatches.end(), t.mismatches.begin(), t.mismatches.end());
    }

    Json rows = Json::array();
    std::ostringstream h;
    for (const auto& d : report.degrees) {
        rows.push_back(Json{{"degree", d.degree},
                            {"cech", group_json(d.cech)},
                            {"topos", group_json(d.topos)},
                            {"lambda", matrix_json(d.lambda.matrix)},
                            {"iso", d.iso}});
        h << "degree " << d.degree << ": Cech " << d.cech.to_string() << ", topos " << d.topos.to_string()
          << ", lambda " << matrix_json(d.lambda.matrix).dump() << (d.iso ? " iso" : " NOT iso") << "\n";
    }
    const auto fail = report.first_failure();
    if (fail) h << "comparison fails first in degree " << *fail << "\n";
    else h << "all comparison maps are isomorphisms\n";
    Json machine{{"degrees", rows}, {"all_iso", report.all_iso()}};
    if (fail) machine["first_failure"] = *fail;
    emit(cfg, out, machine, h.str());
    if (report_mismatches(mismatches, err) != 0) return 1;
    return report.all_iso() ? 0 : 1;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out) {
    Poset p = load_poset(cfg);
    DegreeRange range = degree_range(cfg, p.height());
    Json rows = Json::array();
    std::ostringstream h;
    if (cfg.document_path.empty()) {
        Complex k = order_complex(p);
        for (std::size_t n = range.lo; n <= range.hi; ++n) {
            auto g = n <= k.top_degree() ? k.homology_group(n) : CanonicalGroup{};
            rows.push_back(Json{{"degree", n}, {"group", group_json(g)}});
            h << "H_" << n << " = " << g.to_string() << "\n";
        }
        emit(cfg, out, Json{{"order_complex", rows}}, h.str());
        return 0;
    }
    std::filesystem::path doc(cfg.document_path);
    Diagram f = parse_diagram(read_json_file(doc), p, doc.parent_path());
    Complex lim = reduced_complex(f, range.hi);
    Complex colim = colimit_complex(f);
    for (std::size_t n = range.lo; n <= range.hi; ++n) {
        auto l = lim.homology_group(n);
        auto c = n <= colim.top_degree() ? colim.homology_group(n) : CanonicalGroup{};
        rows.push_back(Json{{"degree", n}, {"lim", group_json(l)}, {"colim", group_json(c)}});
        h << "lim^" << n << " = " << l.to_string() << ", colim_" << n << " = " << c.to_string() << "\n";
    }
    emit(cfg, out, Json{{"diagram", rows}}, h.str());
    return 0;
}

int cmd_random_poset(const RunConfig& cfg, std::ostream& out) {
    Poset p = random_poset(cfg.size, cfg.density, *cfg.seed);
    const std::string text = serialize_poset(p).dump(2) + "\n";
    if (cfg.out_path.empty()) out << text;
    else write_text(cfg.out_path, text);
    return 0;
}

int cmd_fuzz(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FuzzParams params{cfg.count, cfg.max_size, cfg.presheaves, *cfg.seed};
    FuzzSummary s = run_fuzz(params);
    const std::string dir = cfg.out_path.empty() ? "fuzz-repro" : cfg.out_path;
    Json violations = Json::array();
    for (std::size_t k = 0; k < s.violations.size(); ++k) {
        FuzzViolation v = minimize(s.violations[k]);
        write_bundle(v, k, dir);
        violations.push_back(Json{{"kind", v.kind}, {"detail", v.detail}, {"elements", v.poset.size()}});
        err << "violation " << k << " (" << v.kind << "): " << v.detail << "; bundle in " << dir << "/violation-" << k
            << "\n";
    }
    std::ostringstream h;
    h << "fuzz seed " << params.seed << ": " << s.posets << " posets (" << s.passed << " PASS, " << s.failed
      << " FAIL), " << s.comparisons << " presheaves compared, " << s.violations.size() << " violations\n";
    Json machine{{"seed", params.seed},      {"posets", s.posets},           {"pass", s.passed},
                 {"fail", s.failed},         {"comparisons", s.comparisons}, {"violations", violations}};
    const std::string text = cfg.json ? machine.dump(2) + "\n" : h.str();
    out << text;
    return s.violations.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Cech and topos cohomology of finite posets"};
    app.require_subcommand(1);

    auto json_flag = [&](CLI::App* c) { c->add_flag("--json", cfg.json, "Machine-readable output"); };
    auto poset_arg = [&](CLI::App* c) { c->add_option("poset", cfg.poset_path, "Poset document")->required(); };
    auto out_opt = [&](CLI::App* c, const char* what) { c->add_option("--out", cfg.out_path, what); };

    auto* validate = app.add_subcommand("validate", "Check a poset document");
    poset_arg(validate);
    json_flag(validate);

    auto* cuts = app.add_subcommand("cuts", "List cuts with nonempty lower section");
    poset_arg(cuts);
    json_flag(cuts);

    auto* crit = app.add_subcommand("criterion", "Decide whether Cech and topos cohomology agree for every presheaf");
    poset_arg(crit);
    json_flag(crit);
    crit->add_flag("--no-shortcut", cfg.no_shortcut, "Examine every cut by homology");

    auto* skel = app.add_subcommand("skeleton", "Emit a presheaf template");
    poset_arg(skel);
    out_opt(skel, "Write the template here");

    std::vector<CLI::App*> cohomology_cmds;
    for (const char* name : {"cech", "topos", "compare"}) {
        auto* c = app.add_subcommand(name, std::string(name) == "cech"    ? "Cech cohomology of a presheaf"
                                           : std::string(name) == "topos" ? "Topos cohomology of the generated sheaf"
                                                                          : "Compare Cech and topos cohomology");
        poset_arg(c);
        c->add_option("presheaf", cfg.document_path, "Presheaf document")->required();
        c->add_option("--degrees", cfg.degrees, "Degree range A..B");
        c->add_flag("--oracle", cfg.oracle, "Cross-check with independent routes");
        if (std::string(name) != "topos") c->add_option("--order", cfg.order, "Total order for the ordered Cech complex");
        json_flag(c);
        cohomology_cmds.push_back(c);
    }

    auto* hom = app.add_subcommand("homology", "Order-complex homology, or limits and colimits of a diagram");
    poset_arg(hom);
    hom->add_option("diagram", cfg.document_path, "Diagram document (mode \"diagram\")");
    hom->add_option("--degrees", cfg.degrees, "Degree range A..B");
    json_flag(hom);

    auto* fz = app.add_subcommand("fuzz", "Check criterion soundness on random posets and presheaves");
    fz->add_option("--seed", cfg.seed, "Random seed")->required();
    fz->add_option("--count", cfg.count, "Number of posets");
    fz->add_option("--max-size", cfg.max_size, "Largest poset")->check(CLI::Range(1, 16));
    fz->add_option("--presheaves", cfg.presheaves, "Presheaves per PASS poset");
    out_opt(fz, "Directory for reproduction bundles");
    json_flag(fz);

    auto* rp = app.add_subcommand("random-poset", "Emit a random poset document");
    rp->add_option("--seed", cfg.seed, "Random seed")->required();
    rp->add_option("--size", cfg.size, "Number of elements")->check(CLI::Range(1, 64));
    rp->add_option("--density", cfg.density, "Comparability probability")->check(CLI::Range(0.0, 1.0));
    out_opt(rp, "Write the poset here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(cfg, out);
        if (cuts->parsed()) return cmd_cuts(cfg, out);
        if (crit->parsed()) return cmd_criterion(cfg, out);
        if (skel->parsed()) return cmd_skeleton(cfg, out);
        if (cohomology_cmds[0]->parsed()) return cmd_cohomology(cfg, out, err, true);
        if (cohomology_cmds[1]->parsed()) return cmd_cohomology(cfg, out, err, false);
        if (cohomology_cmds[2]->parsed()) return cmd_compare(cfg, out, err);
        if (hom->parsed()) return cmd_homology(cfg, out);
        if (fz->parsed()) return cmd_fuzz(cfg, out, err);
        if (rp->parsed()) return cmd_random_poset(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace posetcoh

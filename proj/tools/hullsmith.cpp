// hullsmith: construct GRS/EGRS codes over GF(q^2), compute hull dimensions
// exactly, apply the propagation rules, and derive EAQECC parameter tables.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or precondition error,
// 3 guarantee violation (exhausted hull-reduction search).

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hullsmith/catalog.hpp"
#include "hullsmith/verify.hpp"

using namespace hullsmith;

namespace {

int family_id(const std::string& name) {
    if (name == "full-field" || name == "1") return 1;
    if (name == "coset-h" || name == "2") return 2;
    if (name == "coset-2h" || name == "3") return 3;
    fail(errc::bad_parameters, "unknown family " + name);
}

std::string default_data_dir() {
    if (const char* env = std::getenv("HULLSMITH_DATA")) return env;
    return "data";
}

Inner parse_inner(const std::string& name, uint32_t e) {
    if (name == "euclidean") return Inner::euclidean();
    if (name == "hermitian") return Inner::hermitian();
    if (name == "galois") return Inner::galois(e);
    fail(errc::bad_parameters, "unknown inner product " + name);
}

struct TablesArgs {
    uint32_t q = 0, h = 0;
    std::string family;
    bool witness = false;
    std::string format = "csv";
    std::string out;
};

int cmd_build(uint32_t q, uint32_t h, const std::string& family, int k, std::string out_path) {
    FamilySpec spec{family_id(family), q, h};
    if (k <= 0) k = int(q);
    FamilyCodeResult res = build_family_code(spec, k);
    if (out_path.empty()) {
        std::ostringstream os;
        os << "code_q" << q << "_f" << spec.family << "_k" << k << ".json";
        out_path = os.str();
    }
    json desc = to_json(res.code);
    write_json_file(out_path, desc);
    Catalog cat;
    cat.append("code", desc);

    HullReport he = hull(res.code, Inner::euclidean());
    std::cout << "n=" << res.code.length() << " k=" << res.code.k
              << " hull_euclidean=" << he.hull_dim
              << " hull_hermitian=" << res.hull_report.hull_dim
              << " l_formula=" << res.bound.l << " t=" << res.bound.t
              << " mds_certificate=" << res.mds_certificate << "\n";
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_rule(const std::string& rule, const std::string& code_path, const std::string& lambda_arg,
             int target_hull, const std::string& direction, const std::string& inner_name,
             uint32_t galois_e, std::string out_path) {
    json code_json = load_json_file(code_path);
    AnyCode any = code_from_json(code_json);
    Catalog cat;
    if (out_path.empty()) out_path = rule + "_out.json";

    auto lambda_of = [&](const GrsCode& c) -> uint32_t {
        if (lambda_arg == "auto") {
            GrsCode base = normalize_k1(c);
            uint32_t sp = pair_product(base, base.k, base.k);
            require(sp != 0, errc::corner_not_cancellable,
                    "auto lambda needs g_k g_k^dagger != 0");
            return c.field->neg(sp);
        }
        return uint32_t(std::stoul(lambda_arg));
    };

    if (rule == "reduce") {
        Inner inner = parse_inner(inner_name, galois_e);
        require(target_hull >= 0, errc::bad_parameters, "--target-hull is required for reduce");
        ReduceResult res;
        try {
            if (any.grs)
                res = hull_reduce(*any.grs, target_hull, inner);
            else
                res = hull_reduce(*any.linear, target_hull, inner);
        } catch (const error& e) {
            if (e.code() == errc::search_exhausted) {
                json bundle{{"input", code_json},
                            {"target_hull", target_hull},
                            {"inner", inner.name()},
                            {"error", e.what()}};
                std::string bug = "hullsmith_bugreport_" + content_hash(bundle) + ".json";
                write_json_file(bug, bundle);
                std::cerr << "guarantee violation; bug report bundle written to " << bug << "\n";
            }
            throw;
        }
        json desc = res.grs ? to_json(*res.grs) : to_json(res.code);
        desc["hull_dim"] = res.final_hull.hull_dim;
        desc["gram_rank"] = res.final_hull.gram_rank;
        desc["steps"] = res.steps;
        write_json_file(out_path, desc);
        cat.append("outcome", desc);
        std::cout << "hull=" << res.final_hull.hull_dim << " (target " << target_hull << ", "
                  << res.steps.size() << " scalings, " << inner.name() << ")\n";
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }

    require(any.grs.has_value(), errc::bad_parameters, rule + " needs a GRS descriptor");
    GrsCode code = *any.grs;
    RuleOutcome out;
    if (rule == "extend-length")
        out = extend_length_infty(code, lambda_of(code));
    else if (rule == "extend-zero")
        out = extend_length_zero(code, lambda_of(code));
    else if (rule == "increase-dim")
        out = increase_dim(code, direction == "down" ? DimDirection::down : DimDirection::up);
    else if (rule == "extend-both")
        out = lambda_arg == "auto" ? extend_both_cancelling(code)
                                   : extend_both(code, lambda_of(code));
    else
        fail(errc::bad_parameters, "unknown rule " + rule);

    json desc = to_json(out);
    write_json_file(out_path, desc);
    cat.append("outcome", desc);
    std::cout << out.rule_tag << ": predicted"
              << (out.predicted_exact ? "=" : ">=") << out.predicted_hull_lb
              << " computed=" << out.computed.hull_dim << " [n=" << out.code.n()
              << ",k=" << out.code.k() << "]\n";
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_families(uint32_t q, uint32_t h, const std::string& family, int kmax,
                 const std::string& format, const std::string& out_path) {
    FamilySpec spec{family_id(family), q, h};
    auto rows = family_sweep(spec, kmax);
    Catalog cat;
    if (!out_path.empty()) {
        json desc = to_json(build_family(spec));
        write_json_file(out_path, desc);
        cat.append("code", desc);
    }
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back(json{{"family", r.family},
                               {"q", r.q},
                               {"h", r.h},
                               {"n", r.n},
                               {"k", r.k},
                               {"t", r.t},
                               {"l_formula", r.l_formula},
                               {"hull_computed", r.hull_computed},
                               {"mds_certificate", r.mds_certificate}});
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "family,q,h,n,k,t,l_formula,hull_computed,mds_certificate\n";
        for (const auto& r : rows)
            std::cout << r.family << "," << r.q << "," << r.h << "," << r.n << "," << r.k << ","
                      << r.t << "," << r.l_formula << "," << r.hull_computed << ","
                      << r.mds_certificate << "\n";
    }
    return 0;
}

int cmd_tables(const TablesArgs& args) {
    FamilySpec spec{family_id(args.family), args.q, args.h};
    auto tuples = theorem_q22_enumerate(spec);
    if (args.witness) {
        require(args.q <= 9, errc::bad_parameters, "--witness is limited to q <= 9");
        WitnessReport rep = witness_tuples(spec, tuples);
        require(rep.failures.empty(), errc::internal,
                "witness failures: " + std::to_string(rep.failures.size()));
        std::cerr << "witnessed " << rep.reproduced << "/" << rep.witnessable
                  << " constructible tuples (of " << rep.total << ")\n";
    }
    Catalog cat;
    for (const TableTuple& t : tuples) cat.append("eaqecc", to_json(t.p));
    std::string csv = tuples_to_csv(spec, tuples);
    std::string payload;
    if (args.format == "json") {
        json arr = json::array();
        for (const TableTuple& t : tuples) {
            json j = to_json(t.p);
            j["shape_id"] = t.shapes;
            j["witnessed"] = t.witnessed;
            arr.push_back(j);
        }
        payload = arr.dump(2) + "\n";
    } else {
        payload = csv;
    }
    if (args.out.empty())
        std::cout << payload;
    else {
        std::ofstream f(args.out);
        f << payload;
        std::cout << "wrote " << args.out << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, uint32_t q, uint32_t h, const std::string& family,
               const std::string& golden) {
    verify::Report rep;
    if (suite == "lemma-q22")
        rep = verify::lemma_q22(q);
    else if (suite == "lemma-h1")
        rep = verify::lemma_h1(q, h);
    else if (suite == "lemma-2h1")
        rep = verify::lemma_2h1(q, h);
    else if (suite == "prop-grs1")
        rep = verify::prop_grs1(q, 40, 0xA11CEu);
    else if (suite == "prop-3")
        rep = verify::prop_3(q, 60, 0xB0B1u);
    else if (suite == "prop-4")
        rep = verify::prop_4(q, 60, 0xB0B2u);
    else if (suite == "theorem-grs1")
        rep = verify::theorem_grs1(q);
    else if (suite == "tables") {
        FamilySpec spec{family_id(family), q, h};
        std::string path = golden;
        if (path.empty()) {
            std::ostringstream os;
            os << default_data_dir() << "/golden/table_family" << spec.family << "_q" << q;
            if (spec.family != 1) os << "_h" << h;
            os << ".csv";
            path = os.str();
        }
        rep = verify::tables(spec, path);
    } else
        fail(errc::bad_parameters, "unknown verification suite " + suite);

    std::cout << rep.name << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
    for (const std::string& n : rep.notes) std::cout << "  " << n << "\n";
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GRS hulls, propagation rules and EAQECC parameter tables"};
    app.set_help_flag("--help", "print help"); // frees -h / --h for the coset parameter
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build a family code and write its descriptor");
    build->set_help_flag("--help", "print help");
    uint32_t b_q = 0, b_h = 0;
    int b_k = 0;
    std::string b_family, b_out;
    build->add_option("--q", b_q, "subfield size q")->required();
    build->add_option("--h", b_h, "coset parameter h");
    build->add_option("--family", b_family, "full-field | coset-h | coset-2h")->required();
    build->add_option("--k", b_k, "dimension (default q)");
    build->add_option("--out", b_out, "output descriptor path");

    // rule
    auto* rule = app.add_subcommand("rule", "apply a propagation rule to a code descriptor");
    rule->set_help_flag("--help", "print help");
    std::string r_name, r_code, r_lambda = "1", r_dir = "up", r_inner = "hermitian", r_out;
    int r_target = -1;
    uint32_t r_e = 0;
    rule->add_option("name", r_name, "extend-length | extend-zero | increase-dim | extend-both | reduce")
        ->required();
    rule->add_option("--code", r_code, "input code descriptor (JSON)")->required();
    rule->add_option("--lambda", r_lambda, "subfield element rep, or 'auto'");
    rule->add_option("--target-hull", r_target, "target hull dimension (reduce)");
    rule->add_option("--direction", r_dir, "up | down (increase-dim)");
    rule->add_option("--inner", r_inner, "euclidean | hermitian | galois (reduce)");
    rule->add_option("--e", r_e, "galois exponent (reduce)");
    rule->add_option("--out", r_out, "output descriptor path");

    // families
    auto* fam = app.add_subcommand("families", "hull sweep report for a code family");
    fam->set_help_flag("--help", "print help");
    uint32_t f_q = 0, f_h = 0;
    int f_kmax = 0;
    std::string f_family, f_format = "csv", f_out;
    fam->add_option("--q", f_q, "subfield size q")->required();
    fam->add_option("--h", f_h, "coset parameter h");
    fam->add_option("--family", f_family, "full-field | coset-h | coset-2h")->required();
    fam->add_option("--kmax", f_kmax, "sweep up to this dimension (default n/2)");
    fam->add_option("--format", f_format, "csv | json");
    fam->add_option("--out", f_out, "also write the family descriptor here");

    // tables
    auto* tab = app.add_subcommand("tables", "enumerate EAQECC parameter tuples");
    tab->set_help_flag("--help", "print help");
    TablesArgs t_args;
    tab->add_option("--q", t_args.q, "subfield size q")->required();
    tab->add_option("--h", t_args.h, "coset parameter h");
    tab->add_option("--family", t_args.family, "1 | 2 | 3")->required();
    tab->add_flag("--witness", t_args.witness, "certify tuples by code construction (q <= 9)");
    tab->add_option("--format", t_args.format, "csv | json");
    tab->add_option("--out", t_args.out, "write the table here instead of stdout");

    // verify
    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    ver->set_help_flag("--help", "print help");
    std::string v_suite, v_family = "1", v_golden;
    uint32_t v_q = 0, v_h = 0;
    ver->add_option("suite", v_suite,
                    "lemma-q22 | lemma-h1 | lemma-2h1 | prop-grs1 | prop-3 | prop-4 | "
                    "theorem-grs1 | tables")
        ->required();
    ver->add_option("--q", v_q, "subfield size q")->required();
    ver->add_option("--h", v_h, "coset parameter h");
    ver->add_option("--family", v_family, "1 | 2 | 3 (tables)");
    ver->add_option("--golden", v_golden, "golden CSV path (tables)");

    try {
        app.parse(argc, argv);
        if (*build) return cmd_build(b_q, b_h, b_family, b_k, b_out);
        if (*rule) return cmd_rule(r_name, r_code, r_lambda, r_target, r_dir, r_inner, r_e, r_out);
        if (*fam) return cmd_families(f_q, f_h, f_family, f_kmax, f_format, f_out);
        if (*tab) return cmd_tables(t_args);
        if (*ver) return cmd_verify(v_suite, v_q, v_h, v_family, v_golden);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::search_exhausted ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

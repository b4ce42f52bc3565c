#include "cli_impl.hpp"

#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "dunkl/verify.hpp"

namespace dunkl {

namespace {

using nlohmann::ordered_json;

std::vector<Rational> parse_kappa_list(const std::string& csv) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string part =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        out.push_back(rational_from_string(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Composition parse_mu(const std::string& csv) {
    Composition out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string part =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        out.push_back(std::stoi(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

ordered_json poly_json(const Polynomial& p) { return ordered_json::parse(p.to_json()); }

ordered_json report_json(const SuiteReport& r) {
    ordered_json j;
    j["suite"] = r.suite;
    j["kappa_degree_bound"] = r.kappa_degree_bound;
    auto items = ordered_json::array();
    for (const auto& it : r.items) {
        ordered_json ji;
        ji["name"] = it.name;
        ji["pass"] = it.pass;
        if (!it.detail.empty()) ji["detail"] = it.detail;
        items.push_back(ji);
    }
    j["items"] = items;
    j["pass"] = r.pass();
    return j;
}

void print_report_text(const SuiteReport& r, std::ostream& out) {
    for (const auto& it : r.items) {
        out << (it.pass ? "PASS " : "FAIL ") << "[" << r.suite << "] " << it.name;
        if (!it.pass && !it.detail.empty()) out << ": " << it.detail;
        out << "\n";
    }
}

struct VerifyConfig {
    int m = 2, p = 1, N = 2, degree = 4;
    unsigned long seed = 0;
    std::string kappa_csv;
    std::string format = "text";
    std::string suite = "all";
    std::string k0_mode = "literal";
};

std::vector<ParamTuple> make_kappa_samples(const VerifyConfig& cfg, int count) {
    std::vector<ParamTuple> out;
    if (!cfg.kappa_csv.empty()) {
        out.push_back(make_params(cfg.m, cfg.p, parse_kappa_list(cfg.kappa_csv)));
        return out;
    }
    RatSampler s(cfg.seed, 40);
    for (int k = 0; k < count; ++k) out.push_back(sample_params(cfg.m, cfg.p, cfg.N, s));
    return out;
}

int run_verify(const VerifyConfig& cfg, std::ostream& out) {
    std::vector<SuiteReport> reports;
    auto kappas = make_kappa_samples(cfg, 3);
    // identity checks are polynomial in kappa of degree <= the check's bound;
    // sample more tuples than that bound where the suite is a pure identity
    auto kappas5 = make_kappa_samples(cfg, 5);
    const bool all = cfg.suite == "all";
    if (all || cfg.suite == "commute")
        reports.push_back(suite_commutativity(cfg.m, cfg.p, cfg.N, cfg.degree, kappas));
    if (all || cfg.suite == "hermitian")
        reports.push_back(
            suite_hermiticity(cfg.m, cfg.p, cfg.N, std::min(cfg.degree, 4), kappas5, cfg.seed));
    if (all || cfg.suite == "norms") {
        reports.push_back(suite_norms(cfg.m, cfg.p, cfg.N, std::min(cfg.degree, 4), kappas));
        reports.push_back(suite_eigenfunctions(cfg.m, cfg.p, cfg.N, 1, kappas));
        reports.push_back(suite_hanlon(cfg.m, cfg.p, cfg.N, kappas));
    }
    if (all || cfg.suite == "derham") {
        reports.push_back(
            suite_derham(cfg.m, cfg.p, cfg.N, std::min(cfg.degree, 4), 3, kappas));
        reports.push_back(suite_intertwiner(cfg.m, cfg.p, cfg.N, std::min(cfg.degree, 4),
                                            kappas));
        reports.push_back(suite_zspectrum(cfg.m, cfg.p, cfg.N, std::min(cfg.degree, 3)));
    }
    if (all || cfg.suite == "shifts")
        reports.push_back(suite_shifts(cfg.m, cfg.p, cfg.N, kappas, cfg.seed));
    std::optional<SingularReport> sing_report;
    if (all || cfg.suite == "singular") {
        reports.push_back(suite_singular(cfg.m, cfg.p, cfg.N, std::min(cfg.degree, 4),
                                         cfg.seed));
        OperatorContext sctx(cfg.m, cfg.p, cfg.N, kappas.front());
        K0Config k0cfg =
            cfg.k0_mode == "corrected" ? K0Config::corrected() : K0Config::literal();
        sing_report = singular_report(sctx, std::min(cfg.degree, 4), k0cfg);
    }

    bool pass = true;
    for (const auto& r : reports)
        if (!r.pass()) pass = false;

    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = "1";
        j["command"] = "verify";
        j["suite"] = cfg.suite;
        ordered_json cj;
        cj["m"] = cfg.m;
        cj["p"] = cfg.p;
        cj["N"] = cfg.N;
        cj["degree"] = cfg.degree;
        cj["seed"] = cfg.seed;
        auto karr = ordered_json::array();
        for (const auto& k : kappas) {
            auto one = ordered_json::array();
            for (const auto& v : k.kappa) one.push_back(to_string(v));
            karr.push_back(one);
        }
        cj["kappa_samples"] = karr;
        j["config"] = cj;
        auto arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        j["reports"] = arr;
        if (sing_report)
            j["singular_report"] = ordered_json::parse(singular_report_json(*sing_report));
        j["pass"] = pass;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report_text(r, out);
        if (sing_report) out << singular_report_json(*sing_report) << "\n";
        out << (pass ? "ALL PASS" : "FAILED") << "\n";
    }
    return pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Dunkl operator toolkit for the groups G(m,p,N)"};
    app.require_subcommand(1);

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "nonsymmetric Jack polynomial zeta_mu");
    int zN = 2;
    std::string zkappa0 = "1/3", zmu = "0,0", zformat = "text";
    zeta_cmd->add_option("--N", zN, "number of variables");
    zeta_cmd->add_option("--kappa0", zkappa0, "rational kappa_0");
    zeta_cmd->add_option("--mu", zmu, "composition, comma separated");
    zeta_cmd->add_option("--format", zformat)->check(CLI::IsMember({"text", "json"}));

    // pair
    auto* pair_cmd = app.add_subcommand("pair", "contravariant pairing of two polynomials");
    std::string pleft, pright, pkappa, pformat = "text";
    int pm = 2, pp = 1, pN = 2;
    pair_cmd->add_option("left", pleft, "left polynomial, e.g. \"x1^2 + 2/3 x2\"")->required();
    pair_cmd->add_option("right", pright, "right polynomial")->required();
    pair_cmd->add_option("--m", pm);
    pair_cmd->add_option("--p", pp);
    pair_cmd->add_option("--N", pN);
    pair_cmd->add_option("--kappa", pkappa, "kappa_0 then free kappa_i, comma separated");
    pair_cmd->add_option("--format", pformat)->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
    VerifyConfig vc;
    verify_cmd->add_option("--suite", vc.suite)
        ->check(CLI::IsMember(
            {"commute", "hermitian", "norms", "derham", "shifts", "singular", "all"}));
    verify_cmd->add_option("--m", vc.m);
    verify_cmd->add_option("--p", vc.p);
    verify_cmd->add_option("--N", vc.N);
    verify_cmd->add_option("--degree", vc.degree);
    verify_cmd->add_option("--seed", vc.seed);
    verify_cmd->add_option("--kappa", vc.kappa_csv,
                           "fixed parameter tuple instead of seeded samples");
    verify_cmd->add_option("--format", vc.format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd
        ->add_option("--k0-mode", vc.k0_mode,
                     "admissible (j,n) ranges for the kappa_0 singular predicate")
        ->check(CLI::IsMember({"literal", "corrected"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (zeta_cmd->parsed()) {
            Composition mu = parse_mu(zmu);
            if (static_cast<int>(mu.size()) != zN)
                throw HypothesisViolation("mu must have N entries");
            JackContext jc(zN, rational_from_string(zkappa0));
            Polynomial z = zeta(jc, mu);
            EigenData ed = eigen_data(zN, jc.kappa0, mu);
            if (zformat == "json") {
                ordered_json j;
                j["schema"] = "1";
                j["command"] = "zeta";
                j["mu"] = mu;
                auto xs = ordered_json::array();
                for (const auto& x : ed.xi) xs.push_back(to_string(x));
                j["xi"] = xs;
                j["zeta"] = poly_json(z);
                out << j.dump(2) << "\n";
            } else {
                out << z.to_text("y") << "\n";
            }
            return 0;
        }
        if (pair_cmd->parsed()) {
            std::vector<Rational> free_vals =
                pkappa.empty() ? std::vector<Rational>(pm / pp, Rational(0))
                               : parse_kappa_list(pkappa);
            OperatorContext ctx(pm, pp, pN, make_params(pm, pp, free_vals));
            Polynomial pl = parse_polynomial(pleft, pN, pm);
            Polynomial pr = parse_polynomial(pright, pN, pm);
            CycNumber v = pairing(ctx, pl, pr);
            if (pformat == "json") {
                ordered_json j;
                j["schema"] = "1";
                j["command"] = "pair";
                j["m"] = pm;
                j["value"] = v.to_strings();
                out << j.dump(2) << "\n";
            } else {
                out << v.to_display_string() << "\n";
            }
            return 0;
        }
        if (verify_cmd->parsed()) return run_verify(vc, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace dunkl

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "powsum/cli.hpp"
#include "powsum/errors.hpp"
#include "powsum/form_json.hpp"
#include "powsum/model_json.hpp"
#include "powsum/ranges.hpp"
#include "powsum/secant.hpp"
#include "powsum/verify.hpp"
#include "powsum/witness.hpp"

namespace powsum::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string subcommand;
    std::size_t n = 0;
    unsigned k = 2;
    unsigned d = 3;
    std::size_t m = 0;  // 0: default for the witness
    std::uint64_t seed = 1;
    std::string field = "rational";
    std::size_t max_n = 8;
    std::size_t trials = 3;
    std::string witness = "binomial";
    std::string format;
    std::string output;
    // ranges
    std::size_t n_max = 40;
    bool general_d = false;
    unsigned d_max = 20;
    std::string gnuplot;
    // moments
    std::string model_file;
    unsigned order = 6;
    // verify-paper
    std::string level = "quick";
    std::string inject_fault;
};

json envelope(const RunConfig& cfg, const std::string& field, json params) {
    return {{"tool-version", kToolVersion}, {"seed", cfg.seed}, {"field", field}, {"params", std::move(params)}};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output);
    if (!file) throw InputError("cannot open output file '" + cfg.output + "'");
    file << text;
}

int cmd_check_skew(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1) throw InputError("--n must be at least 1");
    const auto kind = secant::parse_field_kind(cfg.field);
    const PrimeField prime = PrimeField::from_environment();
    secant::TangentReport report;
    if (cfg.witness == "binomial") {
        if (cfg.k != 2) throw InputError("the binomial witness consists of quadratics; use --k 2");
        auto forms = witness::binomial_set(cfg.n).forms;
        if (cfg.m != 0) {
            if (cfg.m > forms.size())
                throw InputError("--m exceeds the size " + std::to_string(forms.size()) + " of the binomial set");
            forms.erase(forms.begin() + static_cast<std::ptrdiff_t>(cfg.m), forms.end());
        }
        report = secant::check_skewness(forms, cfg.d, kind, prime);
    } else if (cfg.witness == "random") {
        const std::size_t m = cfg.m != 0 ? cfg.m : cfg.n * (cfg.n - 1) / 2 + 1;
        const secant::ProblemParams params{cfg.n, cfg.k, cfg.d, m};
        report = secant::random_terracini_probe(params, cfg.trials, cfg.seed,
                                                {prime, kind == secant::FieldKind::rational});
    } else {
        throw InputError("--witness must be 'binomial' or 'random'");
    }
    if (cfg.format == "json") {
        json j = envelope(cfg, secant::to_string(report.field_used), secant::to_json(report.params));
        j["witness"] = cfg.witness;
        j["report"] = secant::to_json(report);
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::ostringstream s;
        s << "[Thm skewness] " << cfg.witness << " witness, n=" << report.params.n << " k=" << report.params.k
          << " d=" << report.params.d << " m=" << report.params.m << ": rank " << report.rank << " / expected "
          << report.expected << " over " << secant::to_string(report.field_used) << " -> "
          << (report.skew ? "skew" : "NOT skew") << '\n';
        emit(cfg, s.str(), out);
    }
    return report.skew ? kPass : kCheckFailed;
}

int cmd_contact_locus(const RunConfig& cfg, std::ostream& out) {
    const auto kind = secant::parse_field_kind(cfg.field);
    const witness::FieldChoice field{kind, PrimeField::from_environment()};
    const auto cert = witness::identifiability_certificate(cfg.n, field, cfg.max_n);
    if (cfg.format == "json") {
        json j = envelope(cfg, secant::to_string(kind), {{"n", cfg.n}, {"k", 2}, {"d", 3}, {"m", cert.m}});
        j["certificate"] = witness::to_json(cert);
        json reports = json::array();
        for (std::size_t i = 0; i < cert.contact_kernel_dims.size(); ++i)
            reports.push_back({{"base_point_index", i},
                               {"kernel_dim", cert.contact_kernel_dims[i]},
                               {"passes", cert.contact_kernel_dims[i] == 1}});
        j["contact_reports"] = std::move(reports);
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::ostringstream s;
        s << "[Thm skewness] n=" << cert.n << " m=" << cert.m << ": rank " << cert.skew_rank << " / expected "
          << cert.expected << '\n';
        for (std::size_t i = 0; i < cert.contact_kernel_dims.size(); ++i)
            s << "[Thm contact locus] point " << i << ": kernel dim " << cert.contact_kernel_dims[i] << '\n';
        s << "verdict: " << witness::to_string(cert.verdict) << " (over " << secant::to_string(kind) << ")\n";
        emit(cfg, s.str(), out);
    }
    return cert.verdict == witness::Verdict::pass ? kPass : kCheckFailed;
}

int cmd_ranges(const RunConfig& cfg, std::ostream& out) {
    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    if (cfg.general_d) {
        if (cfg.d_max < 2) throw InputError("--d-max must be at least 2");
        std::vector<ranges::GeneralDRegion> rows;
        for (unsigned d = 2; d <= cfg.d_max; ++d) rows.push_back(ranges::general_d_region(cfg.k, d));
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back({{"k", r.k},
                               {"d", r.d},
                               {"min_n", r.min_n ? json(*r.min_n) : json(nullptr)},
                               {"m_bound_at_min_n", r.m_bound_at_min_n ? json(r.m_bound_at_min_n->get_str()) : json(nullptr)}});
            json j = envelope(cfg, "rational", {{"k", cfg.k}, {"d_max", cfg.d_max}});
            j["rows"] = std::move(arr);
            emit(cfg, j.dump(2) + "\n", out);
        } else {
            emit(cfg, ranges::general_d_csv(rows), out);
        }
        return kPass;
    }
    const auto rows = ranges::figure_tables(cfg.k, cfg.d, cfg.n_max);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"k", r.k},
                           {"d", r.d},
                           {"cond1_bound", r.cond1_bound ? json(r.cond1_bound->get_str()) : json(nullptr)},
                           {"cond2_bound", r.cond2_bound ? json(r.cond2_bound->get_str()) : json(nullptr)},
                           {"expected_generic_rank", r.expected_generic_rank.get_str()},
                           {"regime", r.regime}});
        json j = envelope(cfg, "rational", {{"k", cfg.k}, {"d", cfg.d}, {"n_max", cfg.n_max}});
        j["rows"] = std::move(arr);
        emit(cfg, j.dump(2) + "\n", out);
    } else if (format == "csv") {
        emit(cfg, ranges::to_csv(rows), out);
    } else {
        std::ostringstream s;
        s << std::setw(4) << "n" << std::setw(12) << "cond1" << std::setw(8) << "cond2" << std::setw(12) << "expected"
          << "  regime\n";
        for (const auto& r : rows)
            s << std::setw(4) << r.n << std::setw(12) << (r.cond1_bound ? r.cond1_bound->get_str() : "-")
              << std::setw(8) << (r.cond2_bound ? r.cond2_bound->get_str() : "-") << std::setw(12)
              << r.expected_generic_rank.get_str() << "  " << r.regime << '\n';
        emit(cfg, s.str(), out);
    }
    if (!cfg.gnuplot.empty()) {
        const std::string csv_path = cfg.gnuplot + ".csv";
        std::ofstream csv(csv_path), script(cfg.gnuplot);
        if (!csv || !script) throw InputError("cannot write gnuplot files at '" + cfg.gnuplot + "'");
        csv << ranges::to_csv(rows);
        script << ranges::gnuplot_script(csv_path, cfg.k, cfg.d);
    }
    return kPass;
}

int cmd_moments(const RunConfig& cfg, std::ostream& out) {
    std::ifstream file(cfg.model_file);
    if (!file) throw InputError("cannot open model file '" + cfg.model_file + "'");
    json model_json;
    try {
        file >> model_json;
    } catch (const json::exception& e) {
        throw InputError(std::string("model file is not valid JSON: ") + e.what());
    }
    const auto model = gaussmix::model_from_json(model_json);
    const auto form = gaussmix::mixture_moment_form(model, cfg.order);
    json j = envelope(cfg, "rational", {{"model", cfg.model_file}, {"order", cfg.order}});
    j["form"] = polyring::to_json(form);
    emit(cfg, j.dump(2) + "\n", out);
    return kPass;
}

int cmd_verify_paper(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions opt;
    if (cfg.level == "quick")
        opt.level = Level::quick;
    else if (cfg.level == "full")
        opt.level = Level::full;
    else
        throw InputError("--level must be 'quick' or 'full'");
    if (!cfg.inject_fault.empty() && cfg.inject_fault != "duplicate-binomial")
        throw InputError("unknown fault '" + cfg.inject_fault + "'");
    opt.inject_duplicate = cfg.inject_fault == "duplicate-binomial";
    opt.prime = PrimeField::from_environment();
    opt.seed = cfg.seed;
    const auto results = verify_paper(opt);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id},
                           {"anchor", r.anchor},
                           {"claim", r.claim},
                           {"passed", r.passed},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        json j = envelope(cfg, opt.level == Level::full ? "rational" : "prime", {{"level", cfg.level}});
        j["checks"] = std::move(arr);
        j["passed"] = all;
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::ostringstream s;
        for (const auto& r : results)
            s << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(26) << r.id << " [" << r.anchor << "] "
              << r.claim << " -- " << r.detail << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
        s << (all ? "all checks passed" : "some checks FAILED") << '\n';
        emit(cfg, s.str(), out);
    }
    return all ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact certificates for identifiability of sums of powers of forms"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", cfg.seed, "Root seed for random choices (always recorded)");
    app.add_option("--output", cfg.output, "Write results to this file instead of standard output");

    auto* skew = app.add_subcommand("check-skew", "Check skewness of tangent spaces (Terracini rank)");
    skew->add_option("--n", cfg.n, "Number of variables")->required();
    skew->add_option("--k", cfg.k, "Degree of the base forms");
    skew->add_option("--d", cfg.d, "Power");
    skew->add_option("--m", cfg.m, "Number of summands");
    skew->add_option("--witness", cfg.witness, "binomial | random");
    skew->add_option("--field", cfg.field, "rational | prime");
    skew->add_option("--trials", cfg.trials, "Trials for the random witness");
    skew->add_option("--format", cfg.format, "human | json");

    auto* contact = app.add_subcommand("contact-locus", "Contact-locus certificate for the binomial set");
    contact->add_option("--n", cfg.n, "Number of variables")->required();
    contact->add_option("--field", cfg.field, "rational | prime");
    contact->add_option("--max-n", cfg.max_n, "Refuse n above this guard");
    contact->add_option("--format", cfg.format, "human | json");

    auto* rng = app.add_subcommand("ranges", "Tabulate identifiability bounds");
    rng->add_option("--k", cfg.k, "Degree of the base forms");
    rng->add_option("--d", cfg.d, "Power");
    rng->add_option("--n-max", cfg.n_max, "Largest n in the table");
    rng->add_flag("--general-d", cfg.general_d, "Tabulate the minimal n per power d");
    rng->add_option("--d-max", cfg.d_max, "Largest d for --general-d");
    rng->add_option("--format", cfg.format, "csv | json | human");
    rng->add_option("--emit-gnuplot", cfg.gnuplot, "Write a gnuplot script here (and its CSV next to it)");

    auto* mom = app.add_subcommand("moments", "Moment form of a centered Gaussian mixture");
    mom->add_option("--model", cfg.model_file, "Mixture model JSON file")->required();
    mom->add_option("--order", cfg.order, "Moment order");

    auto* ver = app.add_subcommand("verify-paper", "Run the bundled reproduction suite");
    ver->add_option("--level", cfg.level, "quick | full");
    ver->add_option("--format", cfg.format, "human | json");
    ver->add_option("--inject-fault", cfg.inject_fault, "Fault injection for testing: duplicate-binomial")
        ->group("");

    std::vector<std::string> argv_store{"powsum"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (skew->parsed()) return cmd_check_skew(cfg, out);
        if (contact->parsed()) return cmd_contact_locus(cfg, out);
        if (rng->parsed()) return cmd_ranges(cfg, out);
        if (mom->parsed()) return cmd_moments(cfg, out);
        if (ver->parsed()) return cmd_verify_paper(cfg, out);
    } catch (const InputError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const InconsistencyError& e) {
        err << "inconsistent data: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kInvalidInput;
}

}  // namespace powsum::cli

#include "annocert/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

using namespace annocert;

std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

RunManifest make_manifest(const std::string& command, std::vector<std::string> inputs,
                          const std::string& options, std::optional<std::uint64_t> seed) {
    return RunManifest{command, std::move(inputs), options, kVersion, now_iso8601(), seed};
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

LabelColumn resolve_reference(const Dataset& ds, const std::string& reference) {
    if (reference == "vote") return majority_vote(ds.annotations);
    const auto& ids = ds.annotations.annotator_ids();
    for (size_t k = 0; k < ids.size(); ++k) {
        if (ids[k] == reference) return ds.annotations.column(static_cast<Eigen::Index>(k));
    }
    if (reference == "oracle" && ds.oracle) return *ds.oracle;
    throw std::runtime_error("unknown reference column: " + reference);
}

struct GlobalOpts {
    std::string output = "table";
    std::optional<std::uint64_t> seed;
};

int run(int argc, char** argv) {
    CLI::App app{"Oracle-accuracy bounds and superhuman-classifier certification"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--output", global.output, "Output format: json|table|csv")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "Override the simulation seed");

    // agreement
    auto* cmd_agreement = app.add_subcommand("agreement", "Pairwise annotator agreement matrix");
    std::string agreement_path;
    bool drop_incomplete = false;
    cmd_agreement->add_option("dataset", agreement_path, "Annotation CSV")->required();
    cmd_agreement->add_flag("--drop-incomplete", drop_incomplete, "Drop rows with missing labels");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "Upper/lower oracle-accuracy bounds");
    std::string bounds_path, bounds_reference = "vote";
    cmd_bounds->add_option("dataset", bounds_path, "Annotation CSV")->required();
    cmd_bounds->add_option("--reference", bounds_reference, "Reference column: vote or an annotator id");
    cmd_bounds->add_flag("--drop-incomplete", drop_incomplete, "Drop rows with missing labels");

    // certify
    auto* cmd_certify = app.add_subcommand("certify", "Certify model out-performance with a confidence score");
    std::string certify_path, certify_method = "hms", certify_reference = "vote";
    double certify_tau = 0.0, certify_lr = 1e-4;
    int certify_iters = 100;
    bool from_values = false, keep_trace = false;
    double fv_l = 0.0, fv_u = 0.0;
    long fv_n = 0;
    cmd_certify->add_option("dataset", certify_path, "Annotation CSV with a model column");
    cmd_certify->add_flag("--from-values", from_values, "Certify from published (L, U, N) values, no dataset");
    cmd_certify->add_option("-L,--l-n", fv_l, "Sample lower bound L_N (with --from-values)");
    cmd_certify->add_option("-U,--u-n", fv_u, "Sample upper bound U_N (with --from-values)");
    cmd_certify->add_option("-N,--n-samples", fv_n, "Sample count N (with --from-values)");
    cmd_certify->add_option("--method", certify_method, "hms|oms")->check(CLI::IsMember({"hms", "oms"}));
    cmd_certify->add_option("--tau", certify_tau, "Target out-performance margin (default 0)");
    cmd_certify->add_option("--lr", certify_lr, "OMS learning rate");
    cmd_certify->add_option("--iters", certify_iters, "OMS iteration count");
    cmd_certify->add_flag("--trace", keep_trace, "Record the OMS iterate trace");
    cmd_certify->add_option("--reference", certify_reference, "Reference column: vote or an annotator id");
    cmd_certify->add_flag("--drop-incomplete", drop_incomplete, "Drop rows with missing labels");

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "Check theorem assumptions against an oracle column");
    std::string validate_path, validate_reference = "vote";
    cmd_validate->add_option("dataset", validate_path, "Annotation CSV with an oracle column")->required();
    cmd_validate->add_option("--reference", validate_reference, "Reference column for the lower-bound check");
    cmd_validate->add_flag("--drop-incomplete", drop_incomplete, "Drop rows with missing labels");

    // simulate
    auto* cmd_simulate = app.add_subcommand("simulate", "Generate a synthetic oracle-known dataset");
    std::string sim_config, sim_out;
    cmd_simulate->add_option("--config", sim_config, "Simulation config JSON")->required();
    cmd_simulate->add_option("--out", sim_out, "Output CSV path (default stdout)");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "Convergence curves over annotator count K");
    std::string sweep_config, sweep_out;
    int k_min = 2, k_max = 0;
    double strong_acc = 0.95, weak_acc = 0.60;
    cmd_sweep->add_option("--config", sweep_config, "Simulation config JSON")->required();
    cmd_sweep->add_option("--k-min", k_min, "Smallest annotator count (default 2)");
    cmd_sweep->add_option("--k-max", k_max, "Largest annotator count (default: all configured)");
    cmd_sweep->add_option("--strong", strong_acc, "Strong model accuracy");
    cmd_sweep->add_option("--weak", weak_acc, "Weak model accuracy");
    cmd_sweep->add_option("--out", sweep_out, "Output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    if (*seed_opt) global.seed = seed_value;

    IngestOptions ingest_opts;
    ingest_opts.missing = drop_incomplete ? MissingPolicy::DropRow : MissingPolicy::Reject;

    if (*cmd_agreement) {
        const auto ds = ingest_dataset(agreement_path, ingest_opts);
        const auto am = agreement_matrix(ds.annotations);
        if (global.output == "json") {
            nlohmann::json j = to_json(am);
            j["manifest"] = to_json(make_manifest("agreement", {agreement_path}, "", global.seed));
            emit(std::cout, j);
        } else {
            write_agreement_csv(std::cout, am);
        }
        return 0;
    }

    if (*cmd_bounds) {
        const auto ds = ingest_dataset(bounds_path, ingest_opts);
        const auto reference = resolve_reference(ds, bounds_reference);
        const auto report = bounds_report(ds.annotations, ds.model, reference);
        if (global.output == "json") {
            nlohmann::json j = to_json(report);
            j["status"] = report.margin ? (*report.margin > 0.0 ? "candidate" : "below_bound") : "bounds_only";
            j["aggregation"] = bounds_reference == "vote" ? "majority_vote" : "column";
            j["manifest"] = to_json(make_manifest("bounds", {bounds_path}, "--reference=" + bounds_reference,
                                                  global.seed));
            emit(std::cout, j);
        } else {
            std::cout << format_bounds_table(report);
        }
        return 0;
    }

    if (*cmd_certify) {
        CertificationResult result;
        std::optional<BoundsReport> bounds;
        OmsOptions oms{certify_lr, certify_iters, keep_trace};
        const CertMethod method = certify_method == "oms" ? CertMethod::OMS : CertMethod::HMS;
        if (from_values) {
            if (fv_n < 1) throw CLI::ValidationError("--from-values requires -L, -U and -N");
            result = method == CertMethod::OMS ? confidence_oms(fv_l, fv_u, fv_n, certify_tau, oms)
                                               : confidence_hms(fv_l, fv_u, fv_n, certify_tau);
        } else {
            if (certify_path.empty()) throw CLI::ValidationError("certify needs a dataset or --from-values");
            const auto ds = ingest_dataset(certify_path, ingest_opts);
            if (!ds.model) throw std::runtime_error("dataset has no model column");
            CertifyOptions opts;
            opts.method = method;
            opts.tau = certify_tau;
            opts.oms = oms;
            if (certify_reference != "vote") opts.reference = resolve_reference(ds, certify_reference);
            auto out = certify(ds.annotations, *ds.model, opts);
            result = out.certification;
            bounds = out.bounds;
        }
        if (global.output == "json") {
            nlohmann::json j = to_json(result);
            if (bounds) j["bounds"] = to_json(*bounds);
            j["manifest"] = to_json(make_manifest(
                "certify", certify_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{certify_path},
                "--method=" + certify_method, global.seed));
            emit(std::cout, j);
        } else {
            if (bounds) std::cout << format_bounds_table(*bounds);
            std::cout << format_certification_verdict(result);
        }
        return 0;
    }

    if (*cmd_validate) {
        const auto ds = ingest_dataset(validate_path, ingest_opts);
        if (!ds.oracle) throw std::runtime_error("oracle column required");
        AssumptionReport report;
        report.positive_correlation = check_positive_correlation(ds.annotations, *ds.oracle);
        const auto reference = resolve_reference(ds, validate_reference);
        if (ds.model) {
            report.lower_bound_check = check_lower_bound_assumption(reference, *ds.model, *ds.oracle);
        }
        if (global.output == "json") {
            nlohmann::json j = to_json(report);
            j["manifest"] = to_json(make_manifest("validate", {validate_path}, "", global.seed));
            emit(std::cout, j);
        } else {
            std::cout << format_assumption_table(report);
        }
        return 0;
    }

    if (*cmd_simulate) {
        auto config = SimulationConfig::from_json_file(sim_config);
        if (global.seed) config.seed = *global.seed;
        const auto ds = simulate(config);
        if (sim_out.empty()) {
            write_dataset(std::cout, ds);
        } else {
            write_dataset(sim_out, ds);
        }
        return 0;
    }

    if (*cmd_sweep) {
        auto config = SimulationConfig::from_json_file(sweep_config);
        if (global.seed) config.seed = *global.seed;
        if (k_max == 0) k_max = static_cast<int>(config.annotators.size());
        std::vector<int> k_range;
        for (int k = k_min; k <= k_max; ++k) k_range.push_back(k);
        ConvergenceOptions opts{strong_acc, weak_acc};
        const auto rows = run_convergence_experiment(config, k_range, opts);
        if (sweep_out.empty()) {
            write_convergence_csv(std::cout, rows);
        } else {
            std::ofstream out(sweep_out);
            if (!out) throw std::runtime_error("cannot write file: " + sweep_out);
            write_convergence_csv(out, rows);
        }
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

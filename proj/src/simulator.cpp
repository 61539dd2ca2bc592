#include "annocert/simulator.hpp"

#include "annocert/agreement.hpp"
#include "annocert/aggregation.hpp"
#include "annocert/bounds.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace annocert {

namespace {

constexpr std::uint64_t kOracleChannel = 0;
constexpr std::uint64_t kHardnessChannel = 1;
constexpr std::uint64_t kAnnotatorChannelBase = 2;
constexpr std::uint64_t kStrongModelChannel = 0xFFFFFFFFFFFFFFFFull;
constexpr std::uint64_t kWeakModelChannel = 0xFFFFFFFFFFFFFFFEull;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

int draw_class_from_prior(SubstreamRng& rng, const std::vector<double>& prior) {
    const double u = rng.next();
    double acc = 0.0;
    for (size_t c = 0; c + 1 < prior.size(); ++c) {
        acc += prior[c];
        if (u < acc) return static_cast<int>(c);
    }
    return static_cast<int>(prior.size()) - 1;
}

// Correct with probability `accuracy`, otherwise uniform over wrong classes.
int corrupt_label(SubstreamRng& rng, int oracle, double accuracy, int n_classes) {
    if (rng.next() < accuracy) return oracle;
    int wrong = static_cast<int>(rng.next() * (n_classes - 1));
    if (wrong >= n_classes - 1) wrong = n_classes - 2;
    return wrong < oracle ? wrong : wrong + 1;
}

}  // namespace

double SubstreamRng::next() {
    std::uint64_t x = splitmix64(seed_ ^ splitmix64(sample_ ^ splitmix64(channel_ ^ splitmix64(counter_++))));
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

void SimulationConfig::validate() const {
    if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    if (n_classes < 2) throw std::invalid_argument("n_classes must be >= 2");
    if (annotators.size() < 2) throw std::invalid_argument("need >= 2 annotators");
    if (!class_prior.empty()) {
        if (static_cast<int>(class_prior.size()) != n_classes) {
            throw std::invalid_argument("class_prior length must equal n_classes");
        }
        double sum = 0.0;
        for (double p : class_prior) {
            if (p < 0.0) throw std::invalid_argument("class_prior entries must be >= 0");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("class_prior must sum to 1");
    }
    for (const auto& a : annotators) {
        if (a.kind == AnnotatorKind::ConditionalIndependent) {
            if (a.accuracy < 0.0 || a.accuracy > 1.0) throw std::invalid_argument("accuracy must lie in [0,1]");
        } else {
            if (a.p_easy < 0.0 || a.p_easy > 1.0 || a.p_hard < 0.0 || a.p_hard > 1.0 ||
                a.easy_fraction < 0.0 || a.easy_fraction > 1.0) {
                throw std::invalid_argument("mixture parameters must lie in [0,1]");
            }
        }
    }
    if (model_accuracy && (*model_accuracy < 0.0 || *model_accuracy > 1.0)) {
        throw std::invalid_argument("model_accuracy must lie in [0,1]");
    }
}

SimulationConfig SimulationConfig::from_json_string(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    SimulationConfig c;
    c.n_samples = j.at("n_samples").get<long>();
    c.n_classes = j.at("n_classes").get<int>();
    if (j.contains("class_prior")) c.class_prior = j.at("class_prior").get<std::vector<double>>();
    c.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("model_accuracy")) c.model_accuracy = j.at("model_accuracy").get<double>();
    for (const auto& ja : j.at("annotators")) {
        AnnotatorModel a;
        const std::string kind = ja.value("kind", "conditional_independent");
        if (kind == "conditional_independent") {
            a.kind = AnnotatorKind::ConditionalIndependent;
            a.accuracy = ja.at("accuracy").get<double>();
        } else if (kind == "hardness_mixture") {
            a.kind = AnnotatorKind::HardnessMixture;
            a.p_easy = ja.at("p_easy").get<double>();
            a.p_hard = ja.at("p_hard").get<double>();
            a.easy_fraction = ja.at("easy_fraction").get<double>();
        } else {
            throw std::invalid_argument("unknown annotator kind: " + kind);
        }
        c.annotators.push_back(a);
    }
    c.validate();
    return c;
}

SimulationConfig SimulationConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_string(text);
}

Dataset simulate(const SimulationConfig& config) {
    config.validate();
    const long n = config.n_samples;
    const int nc = config.n_classes;
    const int k = static_cast<int>(config.annotators.size());

    std::vector<double> prior = config.class_prior;
    if (prior.empty()) prior.assign(static_cast<size_t>(nc), 1.0 / nc);

    Eigen::MatrixXi labels(n, k);
    Eigen::VectorXi oracle(n);
    Eigen::VectorXi model(n);

    for (long row = 0; row < n; ++row) {
        const auto sample = static_cast<std::uint64_t>(row);
        SubstreamRng oracle_rng(config.seed, sample, kOracleChannel);
        const int truth = draw_class_from_prior(oracle_rng, prior);
        oracle(row) = truth;

        // One shared difficulty draw per sample, seen by every
        // hardness-mixture annotator.
        SubstreamRng hardness_rng(config.seed, sample, kHardnessChannel);
        const double hardness_u = hardness_rng.next();

        for (int c = 0; c < k; ++c) {
            const auto& a = config.annotators[static_cast<size_t>(c)];
            SubstreamRng rng(config.seed, sample, kAnnotatorChannelBase + static_cast<std::uint64_t>(c));
            double acc;
            if (a.kind == AnnotatorKind::ConditionalIndependent) {
                acc = a.accuracy;
            } else {
                acc = hardness_u < a.easy_fraction ? a.p_easy : a.p_hard;
            }
            labels(row, c) = corrupt_label(rng, truth, acc, nc);
        }

        if (config.model_accuracy) {
            SubstreamRng rng(config.seed, sample, kStrongModelChannel);
            model(row) = corrupt_label(rng, truth, *config.model_accuracy, nc);
        }
    }

    std::vector<std::string> class_names;
    for (int c = 0; c < nc; ++c) class_names.push_back("c" + std::to_string(c));
    std::vector<std::string> annotator_ids;
    for (int c = 0; c < k; ++c) annotator_ids.push_back("a" + std::to_string(c + 1));
    std::vector<std::string> sample_ids;
    for (long row = 0; row < n; ++row) sample_ids.push_back("s" + std::to_string(row));

    Dataset ds{AnnotationMatrix(std::move(labels), std::move(annotator_ids),
                                std::move(sample_ids), LabelVocabulary(std::move(class_names))),
               std::nullopt, std::nullopt, 0};
    if (config.model_accuracy) ds.model = LabelColumn{"model", std::move(model)};
    ds.oracle = LabelColumn{"oracle", std::move(oracle)};
    return ds;
}

double expected_pairwise_agreement(double p_i, double p_j, int n_classes) {
    if (n_classes < 2) throw std::invalid_argument("n_classes must be >= 2");
    if (p_i < 0.0 || p_i > 1.0 || p_j < 0.0 || p_j > 1.0) {
        throw std::invalid_argument("accuracies must lie in [0,1]");
    }
    return p_i * p_j + (1.0 - p_i) * (1.0 - p_j) / (n_classes - 1);
}

double mixture_marginal_accuracy(const AnnotatorModel& a) {
    return a.easy_fraction * a.p_easy + (1.0 - a.easy_fraction) * a.p_hard;
}

double mixture_conditional_accuracy(const AnnotatorModel& a) {
    const double marginal = mixture_marginal_accuracy(a);
    const double second_moment =
        a.easy_fraction * a.p_easy * a.p_easy + (1.0 - a.easy_fraction) * a.p_hard * a.p_hard;
    return second_moment / marginal;
}

std::vector<ConvergenceRow> run_convergence_experiment(const SimulationConfig& config,
                                                       const std::vector<int>& k_range,
                                                       const ConvergenceOptions& options) {
    for (int k : k_range) {
        if (k < 2) throw std::invalid_argument("k_range entries must be >= 2");
        if (k > static_cast<int>(config.annotators.size())) {
            throw std::invalid_argument("k_range exceeds configured annotator count");
        }
    }

    const Dataset ds = simulate(config);
    const long n = config.n_samples;

    // Strong/weak models come from dedicated substream channels, so they do
    // not move with the annotator pool.
    Eigen::VectorXi strong(n), weak(n);
    for (long row = 0; row < n; ++row) {
        const auto sample = static_cast<std::uint64_t>(row);
        const int truth = ds.oracle->labels(row);
        SubstreamRng srng(config.seed, sample, kStrongModelChannel);
        SubstreamRng wrng(config.seed, sample, kWeakModelChannel);
        strong(row) = corrupt_label(srng, truth, options.strong_model_accuracy, config.n_classes);
        weak(row) = corrupt_label(wrng, truth, options.weak_model_accuracy, config.n_classes);
    }
    const LabelColumn strong_col{"model_strong", std::move(strong)};
    const LabelColumn weak_col{"model_weak", std::move(weak)};

    std::vector<ConvergenceRow> rows;
    for (int k : k_range) {
        const AnnotationMatrix sub = ds.annotations.head_annotators(k);
        const auto am = agreement_matrix(sub);
        const LabelColumn vote = majority_vote(sub);
        ConvergenceRow r;
        r.k = k;
        r.u_theoretical = theoretical_upper_bound(am);
        r.u_empirical = empirical_upper_bound(am);
        r.l_strong = lower_bound(vote, strong_col);
        r.l_weak = lower_bound(vote, weak_col);
        r.mean_annotator_accuracy = average_annotator_accuracy(sub, *ds.oracle);
        rows.push_back(r);
    }
    return rows;
}

std::vector<CoverageRow> run_coverage_experiment(const SimulationConfig& config,
                                                 const std::vector<double>& t_grid,
                                                 long replicates) {
    config.validate();
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    for (const auto& a : config.annotators) {
        if (a.kind != AnnotatorKind::ConditionalIndependent) {
            throw std::invalid_argument("coverage experiment needs conditional_independent annotators");
        }
    }
    if (!config.model_accuracy) throw std::invalid_argument("coverage experiment needs model_accuracy");

    // Population statistics are known in closed form for this pool.
    const int k = static_cast<int>(config.annotators.size());
    double sum = static_cast<double>(k);  // diagonal terms
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            sum += expected_pairwise_agreement(config.annotators[static_cast<size_t>(i)].accuracy,
                                               config.annotators[static_cast<size_t>(j)].accuracy,
                                               config.n_classes);
        }
    }
    const double u_population = std::sqrt(sum / (static_cast<double>(k) * k));
    const double l_population = expected_pairwise_agreement(
        config.annotators[0].accuracy, *config.model_accuracy, config.n_classes);

    std::vector<long> upper_violations(t_grid.size(), 0);
    std::vector<long> lower_violations(t_grid.size(), 0);

    for (long rep = 0; rep < replicates; ++rep) {
        SimulationConfig rc = config;
        rc.seed = splitmix64(config.seed + static_cast<std::uint64_t>(rep) + 1);
        const Dataset ds = simulate(rc);
        const auto am = agreement_matrix(ds.annotations);
        const double u_n = theoretical_upper_bound(am);
        const double l_n = pairwise_agreement(ds.annotations.column(0), *ds.model);
        for (size_t ti = 0; ti < t_grid.size(); ++ti) {
            const double t = t_grid[ti];
            if (std::sqrt(t + u_n * u_n) < u_population) ++upper_violations[ti];
            if (l_n - t >= l_population) ++lower_violations[ti];
        }
    }

    std::vector<CoverageRow> rows;
    for (size_t ti = 0; ti < t_grid.size(); ++ti) {
        CoverageRow r;
        r.t = t_grid[ti];
        r.delta = std::exp(-2.0 * static_cast<double>(config.n_samples) * t_grid[ti] * t_grid[ti]);
        r.upper_violation_rate = static_cast<double>(upper_violations[ti]) / static_cast<double>(replicates);
        r.lower_violation_rate = static_cast<double>(lower_violations[ti]) / static_cast<double>(replicates);
        r.replicates = replicates;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace annocert

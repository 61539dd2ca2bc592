#pragma once

#include "annocert/dataset_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace annocert {

// Counter-based substream: every (seed, sample, channel, draw) tuple hashes
// to one uniform variate. Adding annotators or samples never perturbs the
// draws of existing columns, so K-sweeps are nested by construction.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t sample, std::uint64_t channel)
        : seed_(seed), sample_(sample), channel_(channel) {}

    // Uniform in [0, 1).
    double next();

private:
    std::uint64_t seed_, sample_, channel_;
    std::uint64_t counter_ = 0;
};

enum class AnnotatorKind { ConditionalIndependent, HardnessMixture };

struct AnnotatorModel {
    AnnotatorKind kind = AnnotatorKind::ConditionalIndependent;
    double accuracy = 0.0;  // conditional_independent
    double p_easy = 0.0;    // hardness_mixture
    double p_hard = 0.0;
    double easy_fraction = 0.0;
};

struct SimulationConfig {
    long n_samples = 0;
    int n_classes = 0;
    std::vector<double> class_prior;  // empty = uniform
    std::vector<AnnotatorModel> annotators;
    std::optional<double> model_accuracy;
    std::uint64_t seed = 0;

    void validate() const;
    static SimulationConfig from_json_file(const std::string& path);
    static SimulationConfig from_json_string(const std::string& text);
};

// Draws the oracle column from the class prior, then corrupts it per
// annotator noise model. Deterministic given (config, seed). The optional
// model column is a conditional-independent labeler at model_accuracy.
Dataset simulate(const SimulationConfig& config);

// Population agreement between two conditional-independent annotators with
// uniform errors over the n_classes - 1 wrong labels:
// p_i p_j + (1 - p_i)(1 - p_j) / (n_classes - 1).
double expected_pairwise_agreement(double p_i, double p_j, int n_classes);

// Population marginal/conditional oracle accuracy of the hardness-mixture
// annotator pool (the per-sample difficulty draw is shared, so the
// conditional P(l_i = oracle | l_j = oracle) exceeds the marginal).
double mixture_marginal_accuracy(const AnnotatorModel& a);
double mixture_conditional_accuracy(const AnnotatorModel& a);

struct ConvergenceRow {
    int k;
    double u_theoretical;
    double u_empirical;
    double l_strong;
    double l_weak;
    double mean_annotator_accuracy;
};

struct ConvergenceOptions {
    double strong_model_accuracy = 0.95;
    double weak_model_accuracy = 0.60;
};

// For each K in k_range: bounds from the first K annotators, lower bounds of
// a strong and a weak model against their majority vote, and the mean
// annotator oracle accuracy. Feeds the convergence curve CSV.
std::vector<ConvergenceRow> run_convergence_experiment(const SimulationConfig& config,
                                                       const std::vector<int>& k_range,
                                                       const ConvergenceOptions& options = {});

struct CoverageRow {
    double t;
    double delta;              // exp(-2 N t^2)
    double upper_violation_rate;  // freq of sqrt(t + U_N^2) < U
    double lower_violation_rate;  // freq of L_N - t >= L
    long replicates;
};

// Monte Carlo check of the certificate semantics on a pool with known
// population agreement. Requires all annotators conditional_independent and
// a model accuracy. The lower certificate pairs the model with annotator 0.
std::vector<CoverageRow> run_coverage_experiment(const SimulationConfig& config,
                                                 const std::vector<double>& t_grid,
                                                 long replicates);

}  // namespace annocert

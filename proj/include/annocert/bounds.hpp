#pragma once

#include "annocert/agreement.hpp"

#include <optional>
#include <string>

namespace annocert {

struct BoundsReport {
    double u_theoretical = 0.0;  // diagonal-included upper bound
    double u_empirical = 0.0;    // diagonal-excluded upper bound
    std::optional<double> l_model;
    std::optional<double> margin;  // l_model - u_empirical
    Eigen::Index k = 0;
    Eigen::Index n = 0;
    std::string reference_id;
};

// sqrt( (1/K^2) sum_ij p_ij ) over all K^2 entries, diagonal counted as 1.
double theoretical_upper_bound(const Eigen::MatrixXd& agreement_values);
double theoretical_upper_bound(const AgreementMatrix& am);

// sqrt( (1/(K(K-1))) sum_{i != j} p_ij ), diagonal excluded.
double empirical_upper_bound(const Eigen::MatrixXd& agreement_values);
double empirical_upper_bound(const AgreementMatrix& am);

// K x K matrix with 1 on the diagonal and p everywhere else.
Eigen::MatrixXd uniform_agreement(Eigen::Index k, double p);

// Closed form of the ratio of the two upper bounds on a uniform agreement
// matrix: sqrt((1 + (K-1)p) / (Kp)). Decreasing in K, -> 1 as K grows.
double convergence_ratio(Eigen::Index k, double p);

// Agreement between the model column and a reference column; under the
// lower-bound assumption this bounds the model's oracle accuracy from below.
double lower_bound(const LabelColumn& reference, const LabelColumn& model);

BoundsReport bounds_report(const AnnotationMatrix& m,
                           const std::optional<LabelColumn>& model,
                           const LabelColumn& reference);

}  // namespace annocert

#pragma once

#include "annocert/label_types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace annocert {

// One ordered annotator pair (i, j) of the positive-correlation check:
// P(l_i = oracle | l_j = oracle) >= P(l_i = oracle).
struct PositiveCorrelationEntry {
    Eigen::Index i = 0;
    Eigen::Index j = 0;
    std::optional<double> lhs;  // unset when the conditioning event is empty
    double rhs = 0.0;
    long support = 0;  // rows with l_j = oracle
    bool holds() const { return lhs && *lhs >= rhs; }
};

struct PositiveCorrelationReport {
    std::vector<PositiveCorrelationEntry> pairs;
    // All ordered pairs merged, as published.
    std::optional<double> pooled_lhs;
    double pooled_rhs = 0.0;
    long pooled_support = 0;
};

// The lower-bound assumption, in its conservative summed form:
// P(model = oracle | reference != oracle) >= sum over wrong labels of
// P(model = wrong | reference != oracle). The two sides partition the
// conditional distribution, so lhs + rhs_sum = 1 whenever support > 0.
struct LowerBoundAssumptionReport {
    std::optional<double> lhs;
    std::optional<double> rhs_sum;
    long support = 0;  // rows with reference != oracle
    bool holds() const { return lhs && *lhs >= *rhs_sum; }
};

struct AssumptionReport {
    PositiveCorrelationReport positive_correlation;
    LowerBoundAssumptionReport lower_bound_check;
};

PositiveCorrelationReport check_positive_correlation(const AnnotationMatrix& m,
                                                     const LabelColumn& oracle);

LowerBoundAssumptionReport check_lower_bound_assumption(const LabelColumn& reference,
                                                        const LabelColumn& model,
                                                        const LabelColumn& oracle);

// P(labels = oracle), exact count over the sample.
double oracle_accuracy(const LabelColumn& labels, const LabelColumn& oracle);

}  // namespace annocert

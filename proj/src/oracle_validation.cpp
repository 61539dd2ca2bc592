#include "annocert/oracle_validation.hpp"

#include "annocert/agreement.hpp"

namespace annocert {

PositiveCorrelationReport check_positive_correlation(const AnnotationMatrix& m,
                                                     const LabelColumn& oracle) {
    if (oracle.size() != m.n_samples()) throw std::invalid_argument("oracle length mismatch");
    const Eigen::Index k = m.n_annotators();
    const Eigen::Index n = m.n_samples();

    PositiveCorrelationReport report;
    long long pooled_joint = 0, pooled_cond = 0, pooled_marginal = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
        const long long marginal_i = (m.labels().col(i).array() == oracle.labels.array()).count();
        for (Eigen::Index j = 0; j < k; ++j) {
            if (i == j) continue;
            long long cond_support = 0, joint = 0;
            for (Eigen::Index row = 0; row < n; ++row) {
                if (m.labels()(row, j) == oracle.labels(row)) {
                    ++cond_support;
                    if (m.labels()(row, i) == oracle.labels(row)) ++joint;
                }
            }
            PositiveCorrelationEntry e;
            e.i = i;
            e.j = j;
            e.support = static_cast<long>(cond_support);
            e.rhs = static_cast<double>(marginal_i) / static_cast<double>(n);
            if (cond_support > 0) e.lhs = static_cast<double>(joint) / static_cast<double>(cond_support);
            report.pairs.push_back(e);

            pooled_joint += joint;
            pooled_cond += cond_support;
            pooled_marginal += marginal_i;
        }
    }
    report.pooled_support = static_cast<long>(pooled_cond);
    report.pooled_rhs = static_cast<double>(pooled_marginal) /
                        (static_cast<double>(n) * static_cast<double>(k * (k - 1)));
    if (pooled_cond > 0) {
        report.pooled_lhs = static_cast<double>(pooled_joint) / static_cast<double>(pooled_cond);
    }
    return report;
}

LowerBoundAssumptionReport check_lower_bound_assumption(const LabelColumn& reference,
                                                        const LabelColumn& model,
                                                        const LabelColumn& oracle) {
    if (reference.size() != oracle.size() || model.size() != oracle.size()) {
        throw std::invalid_argument("column length mismatch");
    }
    long long support = 0, correct = 0;
    for (Eigen::Index row = 0; row < oracle.size(); ++row) {
        if (reference.labels(row) != oracle.labels(row)) {
            ++support;
            if (model.labels(row) == oracle.labels(row)) ++correct;
        }
    }
    LowerBoundAssumptionReport r;
    r.support = static_cast<long>(support);
    if (support > 0) {
        // The conditional distribution of the model label splits into the
        // correct class and the union of wrong classes, so the two sides
        // sum to 1 exactly.
        r.lhs = static_cast<double>(correct) / static_cast<double>(support);
        r.rhs_sum = static_cast<double>(support - correct) / static_cast<double>(support);
    }
    return r;
}

double oracle_accuracy(const LabelColumn& labels, const LabelColumn& oracle) {
    return pairwise_agreement(labels, oracle);
}

}  // namespace annocert

#pragma once

#include "annocert/label_types.hpp"

namespace annocert {

// K x K empirical pairwise agreement, kept as exact integer match counts
// over a shared N. Ratios are formed once, at presentation.
class AgreementMatrix {
public:
    AgreementMatrix(Eigen::MatrixXi agree_counts, Eigen::Index n_samples,
                    std::vector<std::string> ids);

    Eigen::Index size() const { return counts_.rows(); }
    Eigen::Index n_samples() const { return n_; }
    const Eigen::MatrixXi& counts() const { return counts_; }
    const std::vector<std::string>& ids() const { return ids_; }

    double value(Eigen::Index i, Eigen::Index j) const {
        return static_cast<double>(counts_(i, j)) / static_cast<double>(n_);
    }

    Eigen::MatrixXd values() const {
        return counts_.cast<double>() / static_cast<double>(n_);
    }

private:
    Eigen::MatrixXi counts_;
    Eigen::Index n_;
    std::vector<std::string> ids_;
};

// Exact match count between two equal-length columns.
Eigen::Index agreement_count(const LabelColumn& a, const LabelColumn& b);

// Fraction of samples on which the two columns agree.
double pairwise_agreement(const LabelColumn& a, const LabelColumn& b);

// All-pairs agreement; diagonal is exactly N/N = 1 by definition.
AgreementMatrix agreement_matrix(const AnnotationMatrix& m);

}  // namespace annocert

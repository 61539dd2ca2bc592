#include "annocert/agreement.hpp"

namespace annocert {

AgreementMatrix::AgreementMatrix(Eigen::MatrixXi agree_counts, Eigen::Index n_samples,
                                 std::vector<std::string> ids)
    : counts_(std::move(agree_counts)), n_(n_samples), ids_(std::move(ids)) {
    if (counts_.rows() != counts_.cols()) throw std::invalid_argument("agreement matrix must be square");
    if (counts_.rows() < 2) throw std::invalid_argument("agreement matrix needs K >= 2");
    if (n_ < 1) throw std::invalid_argument("agreement matrix needs N >= 1");
    if (static_cast<Eigen::Index>(ids_.size()) != counts_.rows()) {
        throw std::invalid_argument("id count does not match matrix size");
    }
    for (Eigen::Index i = 0; i < counts_.rows(); ++i) {
        if (counts_(i, i) != n_) throw std::invalid_argument("diagonal must equal N");
        for (Eigen::Index j = 0; j < counts_.cols(); ++j) {
            if (counts_(i, j) != counts_(j, i)) throw std::invalid_argument("agreement counts must be symmetric");
            if (counts_(i, j) < 0 || counts_(i, j) > n_) throw std::invalid_argument("count out of [0, N]");
        }
    }
}

Eigen::Index agreement_count(const LabelColumn& a, const LabelColumn& b) {
    if (a.size() != b.size()) throw std::invalid_argument("label columns differ in length");
    if (a.size() == 0) throw std::invalid_argument("empty label columns");
    return (a.labels.array() == b.labels.array()).count();
}

double pairwise_agreement(const LabelColumn& a, const LabelColumn& b) {
    return static_cast<double>(agreement_count(a, b)) / static_cast<double>(a.size());
}

AgreementMatrix agreement_matrix(const AnnotationMatrix& m) {
    const Eigen::Index k = m.n_annotators();
    const Eigen::Index n = m.n_samples();
    Eigen::MatrixXi counts(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        counts(i, i) = static_cast<int>(n);  // defined, not computed
        for (Eigen::Index j = i + 1; j < k; ++j) {
            const int c = static_cast<int>((m.labels().col(i).array() == m.labels().col(j).array()).count());
            counts(i, j) = c;
            counts(j, i) = c;
        }
    }
    return AgreementMatrix(std::move(counts), n, m.annotator_ids());
}

}  // namespace annocert

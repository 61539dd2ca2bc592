#include "annocert/aggregation.hpp"

#include "annocert/agreement.hpp"

namespace annocert {

LabelColumn majority_vote(const AnnotationMatrix& m) {
    const Eigen::Index n = m.n_samples();
    const Eigen::Index k = m.n_annotators();
    const int n_classes = m.vocabulary().size();
    Eigen::VectorXi out(n);
    std::vector<int> counts(static_cast<size_t>(n_classes));
    for (Eigen::Index row = 0; row < n; ++row) {
        std::fill(counts.begin(), counts.end(), 0);
        for (Eigen::Index col = 0; col < k; ++col) ++counts[static_cast<size_t>(m.labels()(row, col))];
        int best = 0;
        for (int c = 1; c < n_classes; ++c) {
            if (counts[static_cast<size_t>(c)] > counts[static_cast<size_t>(best)]) best = c;
        }
        out(row) = best;
    }
    return LabelColumn{"aggregate", std::move(out)};
}

LabelColumn mean_then_bin(const Eigen::MatrixXd& scores, BinScheme scheme) {
    if (scores.rows() < 1 || scores.cols() < 1) throw std::invalid_argument("empty score matrix");
    if ((scores.array() < 0.0).any() || (scores.array() > 1.0).any()) {
        throw std::invalid_argument("scores must lie in [0,1]");
    }
    Eigen::VectorXd means = scores.rowwise().mean();
    Eigen::VectorXi out(scores.rows());
    for (Eigen::Index i = 0; i < means.size(); ++i) {
        const auto bin = bin_sentiment(means(i), scheme);
        out(i) = bin.excluded ? -1 : bin.cls;
    }
    return LabelColumn{"aggregate", std::move(out)};
}

double average_annotator_accuracy(const AnnotationMatrix& m, const LabelColumn& oracle) {
    if (oracle.size() != m.n_samples()) throw std::invalid_argument("oracle length mismatch");
    long long total = 0;
    for (Eigen::Index k = 0; k < m.n_annotators(); ++k) {
        total += (m.labels().col(k).array() == oracle.labels.array()).count();
    }
    return static_cast<double>(total) /
           (static_cast<double>(m.n_samples()) * static_cast<double>(m.n_annotators()));
}

}  // namespace annocert

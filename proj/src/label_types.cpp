#include "annocert/label_types.hpp"

namespace annocert {

LabelVocabulary::LabelVocabulary(std::vector<std::string> classes) : classes_(std::move(classes)) {
    if (classes_.size() < 2) {
        throw std::invalid_argument("vocabulary needs at least 2 classes");
    }
    for (size_t i = 0; i < classes_.size(); ++i) {
        auto [it, inserted] = index_.emplace(classes_[i], static_cast<LabelIndex>(i));
        if (!inserted) {
            throw std::invalid_argument("duplicate class identifier: " + classes_[i]);
        }
    }
}

std::optional<LabelIndex> LabelVocabulary::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

LabelIndex LabelVocabulary::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    LabelIndex idx = static_cast<LabelIndex>(classes_.size());
    classes_.push_back(name);
    index_.emplace(name, idx);
    return idx;
}

AnnotationMatrix::AnnotationMatrix(Eigen::MatrixXi labels,
                                   std::vector<std::string> annotator_ids,
                                   std::vector<std::string> sample_ids,
                                   LabelVocabulary vocabulary)
    : labels_(std::move(labels)),
      annotator_ids_(std::move(annotator_ids)),
      sample_ids_(std::move(sample_ids)),
      vocab_(std::move(vocabulary)) {
    if (labels_.rows() < 1) throw std::invalid_argument("annotation matrix needs at least 1 sample");
    if (labels_.cols() < 2) throw std::invalid_argument("annotation matrix needs at least 2 annotators");
    if (static_cast<Eigen::Index>(annotator_ids_.size()) != labels_.cols()) {
        throw std::invalid_argument("annotator id count does not match columns");
    }
    if (static_cast<Eigen::Index>(sample_ids_.size()) != labels_.rows()) {
        throw std::invalid_argument("sample id count does not match rows");
    }
    for (Eigen::Index n = 0; n < labels_.rows(); ++n) {
        for (Eigen::Index k = 0; k < labels_.cols(); ++k) {
            if (!vocab_.contains_index(labels_(n, k))) {
                throw std::invalid_argument("label index out of vocabulary range");
            }
        }
    }
}

LabelColumn AnnotationMatrix::column(Eigen::Index k) const {
    return LabelColumn{annotator_ids_.at(static_cast<size_t>(k)), labels_.col(k)};
}

AnnotationMatrix AnnotationMatrix::head_annotators(Eigen::Index k) const {
    if (k < 2 || k > n_annotators()) throw std::invalid_argument("head_annotators: k out of range");
    std::vector<std::string> ids(annotator_ids_.begin(), annotator_ids_.begin() + k);
    return AnnotationMatrix(labels_.leftCols(k), std::move(ids), sample_ids_, vocab_);
}

}  // namespace annocert

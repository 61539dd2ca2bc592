#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace annocert {

using LabelIndex = int;

// Ordered set of class identifiers. The position of a class is its canonical
// integer encoding; all downstream math works on indices.
class LabelVocabulary {
public:
    LabelVocabulary() = default;

    explicit LabelVocabulary(std::vector<std::string> classes);

    int size() const { return static_cast<int>(classes_.size()); }

    const std::string& name(LabelIndex idx) const { return classes_.at(static_cast<size_t>(idx)); }

    std::optional<LabelIndex> index_of(const std::string& name) const;

    // Adds the class if unseen, returns its index either way.
    LabelIndex intern(const std::string& name);

    const std::vector<std::string>& classes() const { return classes_; }

    bool contains_index(LabelIndex idx) const { return idx >= 0 && idx < size(); }

private:
    std::vector<std::string> classes_;
    std::unordered_map<std::string, LabelIndex> index_;
};

// A single length-N column of class indices with a source tag
// (an annotator id, "model", "aggregate", or "oracle").
struct LabelColumn {
    std::string source_id;
    Eigen::VectorXi labels;

    Eigen::Index size() const { return labels.size(); }
};

// N x K matrix of class indices. Immutable after construction.
class AnnotationMatrix {
public:
    AnnotationMatrix(Eigen::MatrixXi labels,
                     std::vector<std::string> annotator_ids,
                     std::vector<std::string> sample_ids,
                     LabelVocabulary vocabulary);

    Eigen::Index n_samples() const { return labels_.rows(); }
    Eigen::Index n_annotators() const { return labels_.cols(); }

    const Eigen::MatrixXi& labels() const { return labels_; }
    const std::vector<std::string>& annotator_ids() const { return annotator_ids_; }
    const std::vector<std::string>& sample_ids() const { return sample_ids_; }
    const LabelVocabulary& vocabulary() const { return vocab_; }

    LabelColumn column(Eigen::Index k) const;

    // Matrix restricted to the first k annotator columns (for K-sweeps).
    AnnotationMatrix head_annotators(Eigen::Index k) const;

private:
    Eigen::MatrixXi labels_;
    std::vector<std::string> annotator_ids_;
    std::vector<std::string> sample_ids_;
    LabelVocabulary vocab_;
};

}  // namespace annocert

#pragma once

#include "annocert/dataset_io.hpp"
#include "annocert/label_types.hpp"

namespace annocert {

// Per-row plurality vote over the annotator columns; ties go to the lowest
// class index so the result is deterministic.
LabelColumn majority_vote(const AnnotationMatrix& m);

// Per-row arithmetic mean of [0,1] scores, then sentiment binning. Rows that
// fall in the excluded two-class band get label -1 in the returned column.
LabelColumn mean_then_bin(const Eigen::MatrixXd& scores, BinScheme scheme);

// (1/K) sum_i agreement(annotator_i, oracle); simulation / audited settings.
double average_annotator_accuracy(const AnnotationMatrix& m, const LabelColumn& oracle);

}  // namespace annocert

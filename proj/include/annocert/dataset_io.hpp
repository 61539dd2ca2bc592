#pragma once

#include "annocert/label_types.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace annocert {

enum class MissingPolicy { Reject, DropRow };

struct IngestOptions {
    MissingPolicy missing = MissingPolicy::Reject;
    // When set, unknown label strings are an error instead of being interned.
    std::optional<LabelVocabulary> vocabulary;
};

struct Dataset {
    AnnotationMatrix annotations;
    std::optional<LabelColumn> model;
    std::optional<LabelColumn> oracle;
    int dropped_rows = 0;
};

// CSV schema: header `sample_id,<annotator_1>,...,<annotator_K>[,model][,oracle]`.
// Columns named exactly "model"/"oracle" are split out of the annotator block.
Dataset ingest_dataset(const std::string& path, const IngestOptions& options = {});
Dataset ingest_dataset(std::istream& in, const IngestOptions& options = {});

void write_dataset(std::ostream& out, const Dataset& ds);
void write_dataset(const std::string& path, const Dataset& ds);

enum class BinScheme { FiveClass, TwoClass };

// Sentiment score bins. FiveClass: [0,.2] (.2,.4] (.4,.6] (.6,.8] (.8,1].
// TwoClass: <= 0.4 negative (0), > 0.6 positive (1), the neutral band in
// between is excluded.
struct BinResult {
    bool excluded = false;
    LabelIndex cls = -1;
};

BinResult bin_sentiment(double score, BinScheme scheme);

}  // namespace annocert

#include "annocert/dataset_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace annocert;

namespace {

Dataset ingest_string(const std::string& csv, const IngestOptions& opts = {}) {
    std::istringstream in(csv);
    return ingest_dataset(in, opts);
}

}  // namespace

TEST_CASE("ingest basic file with model column") {
    const auto ds = ingest_string(
        "sample_id,a1,a2,model\n"
        "s1,E,N,E\n"
        "s2,N,N,N\n"
        "s3,C,E,C\n");
    CHECK(ds.annotations.n_samples() == 3);
    CHECK(ds.annotations.n_annotators() == 2);
    CHECK(ds.annotations.vocabulary().size() == 3);
    REQUIRE(ds.model.has_value());
    CHECK(ds.model->source_id == "model");
    CHECK_FALSE(ds.oracle.has_value());
    // row order and label encoding preserved
    CHECK(ds.annotations.vocabulary().name(ds.annotations.labels()(0, 0)) == "E");
    CHECK(ds.annotations.vocabulary().name(ds.annotations.labels()(2, 1)) == "E");
}

TEST_CASE("incomplete rows: reject vs drop") {
    const std::string csv =
        "sample_id,a1,a2\n"
        "s1,E,N\n"
        "s2,E,\n"
        "s3,C,C\n";
    CHECK_THROWS_WITH_AS(ingest_string(csv), doctest::Contains("incomplete row"), std::runtime_error);

    IngestOptions drop;
    drop.missing = MissingPolicy::DropRow;
    const auto ds = ingest_string(csv, drop);
    CHECK(ds.annotations.n_samples() == 2);
    CHECK(ds.dropped_rows == 1);
}

TEST_CASE("ingest errors") {
    CHECK_THROWS_AS(ingest_string(""), std::runtime_error);
    CHECK_THROWS_WITH_AS(ingest_string("sample_id,a1\ns1,E\ns2,N\n"),
                         doctest::Contains(">= 2 annotator"), std::runtime_error);

    IngestOptions fixed;
    fixed.vocabulary = LabelVocabulary({"E", "N"});
    CHECK_THROWS_WITH_AS(ingest_string("sample_id,a1,a2\ns1,E,C\n", fixed),
                         doctest::Contains("unknown label"), std::runtime_error);
}

TEST_CASE("round trip preserves the dataset") {
    const std::string csv =
        "sample_id,a1,a2,model,oracle\n"
        "s1,E,N,E,E\n"
        "s2,N,N,N,N\n"
        "s3,C,E,C,E\n";
    const auto ds = ingest_string(csv);
    std::ostringstream out;
    write_dataset(out, ds);
    const auto ds2 = ingest_string(out.str());
    CHECK(ds2.annotations.n_samples() == ds.annotations.n_samples());
    CHECK(ds2.annotations.n_annotators() == ds.annotations.n_annotators());
    CHECK(ds2.annotations.labels() == ds.annotations.labels());
    CHECK(ds2.model->labels == ds.model->labels);
    CHECK(ds2.oracle->labels == ds.oracle->labels);
}

TEST_CASE("five-class sentiment bins") {
    CHECK(bin_sentiment(0.2, BinScheme::FiveClass).cls == 0);  // [0, 0.2] inclusive
    CHECK(bin_sentiment(0.0, BinScheme::FiveClass).cls == 0);
    CHECK(bin_sentiment(0.3, BinScheme::FiveClass).cls == 1);
    CHECK(bin_sentiment(0.5, BinScheme::FiveClass).cls == 2);
    CHECK(bin_sentiment(0.8, BinScheme::FiveClass).cls == 3);
    CHECK(bin_sentiment(1.0, BinScheme::FiveClass).cls == 4);
}

TEST_CASE("two-class sentiment bins exclude the neutral band") {
    CHECK(bin_sentiment(0.1, BinScheme::TwoClass).cls == 0);
    CHECK(bin_sentiment(0.5, BinScheme::TwoClass).excluded);
    CHECK(bin_sentiment(0.9, BinScheme::TwoClass).cls == 1);
    CHECK_FALSE(bin_sentiment(0.4, BinScheme::TwoClass).excluded);
    CHECK(bin_sentiment(0.6, BinScheme::TwoClass).excluded);
}

TEST_CASE("bin_sentiment rejects out-of-range scores and is monotone") {
    CHECK_THROWS_AS(bin_sentiment(-0.01, BinScheme::FiveClass), std::invalid_argument);
    CHECK_THROWS_AS(bin_sentiment(1.01, BinScheme::FiveClass), std::invalid_argument);
    int prev = 0;
    for (int i = 0; i <= 1000; ++i) {
        const int cls = bin_sentiment(i / 1000.0, BinScheme::FiveClass).cls;
        CHECK(cls >= prev);
        prev = cls;
    }
}

#include "annocert/dataset_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace annocert {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

Dataset ingest_dataset(const std::string& path, const IngestOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return ingest_dataset(in, options);
}

Dataset ingest_dataset(std::istream& in, const IngestOptions& options) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file");
    line = strip_cr(line);

    const auto header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "sample_id") {
        throw std::runtime_error("malformed header: expected sample_id,<annotators...>");
    }

    Eigen::Index model_col = -1, oracle_col = -1;
    std::vector<std::string> annotator_ids;
    std::vector<Eigen::Index> annotator_cols;
    for (size_t c = 1; c < header.size(); ++c) {
        if (header[c] == "model") {
            model_col = static_cast<Eigen::Index>(c);
        } else if (header[c] == "oracle") {
            oracle_col = static_cast<Eigen::Index>(c);
        } else {
            annotator_ids.push_back(header[c]);
            annotator_cols.push_back(static_cast<Eigen::Index>(c));
        }
    }
    if (annotator_ids.size() < 2) {
        throw std::runtime_error("need >= 2 annotator columns, got " +
                                 std::to_string(annotator_ids.size()));
    }

    LabelVocabulary vocab;
    const bool fixed_vocab = options.vocabulary.has_value();
    if (fixed_vocab) vocab = *options.vocabulary;

    auto to_index = [&](const std::string& s) -> LabelIndex {
        if (fixed_vocab) {
            auto idx = vocab.index_of(s);
            if (!idx) throw std::runtime_error("unknown label: " + s);
            return *idx;
        }
        return vocab.intern(s);
    };

    std::vector<std::string> sample_ids;
    std::vector<std::vector<LabelIndex>> rows;
    std::vector<LabelIndex> model_vals, oracle_vals;
    int dropped = 0;
    size_t line_no = 1;

    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(header.size()) + " fields, got " +
                                     std::to_string(fields.size()));
        }
        bool incomplete = false;
        for (size_t c = 1; c < fields.size(); ++c) {
            if (fields[c].empty()) { incomplete = true; break; }
        }
        if (incomplete) {
            if (options.missing == MissingPolicy::Reject) {
                throw std::runtime_error("line " + std::to_string(line_no) + ": incomplete row");
            }
            ++dropped;
            continue;
        }
        sample_ids.push_back(fields[0]);
        std::vector<LabelIndex> row;
        row.reserve(annotator_cols.size());
        for (auto c : annotator_cols) row.push_back(to_index(fields[static_cast<size_t>(c)]));
        rows.push_back(std::move(row));
        if (model_col >= 0) model_vals.push_back(to_index(fields[static_cast<size_t>(model_col)]));
        if (oracle_col >= 0) oracle_vals.push_back(to_index(fields[static_cast<size_t>(oracle_col)]));
    }

    if (rows.empty()) throw std::runtime_error("no data rows");
    if (!fixed_vocab && vocab.size() < 2) {
        throw std::runtime_error("fewer than 2 distinct labels observed");
    }

    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index k = static_cast<Eigen::Index>(annotator_ids.size());
    Eigen::MatrixXi labels(n, k);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            labels(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];

    Dataset ds{AnnotationMatrix(std::move(labels), std::move(annotator_ids),
                                std::move(sample_ids), std::move(vocab)),
               std::nullopt, std::nullopt, dropped};
    if (model_col >= 0) {
        Eigen::VectorXi v = Eigen::Map<Eigen::VectorXi>(model_vals.data(), n);
        ds.model = LabelColumn{"model", std::move(v)};
    }
    if (oracle_col >= 0) {
        Eigen::VectorXi v = Eigen::Map<Eigen::VectorXi>(oracle_vals.data(), n);
        ds.oracle = LabelColumn{"oracle", std::move(v)};
    }
    return ds;
}

void write_dataset(std::ostream& out, const Dataset& ds) {
    const auto& m = ds.annotations;
    out << "sample_id";
    for (const auto& id : m.annotator_ids()) out << ',' << id;
    if (ds.model) out << ",model";
    if (ds.oracle) out << ",oracle";
    out << '\n';
    const auto& vocab = m.vocabulary();
    for (Eigen::Index n = 0; n < m.n_samples(); ++n) {
        out << m.sample_ids()[static_cast<size_t>(n)];
        for (Eigen::Index k = 0; k < m.n_annotators(); ++k) out << ',' << vocab.name(m.labels()(n, k));
        if (ds.model) out << ',' << vocab.name(ds.model->labels(n));
        if (ds.oracle) out << ',' << vocab.name(ds.oracle->labels(n));
        out << '\n';
    }
}

void write_dataset(const std::string& path, const Dataset& ds) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_dataset(out, ds);
}

BinResult bin_sentiment(double score, BinScheme scheme) {
    if (score < 0.0 || score > 1.0) {
        throw std::invalid_argument("sentiment score must lie in [0,1]");
    }
    if (scheme == BinScheme::FiveClass) {
        if (score <= 0.2) return {false, 0};
        if (score <= 0.4) return {false, 1};
        if (score <= 0.6) return {false, 2};
        if (score <= 0.8) return {false, 3};
        return {false, 4};
    }
    // Two-class mirrors the five-class neutral band: the (0.4, 0.6] region
    // has no polarity and is excluded.
    if (score <= 0.4) return {false, 0};
    if (score <= 0.6) return {true, -1};
    return {false, 1};
}

}  // namespace annocert

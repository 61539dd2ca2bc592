#include "annocert/bounds.hpp"

#include <cmath>

namespace annocert {

namespace {

void check_square(const Eigen::MatrixXd& v) {
    if (v.rows() != v.cols() || v.rows() < 2) {
        throw std::invalid_argument("agreement values must be square with K >= 2");
    }
}

}  // namespace

double theoretical_upper_bound(const Eigen::MatrixXd& v) {
    check_square(v);
    const double k = static_cast<double>(v.rows());
    return std::sqrt(v.sum() / (k * k));
}

double theoretical_upper_bound(const AgreementMatrix& am) {
    // Exact integer total over all K^2 cells, one division, one sqrt.
    const double k = static_cast<double>(am.size());
    const double total = static_cast<double>(am.counts().cast<long long>().sum());
    return std::sqrt(total / (static_cast<double>(am.n_samples()) * k * k));
}

double empirical_upper_bound(const Eigen::MatrixXd& v) {
    check_square(v);
    const double k = static_cast<double>(v.rows());
    const double off_diag = v.sum() - v.diagonal().sum();
    return std::sqrt(off_diag / (k * (k - 1.0)));
}

double empirical_upper_bound(const AgreementMatrix& am) {
    const double k = static_cast<double>(am.size());
    const long long total = am.counts().cast<long long>().sum();
    const long long diag = am.counts().cast<long long>().diagonal().sum();
    return std::sqrt(static_cast<double>(total - diag) /
                     (static_cast<double>(am.n_samples()) * k * (k - 1.0)));
}

Eigen::MatrixXd uniform_agreement(Eigen::Index k, double p) {
    if (k < 2) throw std::invalid_argument("uniform_agreement needs K >= 2");
    Eigen::MatrixXd v = Eigen::MatrixXd::Constant(k, k, p);
    v.diagonal().setOnes();
    return v;
}

double convergence_ratio(Eigen::Index k, double p) {
    if (k < 2) throw std::invalid_argument("convergence_ratio needs K >= 2");
    if (p <= 0.0) throw std::invalid_argument("convergence_ratio needs p > 0");
    const double kd = static_cast<double>(k);
    return std::sqrt((1.0 + (kd - 1.0) * p) / (kd * p));
}

double lower_bound(const LabelColumn& reference, const LabelColumn& model) {
    return pairwise_agreement(reference, model);
}

BoundsReport bounds_report(const AnnotationMatrix& m,
                           const std::optional<LabelColumn>& model,
                           const LabelColumn& reference) {
    const auto am = agreement_matrix(m);
    BoundsReport r;
    r.u_theoretical = theoretical_upper_bound(am);
    r.u_empirical = empirical_upper_bound(am);
    r.k = m.n_annotators();
    r.n = m.n_samples();
    r.reference_id = reference.source_id;
    if (model) {
        r.l_model = lower_bound(reference, *model);
        r.margin = *r.l_model - r.u_empirical;
    }
    return r;
}

}  // namespace annocert

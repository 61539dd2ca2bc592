#pragma once

#include "annocert/aggregation.hpp"
#include "annocert/bounds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace annocert {

enum class CertMethod { HMS, OMS };

enum class CertStatus {
    Certified,
    NotCertified,       // margin l_n - u_n <= 0, no score emitted
    MarginTooSmall      // HMS split yields t_l < 0 at this N
};

struct OmsStep {
    int iteration;
    double t_u;
    double score;
};

struct CertificationResult {
    CertMethod method = CertMethod::HMS;
    CertStatus status = CertStatus::NotCertified;
    double t_u = 0.0;
    double t_l = 0.0;
    double tau = 0.0;
    double delta_u = 1.0;
    double delta_l = 1.0;
    double score = 0.0;  // 1 - delta_u - delta_l; may be negative
    long n = 0;
    double l_n = 0.0;
    double u_n = 0.0;
    std::string message;
    std::vector<OmsStep> oms_trace;
};

// delta = exp(-2 n t^2): the probability that a [0,1]-bounded empirical mean
// misses its expectation by more than t.
double hoeffding_delta(long n, double t);

struct Certificate {
    double bound;
    double delta;
};

// One-sided certificates. Upper: the average-annotator oracle accuracy is at
// most sqrt(t_u + u_n^2) except with probability delta_u. Lower: the model
// oracle accuracy is at least l_n - t_l except with probability delta_l.
Certificate sample_upper_certificate(double u_n, long n, double t_u);
Certificate sample_lower_certificate(double l_n, long n, double t_l);

// Confidence score and its derivative in t_u under the margin constraint
// l_n - t_l - sqrt(t_u + u_n^2) = tau.
double confidence_score(double t_u, double l_n, double u_n, long n, double tau = 0.0);
double confidence_score_gradient(double t_u, double l_n, double u_n, long n, double tau = 0.0);

// Heuristic split: t_u takes half the margin, t_l absorbs the rest.
CertificationResult confidence_hms(double l_n, double u_n, long n, double tau = 0.0);

struct OmsOptions {
    double learning_rate = 1e-4;
    int iterations = 100;
    bool keep_trace = false;
};

// Projected gradient ascent on the score, initialized at the HMS split.
// Iterates are clamped to {t_u >= 0, t_l(t_u) >= 0}; the best iterate wins,
// so the OMS score never falls below the HMS score.
CertificationResult confidence_oms(double l_n, double u_n, long n, double tau = 0.0,
                                   const OmsOptions& options = {});

struct CertifyOptions {
    CertMethod method = CertMethod::HMS;
    double tau = 0.0;
    OmsOptions oms;
    // When unset, the reference column is the majority-vote aggregate.
    std::optional<LabelColumn> reference;
};

struct CertifyOutput {
    BoundsReport bounds;
    CertificationResult certification;
};

// Full pipeline: aggregate -> upper bound -> lower bound -> margin check ->
// confidence score.
CertifyOutput certify(const AnnotationMatrix& m, const LabelColumn& model,
                      const CertifyOptions& options = {});

}  // namespace annocert

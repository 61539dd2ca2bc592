#include "annocert/certification.hpp"

#include <algorithm>
#include <cmath>

namespace annocert {

namespace {

// t_l is pinned by the margin constraint once t_u is chosen.
double t_l_of(double t_u, double l_n, double u_n, double tau) {
    return l_n - tau - std::sqrt(t_u + u_n * u_n);
}

CertificationResult make_result(CertMethod method, double t_u, double l_n, double u_n,
                                long n, double tau) {
    CertificationResult r;
    r.method = method;
    r.status = CertStatus::Certified;
    r.t_u = t_u;
    r.t_l = t_l_of(t_u, l_n, u_n, tau);
    r.tau = tau;
    r.delta_u = hoeffding_delta(n, t_u);
    r.delta_l = hoeffding_delta(n, r.t_l);
    r.score = 1.0 - r.delta_u - r.delta_l;
    r.n = n;
    r.l_n = l_n;
    r.u_n = u_n;
    return r;
}

}  // namespace

double hoeffding_delta(long n, double t) {
    if (n < 1) throw std::invalid_argument("hoeffding_delta needs n >= 1");
    if (t < 0.0) throw std::invalid_argument("hoeffding_delta needs t >= 0");
    return std::exp(-2.0 * static_cast<double>(n) * t * t);
}

Certificate sample_upper_certificate(double u_n, long n, double t_u) {
    return Certificate{std::sqrt(t_u + u_n * u_n), hoeffding_delta(n, t_u)};
}

Certificate sample_lower_certificate(double l_n, long n, double t_l) {
    return Certificate{l_n - t_l, hoeffding_delta(n, t_l)};
}

double confidence_score(double t_u, double l_n, double u_n, long n, double tau) {
    const double t_l = t_l_of(t_u, l_n, u_n, tau);
    const double nd = static_cast<double>(n);
    return 1.0 - std::exp(-2.0 * nd * t_u * t_u) - std::exp(-2.0 * nd * t_l * t_l);
}

double confidence_score_gradient(double t_u, double l_n, double u_n, long n, double tau) {
    const double nd = static_cast<double>(n);
    const double root = std::sqrt(t_u + u_n * u_n);
    const double t_l = l_n - tau - root;
    const double delta_u = std::exp(-2.0 * nd * t_u * t_u);
    const double delta_l = std::exp(-2.0 * nd * t_l * t_l);
    // d(t_l)/d(t_u) = -1 / (2 root)
    return 4.0 * nd * t_u * delta_u - 2.0 * nd * t_l * delta_l / root;
}

CertificationResult confidence_hms(double l_n, double u_n, long n, double tau) {
    if (n < 1) throw std::invalid_argument("confidence needs n >= 1");
    if (l_n <= u_n) {
        CertificationResult r;
        r.method = CertMethod::HMS;
        r.status = CertStatus::NotCertified;
        r.n = n;
        r.l_n = l_n;
        r.u_n = u_n;
        r.tau = tau;
        r.message = "margin L_N - U_N is not positive; certification refused";
        return r;
    }
    const double t_u = (l_n - u_n) / 2.0;
    const double t_l = t_l_of(t_u, l_n, u_n, tau);
    if (t_l < 0.0) {
        CertificationResult r;
        r.method = CertMethod::HMS;
        r.status = CertStatus::MarginTooSmall;
        r.n = n;
        r.l_n = l_n;
        r.u_n = u_n;
        r.tau = tau;
        r.message = "margin too small for HMS split at this N (t_l < 0)";
        return r;
    }
    return make_result(CertMethod::HMS, t_u, l_n, u_n, n, tau);
}

CertificationResult confidence_oms(double l_n, double u_n, long n, double tau,
                                   const OmsOptions& options) {
    CertificationResult init = confidence_hms(l_n, u_n, n, tau);
    if (init.status == CertStatus::NotCertified) {
        init.method = CertMethod::OMS;
        return init;
    }

    // Feasible set {t_u >= 0, t_l(t_u) >= 0}; the latter caps t_u at
    // (l_n - tau)^2 - u_n^2. An HMS init outside the cap is projected in.
    const double t_u_max = (l_n - tau) * (l_n - tau) - u_n * u_n;
    if (t_u_max < 0.0) {
        init.method = CertMethod::OMS;
        init.status = CertStatus::NotCertified;
        init.message = "empty feasible set: no t_u with t_l >= 0";
        return init;
    }
    double t_u = std::clamp((l_n - u_n) / 2.0, 0.0, t_u_max);
    double best_t_u = t_u;
    double best_score = confidence_score(t_u, l_n, u_n, n, tau);
    std::vector<OmsStep> trace;
    if (options.keep_trace) trace.push_back({0, t_u, best_score});

    for (int it = 1; it <= options.iterations; ++it) {
        const double grad = confidence_score_gradient(t_u, l_n, u_n, n, tau);
        t_u = std::clamp(t_u + options.learning_rate * grad, 0.0, t_u_max);
        const double score = confidence_score(t_u, l_n, u_n, n, tau);
        if (score > best_score) {
            best_score = score;
            best_t_u = t_u;
        }
        if (options.keep_trace) trace.push_back({it, t_u, score});
    }

    CertificationResult r = make_result(CertMethod::OMS, best_t_u, l_n, u_n, n, tau);
    r.oms_trace = std::move(trace);
    return r;
}

CertifyOutput certify(const AnnotationMatrix& m, const LabelColumn& model,
                      const CertifyOptions& options) {
    if (model.size() != m.n_samples()) throw std::invalid_argument("model column length mismatch");
    const LabelColumn reference = options.reference ? *options.reference : majority_vote(m);
    if (reference.size() != m.n_samples()) throw std::invalid_argument("reference column length mismatch");

    CertifyOutput out;
    out.bounds = bounds_report(m, model, reference);
    const double l_n = *out.bounds.l_model;
    const double u_n = out.bounds.u_empirical;
    const long n = static_cast<long>(m.n_samples());
    out.certification = options.method == CertMethod::OMS
                            ? confidence_oms(l_n, u_n, n, options.tau, options.oms)
                            : confidence_hms(l_n, u_n, n, options.tau);
    return out;
}

}  // namespace annocert

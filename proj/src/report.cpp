#include "annocert/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace annocert {

nlohmann::json to_json(const RunManifest& m) {
    nlohmann::json j{{"command", m.command},
                     {"inputs", m.inputs},
                     {"options", m.options},
                     {"version", m.version},
                     {"timestamp", m.timestamp}};
    if (m.seed) j["seed"] = *m.seed;
    return j;
}

nlohmann::json to_json(const AgreementMatrix& am) {
    nlohmann::json values = nlohmann::json::array();
    for (Eigen::Index i = 0; i < am.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < am.size(); ++j) row.push_back(am.value(i, j));
        values.push_back(row);
    }
    return nlohmann::json{{"ids", am.ids()}, {"n", am.n_samples()}, {"values", values}};
}

nlohmann::json to_json(const BoundsReport& r) {
    nlohmann::json j{{"u_theoretical", r.u_theoretical},
                     {"u_empirical", r.u_empirical},
                     {"k", r.k},
                     {"n", r.n},
                     {"reference_id", r.reference_id}};
    if (r.l_model) j["l_model"] = *r.l_model;
    if (r.margin) j["margin"] = *r.margin;
    return j;
}

nlohmann::json to_json(const CertificationResult& r) {
    nlohmann::json j{{"method", cert_method_name(r.method)},
                     {"status", cert_status_name(r.status)},
                     {"tau", r.tau},
                     {"n", r.n},
                     {"l_n", r.l_n},
                     {"u_n", r.u_n}};
    if (r.status == CertStatus::Certified) {
        j["t_u"] = r.t_u;
        j["t_l"] = r.t_l;
        j["delta_u"] = r.delta_u;
        j["delta_l"] = r.delta_l;
        j["score"] = r.score;
    }
    if (!r.message.empty()) j["message"] = r.message;
    if (!r.oms_trace.empty()) {
        nlohmann::json trace = nlohmann::json::array();
        for (const auto& s : r.oms_trace) {
            trace.push_back({{"iteration", s.iteration}, {"t_u", s.t_u}, {"score", s.score}});
        }
        j["trace"] = trace;
    }
    return j;
}

nlohmann::json to_json(const AssumptionReport& r) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& e : r.positive_correlation.pairs) {
        nlohmann::json je{{"i", e.i}, {"j", e.j}, {"rhs", e.rhs}, {"support", e.support}};
        if (e.lhs) {
            je["lhs"] = *e.lhs;
            je["holds"] = e.holds();
        } else {
            je["lhs"] = "undefined";
        }
        pairs.push_back(je);
    }
    nlohmann::json pc{{"pairs", pairs},
                      {"pooled_rhs", r.positive_correlation.pooled_rhs},
                      {"pooled_support", r.positive_correlation.pooled_support}};
    if (r.positive_correlation.pooled_lhs) {
        pc["pooled_lhs"] = *r.positive_correlation.pooled_lhs;
        pc["pooled_holds"] = *r.positive_correlation.pooled_lhs >= r.positive_correlation.pooled_rhs;
    } else {
        pc["pooled_lhs"] = "undefined";
    }

    nlohmann::json lb{{"support", r.lower_bound_check.support}};
    if (r.lower_bound_check.lhs) {
        lb["lhs"] = *r.lower_bound_check.lhs;
        lb["rhs_sum"] = *r.lower_bound_check.rhs_sum;
        lb["holds"] = r.lower_bound_check.holds();
    } else {
        lb["lhs"] = "undefined";
        lb["rhs_sum"] = "undefined";
    }
    return nlohmann::json{{"positive_correlation", pc}, {"lower_bound_check", lb}};
}

void write_agreement_csv(std::ostream& out, const AgreementMatrix& am) {
    out << "id";
    for (const auto& id : am.ids()) out << ',' << id;
    out << '\n';
    out << std::setprecision(17);
    for (Eigen::Index i = 0; i < am.size(); ++i) {
        out << am.ids()[static_cast<size_t>(i)];
        for (Eigen::Index j = 0; j < am.size(); ++j) out << ',' << am.value(i, j);
        out << '\n';
    }
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
    out << "K,u_t,u_e,l_strong,l_weak,mean_acc\n" << std::setprecision(17);
    for (const auto& r : rows) {
        out << r.k << ',' << r.u_theoretical << ',' << r.u_empirical << ',' << r.l_strong << ','
            << r.l_weak << ',' << r.mean_annotator_accuracy << '\n';
    }
}

void write_coverage_csv(std::ostream& out, const std::vector<CoverageRow>& rows) {
    out << "t,delta,upper_violation_rate,lower_violation_rate,replicates\n" << std::setprecision(17);
    for (const auto& r : rows) {
        out << r.t << ',' << r.delta << ',' << r.upper_violation_rate << ','
            << r.lower_violation_rate << ',' << r.replicates << '\n';
    }
}

std::string cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "certified";
        case CertStatus::NotCertified: return "not_certified";
        case CertStatus::MarginTooSmall: return "margin_too_small";
    }
    return "unknown";
}

std::string cert_method_name(CertMethod m) {
    return m == CertMethod::OMS ? "oms" : "hms";
}

std::string format_bounds_table(const BoundsReport& r) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    os << "K=" << r.k << " N=" << r.n << '\n';
    os << "U^(t) (theoretical upper bound)  " << r.u_theoretical << '\n';
    os << "U^(e) (empirical upper bound)    " << r.u_empirical << '\n';
    if (r.l_model) {
        std::string mark;
        if (*r.l_model > r.u_theoretical) mark = " ++";
        else if (*r.l_model > r.u_empirical) mark = " +";
        os << "L_N   (model lower bound)        " << *r.l_model << mark << '\n';
        os << "margin L_N - U^(e)               " << *r.margin << '\n';
        os << "reference: " << r.reference_id << '\n';
    }
    return os.str();
}

std::string format_certification_verdict(const CertificationResult& r) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    if (r.status != CertStatus::Certified) {
        os << "verdict: " << cert_status_name(r.status) << " (" << r.message << ")\n";
        return os.str();
    }
    os << "verdict: certified (" << cert_method_name(r.method) << ")\n";
    os << "  L_N=" << r.l_n << " U_N=" << r.u_n << " N=" << r.n << " tau=" << r.tau << '\n';
    os << "  t_u=" << r.t_u << " t_l=" << r.t_l << '\n';
    os << std::scientific << "  delta_u=" << r.delta_u << " delta_l=" << r.delta_l << '\n';
    os << std::fixed;
    if (r.score < 0.0) {
        os << "  confidence score S < 0 (raw " << r.score << ")\n";
    } else {
        os << "  confidence score S = " << r.score << '\n';
    }
    os << "  (outperformance is relative to the average annotator, not the best one)\n";
    return os.str();
}

std::string format_assumption_table(const AssumptionReport& r) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    os << "(a) positive correlation: P(l_i=oracle | l_j=oracle) >= P(l_i=oracle)\n";
    const auto& pc = r.positive_correlation;
    if (pc.pooled_lhs) {
        os << "  pooled: lhs=" << *pc.pooled_lhs << " rhs=" << pc.pooled_rhs
           << " support=" << pc.pooled_support
           << (*pc.pooled_lhs >= pc.pooled_rhs ? "  HOLDS" : "  VIOLATED") << '\n';
    } else {
        os << "  pooled: undefined (no conditioning rows)\n";
    }
    int violated = 0, undefined = 0;
    for (const auto& e : pc.pairs) {
        if (!e.lhs) ++undefined;
        else if (!e.holds()) ++violated;
    }
    os << "  pairs: " << pc.pairs.size() << " total, " << violated << " violated, " << undefined
       << " undefined\n";
    os << "(b) lower bound: P(model=oracle | ref!=oracle) >= sum of wrong-label masses\n";
    const auto& lb = r.lower_bound_check;
    if (lb.lhs) {
        os << "  lhs=" << *lb.lhs << " rhs_sum=" << *lb.rhs_sum << " support=" << lb.support
           << (lb.holds() ? "  HOLDS" : "  VIOLATED") << '\n';
    } else {
        os << "  undefined (reference never wrong, support=0)\n";
    }
    return os.str();
}

}  // namespace annocert

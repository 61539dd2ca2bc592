#pragma once

#include "annocert/certification.hpp"
#include "annocert/oracle_validation.hpp"
#include "annocert/simulator.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace annocert {

// Embedded in every emitted report for provenance.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    std::string options;
    std::string version;
    std::string timestamp;
    std::optional<std::uint64_t> seed;
};

nlohmann::json to_json(const RunManifest& m);
nlohmann::json to_json(const AgreementMatrix& am);
nlohmann::json to_json(const BoundsReport& r);
nlohmann::json to_json(const CertificationResult& r);
nlohmann::json to_json(const AssumptionReport& r);

void write_agreement_csv(std::ostream& out, const AgreementMatrix& am);
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
void write_coverage_csv(std::ostream& out, const std::vector<CoverageRow>& rows);

std::string cert_status_name(CertStatus s);
std::string cert_method_name(CertMethod m);

// Table-style renderings for terminal output. Bounds get the paper's
// dagger convention: '+' when L exceeds the empirical bound, '++' when it
// also exceeds the theoretical one.
std::string format_bounds_table(const BoundsReport& r);
std::string format_certification_verdict(const CertificationResult& r);
std::string format_assumption_table(const AssumptionReport& r);

}  // namespace annocert

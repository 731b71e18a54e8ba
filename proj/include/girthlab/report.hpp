#ifndef GIRTHLAB_REPORT_HPP
#define GIRTHLAB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "girthlab/constants.hpp"
#include "girthlab/cycles.hpp"
#include "girthlab/edge_stats.hpp"
#include "girthlab/feedback_arc.hpp"

namespace girthlab {

/// Version tag of the report envelope written by the CLI.
inline constexpr const char* kReportSchemaVersion = "1";

nlohmann::json to_json(const CycleWitness& w);
nlohmann::json to_json(const ExpansionTrace& t);
nlohmann::json to_json(const GlobalStats& g);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json to_json(const FasResult& r);
nlohmann::json to_json(const Fact1Report& r);
nlohmann::json to_json(const Lemma2Report& r);
nlohmann::json to_json(const SullivanReport& r);
nlohmann::json to_json(const constants::Certificate& c);
nlohmann::json to_json(const constants::BoundSet& b);

/// Envelope {"command", "version", "inputs", "payload"}.
nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           nlohmann::json payload);

/// FNV-1a 64-bit digest, hex encoded; used to echo input files in reports.
std::string fnv1a_hex(const std::string& bytes);

} // namespace girthlab

#endif

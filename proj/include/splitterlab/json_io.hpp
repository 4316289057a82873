#pragma once

// JSON schemas for the file formats the CLI reads and writes.  Field order
// is fixed (ordered_json) so repeated runs are byte-identical.

#include <json.hpp>

#include "splitterlab/characters.hpp"
#include "splitterlab/logarithms.hpp"
#include "splitterlab/splitting.hpp"
#include "splitterlab/structure_m15.hpp"

namespace splitterlab {

using ordered_json = nlohmann::ordered_json;

// {"modulus": n, "multipliers": [...], "splitters": [...asc],
//  "nonsingular": bool, "verified": true}
inline ordered_json certificate_to_json(const SplittingCertificate& cert, bool verified = true) {
    ordered_json j;
    j["modulus"] = cert.modulus;
    j["multipliers"] = cert.multipliers;
    j["splitters"] = cert.splitters;
    j["nonsingular"] = cert.nonsingular;
    j["verified"] = verified;
    return j;
}

inline SplittingCertificate certificate_from_json(const ordered_json& j) {
    SplittingCertificate cert;
    cert.modulus = j.at("modulus").get<u64>();
    cert.multipliers = j.at("multipliers").get<std::vector<i64>>();
    cert.splitters = j.at("splitters").get<std::vector<u64>>();
    cert.nonsingular = j.value("nonsingular", false);
    return cert;
}

// {"domain": [...], "k": int, "values": [...in domain order]}
inline ordered_json log_table_to_json(const LogTable& t) {
    ordered_json j;
    j["domain"] = t.domain.elements();
    j["k"] = t.k;
    j["values"] = t.values;
    return j;
}

inline LogTable log_table_from_json(const ordered_json& j) {
    MultiplierSet domain(j.at("domain").get<std::vector<i64>>());
    return LogTable(std::move(domain), j.at("k").get<u64>(),
                    j.at("values").get<std::vector<u64>>());
}

// {"k": int, "bases": [...], "targets": [...]}
inline ordered_json character_spec_to_json(const CharacterSpec& spec) {
    ordered_json j;
    j["k"] = spec.k;
    j["bases"] = spec.bases;
    j["targets"] = spec.targets;
    return j;
}

inline CharacterSpec character_spec_from_json(const ordered_json& j) {
    return CharacterSpec(j.at("k").get<u64>(), j.at("bases").get<std::vector<i64>>(),
                         j.at("targets").get<std::vector<u64>>());
}

// {"p": ..., "splitters_found": ..., "family": "A"|"B"|"both"|"none",
//  "signs": [...]}
inline ordered_json structure_report_to_json(const StructureReport& rep) {
    ordered_json j;
    j["p"] = rep.p;
    j["splitters_found"] = rep.splitters_found;
    j["family"] = rep.family;
    j["signs"] = rep.signs;
    return j;
}

}  // namespace splitterlab

#pragma once

// JSON encoding of claims, proof reports, checks and scan findings.

#include <string>

#include "json.hpp"
#include "overpart/prover.hpp"

namespace overpart {

using Json = nlohmann::ordered_json;

Json to_json(const CongruenceClaim& claim);
/// Throws InvalidArgument on malformed input; the claim is validated.
CongruenceClaim claim_from_json(const Json& j);
CongruenceClaim parse_claim(const std::string& text);

/// Timings are not serialized.
Json to_json(const ProofReport& report);
ProofReport report_from_json(const Json& j);

Json to_json(const ClaimCheck& check, const CongruenceClaim& claim, std::uint64_t n_max);
Json to_json(const ScanFinding& finding);

/// Human-readable rendering, one line per step.
std::string render_text(const ProofReport& report);

}  // namespace overpart

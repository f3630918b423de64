#include "overpart/report.hpp"

#include <sstream>

#include "overpart/errors.hpp"

namespace overpart {

Json to_json(const CongruenceClaim& claim) {
  Json conditions = Json::array();
  for (const auto& c : claim.conditions) {
    if (const auto* r = std::get_if<ResidueCondition>(&c)) {
      conditions.push_back({{"type", "residue"}, {"modulus", r->modulus}, {"residues", r->residues}});
    } else {
      const auto& k = std::get<KroneckerCondition>(c);
      conditions.push_back({{"type", "kronecker"}, {"prime", k.prime}, {"value", k.value}});
    }
  }
  return {{"modulus", claim.modulus},     {"multiplier", claim.multiplier}, {"A", claim.A},
          {"B", claim.B},                 {"conditions", conditions},       {"statement", claim.describe()}};
}

CongruenceClaim claim_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("claim must be a JSON object");
    CongruenceClaim claim;
    claim.modulus = j.at("modulus").get<std::uint64_t>();
    claim.multiplier = j.value("multiplier", std::uint64_t{1});
    claim.A = j.value("A", std::uint64_t{1});
    claim.B = j.value("B", std::uint64_t{0});
    if (j.contains("conditions")) {
      for (const auto& c : j.at("conditions")) {
        const auto type = c.at("type").get<std::string>();
        if (type == "residue") {
          claim.conditions.emplace_back(ResidueCondition{c.at("modulus").get<std::uint64_t>(),
                                                         c.at("residues").get<std::vector<std::uint64_t>>()});
        } else if (type == "kronecker") {
          claim.conditions.emplace_back(KroneckerCondition{c.at("prime").get<std::int64_t>(), c.at("value").get<int>()});
        } else {
          throw InvalidArgument("unknown condition type '" + type + "'");
        }
      }
    }
    claim.validate();
    return claim;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("claim: ") + e.what());
  }
}

CongruenceClaim parse_claim(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("claim is not valid JSON: ") + e.what());
  }
  return claim_from_json(j);
}

Json to_json(const ProofReport& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"name", s.name}, {"anchor", s.anchor}, {"witness", s.witness}, {"pass", s.pass}});
  }
  Json limits = Json::object();
  for (const auto& [k, v] : report.limits) limits[k] = v;
  return {{"title", report.title},
          {"claim", report.claim ? to_json(*report.claim) : Json(nullptr)},
          {"steps", steps},
          {"pass", report.pass},
          {"limits", limits}};
}

ProofReport report_from_json(const Json& j) {
  try {
    ProofReport report;
    report.title = j.at("title").get<std::string>();
    if (!j.at("claim").is_null()) report.claim = claim_from_json(j.at("claim"));
    for (const auto& s : j.at("steps")) {
      report.steps.push_back(ProofStep{s.at("name").get<std::string>(), s.at("anchor").get<std::string>(),
                                       s.at("witness").get<std::string>(), s.at("pass").get<bool>(), 0.0});
    }
    report.pass = j.at("pass").get<bool>();
    for (const auto& [k, v] : j.at("limits").items()) report.limits[k] = v.get<std::int64_t>();
    return report;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("report: ") + e.what());
  }
}

Json to_json(const ClaimCheck& check, const CongruenceClaim& claim, std::uint64_t n_max) {
  Json j{{"claim", to_json(claim)}, {"n_max", n_max}, {"pass", check.pass}, {"support", check.support}};
  j["first_counterexample"] = check.first_counterexample ? Json(*check.first_counterexample) : Json(nullptr);
  j["counterexample_index"] = check.counterexample_index ? Json(*check.counterexample_index) : Json(nullptr);
  return j;
}

Json to_json(const ScanFinding& finding) {
  Json claims = Json::array();
  for (const auto& c : finding.claims) claims.push_back(to_json(c));
  return {{"multiplier", finding.multiplier},
          {"A", finding.A},
          {"residues", finding.residues},
          {"support", finding.support},
          {"compressed", finding.compressed ? to_json(*finding.compressed) : Json(nullptr)},
          {"claims", claims}};
}

std::string render_text(const ProofReport& report) {
  std::ostringstream os;
  os << report.title << "\n";
  for (const auto& s : report.steps) {
    os << (s.pass ? "  [pass] " : "  [FAIL] ") << s.name << " (" << s.anchor << "): " << s.witness << "\n";
  }
  for (const auto& [k, v] : report.limits) os << "  " << k << " = " << v << "\n";
  os << (report.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace overpart

#include "overpart/prover.hpp"

#include "doctest.h"

#include "overpart/qgen.hpp"
#include "overpart/report.hpp"

using namespace overpart;

namespace {

const ProofStep* find_step(const ProofReport& r, const std::string& anchor_suffix) {
  for (const auto& s : r.steps) {
    if (s.anchor.ends_with(anchor_suffix)) return &s;
  }
  return nullptr;
}

bool same_findings(const std::vector<ScanFinding>& a, const std::vector<ScanFinding>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].multiplier != b[i].multiplier || a[i].A != b[i].A || a[i].residues != b[i].residues ||
        a[i].support != b[i].support || a[i].compressed != b[i].compressed || a[i].claims != b[i].claims) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("mod 11 proof") {
  const ProofReport r = prove_theorem_mod11();
  CHECK(r.pass);
  REQUIRE(find_step(r, "/decomposition"));
  CHECK(find_step(r, "/decomposition")->witness == "[1, 1, 0]");
  CHECK(r.limits.at("sturm_bound") == 289);
  CHECK(r.limits.at("checked_indices") == 36);
  CHECK(r.limits.at("progression_limit") == 35);
  REQUIRE(r.claim.has_value());
  CHECK(r.claim->multiplier == 11);
  CHECK(find_step(r, "/direct")->witness == "pbar(55) = 0 (mod 11)");
}

TEST_CASE("mod 13 proof") {
  const ProofReport r = prove_theorem_mod13();
  CHECK(r.pass);
  CHECK(find_step(r, "/decomposition")->witness == "[1, 4, 1, 0]");
  CHECK(find_step(r, "/cancel-phi")->witness == "[1, 4, 1]");
  CHECK(r.limits.at("sturm_bound") == 705);
  CHECK(r.limits.at("checked_indices") == 88);
  CHECK(r.limits.at("expansion_trunc") == 45120);
  CHECK(r.limits.at("stepwise_level") == 512);
  CHECK(find_step(r, "/direct")->witness == "pbar(5824) = 0 (mod 13)");
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  const ProofReport a = prove_theorem_mod11();
  const ProofReport b = prove_theorem_mod11();
  CHECK(a == b);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(report_from_json(to_json(a)) == a);
  CHECK(report_from_json(Json::parse(to_json(a).dump())) == a);

  const ProofReport id = verify_identity(17, 100);
  CHECK(report_from_json(to_json(id)) == id);
}

TEST_CASE("identities mod 17 and 23 at small truncation") {
  for (std::uint32_t m : {11u, 13u, 17u, 23u}) {
    const ProofReport r = verify_identity(m, 300);
    CHECK(r.pass);
    CHECK(find_step(r, "/derive")->witness.starts_with("[1, "));
  }
  CHECK(find_step(verify_identity(17, 50), "/derive")->witness == "[1, 13, 13, 0]");
  CHECK(find_step(verify_identity(23, 50), "/derive")->witness == "[1, 9, 5, 14, 17, 20]");
  CHECK(verify_identity(17, 0).pass);
  CHECK(verify_identity(19, 200).pass);  // derived combination only
  CHECK_THROWS_AS(verify_identity(15, 10), InvalidArgument);
}

TEST_CASE("eta-power congruence") {
  CHECK(verify_lemma1(2, 1, 500));
  CHECK(verify_lemma1(3, 2, 500));
  CHECK(verify_lemma1(5, 1, 500));
  CHECK(verify_lemma1(11, 1, 500));
  CHECK(verify_lemma1(13, 1, 500));
  CHECK(verify_lemma1(2, 5, 300));
  CHECK_THROWS_AS(verify_lemma1(4, 1, 10), InvalidArgument);
}

TEST_CASE("eta-power congruence is sharp in the exponent") {
  // Modulo 9 the exponent 3 is not enough: (q;q)^3 and (q^3;q^3) differ.
  const ResidueRing ring(9);
  const TruncSeries eta = pochhammer(1, 50, ring);
  CHECK_FALSE(ring_pow(eta, 3) == transform(eta, 3, 1).truncated(50));
}

TEST_CASE("claims") {
  CongruenceClaim c{17, 2057, 8, 3, {KroneckerCondition{11, -1}}};
  CHECK_NOTHROW(c.validate());
  CHECK(c.admits(19));
  CHECK_FALSE(c.admits(27));  // (27/11) = 1
  CHECK(c.describe() == "pbar(2057*(8n+3)) = 0 (mod 17) where (n/11) = -1");
  CHECK(CongruenceClaim{5, 1, 40, 35, {}}.describe() == "pbar(40n+35) = 0 (mod 5)");
  CHECK_THROWS_AS((CongruenceClaim{5, 1, 8, 8, {}}.validate()), InvalidArgument);
  CHECK_THROWS_AS((CongruenceClaim{5, 1, 8, 3, {KroneckerCondition{9, 1}}}.validate()), InvalidArgument);
  CHECK_THROWS_AS((CongruenceClaim{5, 1, 8, 3, {ResidueCondition{4, {5}}}}.validate()), InvalidArgument);

  CHECK(claim_from_json(to_json(c)) == c);
  const CongruenceClaim r{7, 16, 56, 11, {ResidueCondition{3, {0, 2}}}};
  CHECK(parse_claim(to_json(r).dump()) == r);
  CHECK(parse_claim(R"({"modulus": 5, "A": 40, "B": 35})") == CongruenceClaim{5, 1, 40, 35, {}});
  CHECK_THROWS_AS(parse_claim("{"), InvalidArgument);
  CHECK_THROWS_AS(parse_claim(R"({"A": 4})"), InvalidArgument);
}

TEST_CASE("direct claim checks") {
  const ClaimCheck a = check_claim_direct(CongruenceClaim{5, 1, 40, 35, {}}, 200);
  CHECK(a.pass);
  CHECK(a.support == 201);

  CHECK(check_claim_direct(CongruenceClaim{11, 11, 8, 5, {}}, 100).pass);

  const ClaimCheck vacuous = check_claim_direct(CongruenceClaim{1, 3, 7, 2, {}}, 10);
  CHECK(vacuous.pass);
  CHECK(vacuous.support == 11);

  const ClaimCheck bad = check_claim_direct(CongruenceClaim{5, 1, 40, 15, {}}, 200);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.first_counterexample.has_value());
  const TruncSeries pbar = overpartition_series(40 * 200 + 15, ResidueRing(5));
  CHECK(pbar[*bad.counterexample_index] != 0);
  for (std::uint64_t t = 0; t < *bad.first_counterexample; ++t) CHECK(pbar[40 * t + 15] == 0);

  CHECK_THROWS_AS(check_claim_direct(CongruenceClaim{5, 1000, 40, 35, {}}, 1'000'000), BudgetExceeded);
  CHECK_THROWS_AS(check_claim_direct(CongruenceClaim{5, 1, 40, 35, {}}, 10, overpartition_series(100, ResidueRing(7))),
                  RingMismatch);
  CHECK_THROWS_AS(check_claim_direct(CongruenceClaim{5, 1, 40, 35, {}}, 10, overpartition_series(100, ResidueRing(5))),
                  TruncationError);
}

TEST_CASE("residue compression") {
  const auto p7 = compress_residues({11, 43, 51}, 56);
  REQUIRE(p7.has_value());
  CHECK(p7->residue_mod8 == 3);
  CHECK(p7->sign == KroneckerCondition{7, 1});

  const auto p17 = compress_residues({19, 35, 43, 51, 83}, 88);
  REQUIRE(p17.has_value());
  CHECK(p17->residue_mod8 == 3);
  CHECK(p17->sign == KroneckerCondition{11, -1});

  const auto p23 = compress_residues({29, 53, 61, 69, 77, 101}, 104);
  REQUIRE(p23.has_value());
  CHECK(p23->residue_mod8 == 5);
  CHECK(p23->sign == KroneckerCondition{13, 1});

  CHECK_FALSE(compress_residues({35}, 40).has_value());
  CHECK_FALSE(compress_residues({11, 43}, 56).has_value());
  CHECK_FALSE(compress_residues({1}, 12).has_value());
}

TEST_CASE("scanner on small inputs") {
  ScanRequest req;
  req.modulus = 5;
  req.multipliers = {1};
  req.progressions = {40};
  req.index_budget = 100'000;
  const auto found = scan(req);
  REQUIRE(found.size() == 1);
  CHECK(found[0].residues == std::vector<std::uint64_t>{35});
  CHECK_FALSE(found[0].compressed.has_value());
  REQUIRE(found[0].claims.size() == 1);
  CHECK(found[0].claims[0] == CongruenceClaim{5, 1, 40, 35, {}});

  ScanRequest none = req;
  none.progressions = {7};
  CHECK(scan(none).empty());
}

TEST_CASE("scanner is thread-count independent and agrees with the checker") {
  ScanRequest req;
  req.modulus = 7;
  req.multipliers = {16, 1};
  req.progressions = {56, 40};
  req.index_budget = 300'000;
  req.threads = 1;
  const TruncSeries pbar = overpartition_series(scan_trunc(req), ResidueRing(7));
  const auto serial = scan(req, pbar);
  req.threads = 6;
  const auto parallel = scan(req, pbar);
  CHECK(same_findings(serial, parallel));

  bool saw_target = false;
  for (const auto& f : serial) {
    if (f.multiplier == 16 && f.A == 56) {
      saw_target = true;
      CHECK(f.residues == std::vector<std::uint64_t>{11, 43, 51});
      REQUIRE(f.compressed.has_value());
      CHECK(f.compressed->B == 3);
    }
    // Larger, independent range for every emitted claim.
    for (const auto& c : f.claims) {
      const std::uint64_t n_max = (1'000'000 / c.multiplier - c.B) / c.A;
      CHECK(check_claim_direct(c, n_max).pass);
    }
  }
  CHECK(saw_target);
}

TEST_CASE("scan budgets") {
  ScanRequest req;
  req.modulus = 17;
  req.multipliers = {2057};
  req.progressions = {88};
  CHECK(default_scan_budget(17) == 5'000'000);
  CHECK(default_scan_budget(7) == 1'000'000);
  CHECK(scan_trunc(req) == 5'000'000);
  req.n_max = 10;
  CHECK(scan_trunc(req) == 2057 * (88 * 10 + 87));
  req.index_budget = 30'000'000;
  req.n_max = UINT64_MAX;
  CHECK_THROWS_AS(scan_trunc(req), BudgetExceeded);
  req.progressions.clear();
  CHECK_THROWS_AS(scan_trunc(req), InvalidArgument);
}

#pragma once

// End-to-end congruence pipelines: the mod 11 and mod 13 proofs, the desk-scale
// identity checks mod 17 and 23, the eta-power congruence, direct checking of
// congruence claims against the generating function, and residue scanning.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "overpart/modseries.hpp"

namespace overpart {

/// n lies in one of the listed residue classes modulo `modulus`.
struct ResidueCondition {
  std::uint64_t modulus;
  std::vector<std::uint64_t> residues;
  friend bool operator==(const ResidueCondition&, const ResidueCondition&) = default;
};

/// (n / prime) equals `value`.
struct KroneckerCondition {
  std::int64_t prime;
  int value;
  friend bool operator==(const KroneckerCondition&, const KroneckerCondition&) = default;
};

using ClaimCondition = std::variant<ResidueCondition, KroneckerCondition>;

bool condition_holds(const ClaimCondition& c, std::uint64_t n);

/// pbar(multiplier * n) = 0 (mod modulus) for n = A t + B satisfying every
/// side condition.
struct CongruenceClaim {
  std::uint64_t modulus = 2;
  std::uint64_t multiplier = 1;
  std::uint64_t A = 1;
  std::uint64_t B = 0;
  std::vector<ClaimCondition> conditions;

  /// Throws InvalidArgument unless A >= 1, B < A and conditions are sane.
  void validate() const;
  bool admits(std::uint64_t n) const;
  std::string describe() const;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

struct ProofStep {
  std::string name;
  std::string anchor;
  std::string witness;
  bool pass = false;
  double seconds = 0.0;  // not part of the serialized report
};

struct ProofReport {
  std::string title;
  std::optional<CongruenceClaim> claim;
  std::vector<ProofStep> steps;
  bool pass = false;
  std::map<std::string, std::int64_t> limits;

  /// Timings are ignored.
  friend bool operator==(const ProofReport& a, const ProofReport& b);
};

ProofReport prove_theorem_mod11();
ProofReport prove_theorem_mod13();

/// sum pbar(m n)(-q)^n against its F^b phi^a combination, for a prime m >= 5,
/// through q^T. Published combinations are known for m = 11, 13, 17, 23.
ProofReport verify_identity(std::uint32_t m, std::size_t trunc);

/// The published combination of sum pbar(m n)(-q)^n mod m, ascending b.
std::optional<std::vector<Residue>> published_identity(std::uint32_t m);

/// (q;q)^{p^alpha} = (q^p;q^p)^{p^(alpha-1)} in Z/p^alpha Z through q^T.
bool verify_lemma1(std::uint64_t p, int alpha, std::size_t trunc);

struct ClaimCheck {
  bool pass = false;
  std::uint64_t support = 0;  // number of admitted n tested
  std::optional<std::uint64_t> first_counterexample;  // t with n = A t + B
  std::optional<std::uint64_t> counterexample_index;  // multiplier * n
  friend bool operator==(const ClaimCheck&, const ClaimCheck&) = default;
};

/// Largest coefficient index any direct check or scan will expand to.
inline constexpr std::size_t kMaxScanIndex = 20'000'000;

/// Tests t = 0..n_max against overpartition_series mod m.
ClaimCheck check_claim_direct(const CongruenceClaim& claim, std::uint64_t n_max);
/// Same, against a precomputed pbar series (modulus must match).
ClaimCheck check_claim_direct(const CongruenceClaim& claim, std::uint64_t n_max, const TruncSeries& pbar);

struct ScanRequest {
  std::uint32_t modulus = 2;
  std::vector<std::uint64_t> multipliers;
  std::vector<std::uint64_t> progressions;
  std::uint64_t n_max = UINT64_MAX;
  std::uint64_t min_support = 20;
  std::size_t index_budget = 0;  // 0: default_scan_budget(modulus)
  unsigned threads = 1;
};

struct ScanFinding {
  std::uint64_t multiplier;
  std::uint64_t A;
  std::vector<std::uint64_t> residues;
  std::vector<std::uint64_t> support;  // per residue
  /// n = r (mod 8) and (n/p) = eps, when that describes the residues exactly.
  std::optional<CongruenceClaim> compressed;
  std::vector<CongruenceClaim> claims;
};

std::size_t default_scan_budget(std::uint32_t modulus);
/// Coefficient index the scan needs the pbar series through.
std::size_t scan_trunc(const ScanRequest& request);

std::vector<ScanFinding> scan(const ScanRequest& request);
std::vector<ScanFinding> scan(const ScanRequest& request, const TruncSeries& pbar);

struct ResiduePattern {
  std::uint64_t residue_mod8;
  KroneckerCondition sign;
};

/// Describes `residues` modulo A as {n = r (mod 8), (n/p) = eps} for a prime
/// p dividing A, if such a description is exact.
std::optional<ResiduePattern> compress_residues(const std::vector<std::uint64_t>& residues, std::uint64_t A);

}  // namespace overpart

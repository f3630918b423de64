#pragma once

// SL2(Z)-indices of Gamma0(N) / Gamma1(N) and Sturm bounds, including the
// squaring convention for half-integral weight.

#include <cstdint>
#include <optional>

#include "overpart/halfint.hpp"

namespace overpart {

/// [SL2(Z) : Gamma]. Gamma0: N prod (1 + 1/p). Gamma1: N^2 prod (1 - 1/p^2).
std::uint64_t index_sl2(Group group, std::uint64_t N);

struct ProgressionLimit {
  std::uint64_t A;
  std::uint64_t B;
  std::uint64_t max_n;
};

struct SturmBudget {
  SpaceLabel label;
  /// Integral weight that enters the bound: k2 for odd k2 (the squared
  /// form), k2/2 otherwise.
  int effective_weight;
  std::uint64_t index;
  /// Largest exponent to check, inclusive: floor(weight * index / 12) + 1.
  std::uint64_t bound;
  std::optional<ProgressionLimit> per_progression;
};

SturmBudget sturm_bound(const SpaceLabel& label);

/// Verification limit on n for the progression A n + B.
///
/// Gamma0 labels: the exact maximum n with A n + B <= bound.
/// Gamma1 labels: ceil(bound / A), the same for every residue B, with the
/// bound measured on the form in q^(1/A).
std::uint64_t progression_limit(const SturmBudget& budget, std::uint64_t A, std::uint64_t B);

/// The budget with per_progression filled in.
SturmBudget with_progression(SturmBudget budget, std::uint64_t A, std::uint64_t B);

}  // namespace overpart

#include "overpart/sturm.hpp"

#include <string>

namespace overpart {

std::uint64_t index_sl2(Group group, std::uint64_t N) {
  if (N == 0) throw InvalidArgument("index_sl2: level must be positive");
  // Exact integer form: N prod (p + 1)/p, N^2 prod (p^2 - 1)/p^2.
  unsigned __int128 index = group == Group::Gamma0 ? N : static_cast<unsigned __int128>(N) * N;
  std::uint64_t rest = N;
  auto apply = [&](std::uint64_t p) {
    if (group == Group::Gamma0) {
      index = index / p * (p + 1);
    } else {
      index = index / (p * p) * (p * p - 1);
    }
  };
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    apply(p);
  }
  if (rest > 1) apply(rest);
  if (index > UINT64_MAX) throw BudgetExceeded("index_sl2: index overflows 64 bits");
  return static_cast<std::uint64_t>(index);
}

SturmBudget sturm_bound(const SpaceLabel& label) {
  const int k2 = label.twice_weight();
  const int weight = k2 % 2 != 0 ? k2 : k2 / 2;
  const std::uint64_t index = index_sl2(label.group(), label.level());
  const unsigned __int128 product = static_cast<unsigned __int128>(index) * static_cast<unsigned>(weight);
  const unsigned __int128 bound = product / 12 + 1;
  if (bound > UINT64_MAX) throw BudgetExceeded("sturm_bound: bound overflows 64 bits");
  return SturmBudget{label, weight, index, static_cast<std::uint64_t>(bound), std::nullopt};
}

std::uint64_t progression_limit(const SturmBudget& budget, std::uint64_t A, std::uint64_t B) {
  if (A == 0) throw InvalidArgument("progression_limit: A must be positive");
  if (B > budget.bound) {
    throw InvalidArgument("progression_limit: offset " + std::to_string(B) + " exceeds the bound " +
                          std::to_string(budget.bound));
  }
  if (budget.label.group() == Group::Gamma0) return (budget.bound - B) / A;
  return (budget.bound + A - 1) / A;
}

SturmBudget with_progression(SturmBudget budget, std::uint64_t A, std::uint64_t B) {
  budget.per_progression = ProgressionLimit{A, B, progression_limit(budget, A, B)};
  return budget;
}

}  // namespace overpart

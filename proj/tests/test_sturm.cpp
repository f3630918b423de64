#include "overpart/sturm.hpp"

#include "doctest.h"

#include <numeric>

using namespace overpart;

namespace {

// Bottom rows (c, d) mod N with gcd(c, d, N) = 1 index the cosets of Gamma1(N);
// grouping them under the unit scalars gives the cosets of Gamma0(N).
std::uint64_t primitive_rows(std::uint64_t N) {
  std::uint64_t count = 0;
  for (std::uint64_t c = 0; c < N; ++c) {
    for (std::uint64_t d = 0; d < N; ++d) count += std::gcd(std::gcd(c, d), N) == 1;
  }
  return count;
}

std::uint64_t units(std::uint64_t N) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < N; ++a) count += std::gcd(a, N) == 1;
  return count;
}

}  // namespace

TEST_CASE("indices against coset counting") {
  for (std::uint64_t N = 1; N <= 30; ++N) {
    CHECK(index_sl2(Group::Gamma1, N) == primitive_rows(N));
    CHECK(index_sl2(Group::Gamma0, N) == primitive_rows(N) / units(N));
  }
  CHECK(index_sl2(Group::Gamma0, 256) == 384);
  CHECK(index_sl2(Group::Gamma0, 512) == 768);
  CHECK(index_sl2(Group::Gamma1, 340736) == 86'356'131'840ull);
  CHECK(index_sl2(Group::Gamma1, 562432) == 235'843'485'696ull);
  CHECK_THROWS_AS(index_sl2(Group::Gamma0, 0), InvalidArgument);
}

TEST_CASE("Sturm bounds of the two proofs") {
  const auto b11 = sturm_bound(SpaceLabel::gamma0(9, 256, DirichletChar::trivial(1)));
  CHECK(b11.effective_weight == 9);
  CHECK(b11.bound == 289);
  const auto b13 = sturm_bound(SpaceLabel::gamma0(11, 512, DirichletChar::kronecker_character(8, 8)));
  CHECK(b13.effective_weight == 11);
  CHECK(b13.bound == 705);
  CHECK(sturm_bound(gamma0_4_label(10)).effective_weight == 5);
  CHECK(sturm_bound(gamma0_4_label(10)).bound == 3);
}

TEST_CASE("progression limits") {
  const auto b11 = sturm_bound(SpaceLabel::gamma0(9, 256, DirichletChar::trivial(1)));
  CHECK(progression_limit(b11, 8, 5) == 35);
  const auto b13 = sturm_bound(SpaceLabel::gamma0(11, 512, DirichletChar::trivial(1)));
  CHECK(progression_limit(b13, 8, 7) == 87);

  const auto b17 = sturm_bound(SpaceLabel::gamma1(15, 340736));
  for (std::uint64_t B : {19ull, 35ull, 43ull, 51ull, 83ull}) CHECK(progression_limit(b17, 88, B) == 1'226'649'601ull);
  const auto b23 = sturm_bound(SpaceLabel::gamma1(21, 562432));
  for (std::uint64_t B : {29ull, 53ull, 61ull, 69ull, 77ull, 101ull}) {
    CHECK(progression_limit(b23, 104, B) == 3'968'520'193ull);
  }

  const auto with = with_progression(b17, 88, 19);
  REQUIRE(with.per_progression.has_value());
  CHECK(with.per_progression->max_n == 1'226'649'601ull);
  CHECK_THROWS_AS(progression_limit(b11, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(progression_limit(b11, 1000, 290), InvalidArgument);
}

TEST_CASE("Gamma0 limit is the largest n with An+B inside the bound") {
  for (std::uint64_t level : {4ull, 16ull, 64ull, 256ull}) {
    for (int k2 : {3, 9, 12}) {
      const auto b = sturm_bound(SpaceLabel::gamma0(k2, level, DirichletChar::trivial(1)));
      for (std::uint64_t A : {1ull, 3ull, 8ull}) {
        for (std::uint64_t B = 0; B < A && B <= b.bound; ++B) {
          const auto n = progression_limit(b, A, B);
          CHECK(A * n + B <= b.bound);
          CHECK(A * (n + 1) + B > b.bound);
        }
      }
    }
  }
}

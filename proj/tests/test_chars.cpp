#include "overpart/chars.hpp"

#include "doctest.h"

#include <numeric>
#include <set>

using namespace overpart;

namespace {

// Legendre symbol from the set of nonzero squares modulo an odd prime.
int legendre_by_squares(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

std::uint64_t phi_by_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST_CASE("kronecker symbol agrees with Legendre symbols at odd primes") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 97}) {
    for (std::int64_t a = -60; a <= 60; ++a) CHECK(kronecker(a, p) == legendre_by_squares(a, p));
  }
}

TEST_CASE("kronecker symbol is multiplicative in the denominator") {
  for (std::int64_t a = -30; a <= 30; ++a) {
    for (std::int64_t m = 1; m <= 40; ++m) {
      for (std::int64_t n = 1; n <= 40; ++n) CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
  }
}

TEST_CASE("kronecker symbol special denominators") {
  // (a/2) is 0 for even a, 1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
  CHECK(kronecker(1, 2) == 1);
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(3, 2) == -1);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(6, 2) == 0);
  CHECK(kronecker(5, 0) == 0);
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(-3, -1) == -1);
  CHECK(kronecker(3, -1) == 1);
  CHECK(kronecker(-1, 7) == -1);
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(19, 11) == -1);
  CHECK(kronecker(29, 13) == 1);
}

TEST_CASE("euler phi") {
  for (std::uint64_t n = 1; n <= 300; ++n) CHECK(euler_phi(n) == phi_by_count(n));
}

TEST_CASE("character groups have phi(A) distinct members") {
  for (std::uint64_t A : {1ull, 2ull, 3ull, 4ull, 8ull, 12ull, 15ull, 16ull, 40ull, 56ull, 88ull, 104ull}) {
    const auto group = char_group(A);
    REQUIRE(group.size() == euler_phi(A));
    CHECK(group.front().is_trivial());
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) CHECK_FALSE(group[i] == group[j]);
    }
    const bool all_real = std::all_of(group.begin(), group.end(), [](const auto& c) { return c.is_real(); });
    CHECK(all_real == unit_group_all_real(A));
  }
  CHECK(unit_group_all_real(24));
  CHECK_FALSE(unit_group_all_real(88));
}

TEST_CASE("orthogonality picks out one residue class") {
  for (std::uint64_t A : {5ull, 8ull, 21ull, 40ull, 88ull}) {
    for (std::uint64_t B = 0; B < A; ++B) {
      if (std::gcd(B, A) != 1) continue;
      for (std::int64_t n = -3; n < static_cast<std::int64_t>(2 * A); ++n) {
        const bool hit = ((n % static_cast<std::int64_t>(A)) + static_cast<std::int64_t>(A)) %
                             static_cast<std::int64_t>(A) ==
                         static_cast<std::int64_t>(B);
        CHECK(orthogonality_sum(A, B, n) == Rational{hit ? 1 : 0, 1});
      }
    }
  }
  CHECK_THROWS_AS(orthogonality_sum(8, 2, 2), InvalidArgument);
}

TEST_CASE("kronecker characters, conductors and primitivity") {
  const auto chi8 = DirichletChar::kronecker_character(8, 8);
  CHECK(chi8.is_real());
  CHECK(chi8.conductor() == 8);
  CHECK(chi8.real_value(3) == -1);
  CHECK(chi8.real_value(7) == 1);
  CHECK(chi8.real_value(2) == 0);

  const auto chi_m4 = DirichletChar::kronecker_character(-4, 16);
  CHECK(chi_m4.conductor() == 4);
  CHECK(chi_m4.primitive().modulus() == 4);
  CHECK(same_primitive(chi_m4, DirichletChar::kronecker_character(-4, 4)));
  CHECK(chi_m4.primitive().kronecker_discriminant() == -4);

  const auto square = chi8 * chi8;
  CHECK(square.is_trivial());
  CHECK(DirichletChar::trivial(12).conductor() == 1);
  CHECK(DirichletChar::kronecker_character(5, 20).conductor() == 5);
  CHECK(chi8.lift(24).real_value(5) == -1);
  CHECK(chi8.lift(24).real_value(3) == 0);
}

TEST_CASE("complex characters") {
  const auto group = char_group(5);
  std::set<std::uint32_t> orders;
  for (const auto& c : group) orders.insert(c.order());
  CHECK(orders == std::set<std::uint32_t>{1, 2, 4});
  for (const auto& c : group) {
    CHECK((c * c.conjugate()).is_trivial());
    CHECK(c.pow(static_cast<std::int64_t>(c.order())).is_trivial());
    if (c.order() == 4) CHECK_THROWS_AS(c.real_value(2), InvalidArgument);
  }
}

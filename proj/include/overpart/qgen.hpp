#pragma once

// Standard q-expansions: q-Pochhammer products, eta quotients, the theta
// function phi(q), F(q) = eta(4z)^8 / eta(2z)^4, theta powers and the
// overpartition generating function.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "overpart/modseries.hpp"

namespace overpart {

/// (q^delta; q^delta)_inf through q^T, from the pentagonal-number expansion.
TruncSeries pochhammer(std::uint64_t delta, std::size_t trunc, ResidueRing ring);

struct EtaFactor {
  std::uint64_t delta;
  std::int64_t exponent;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// prod eta(delta z)^{r_delta}, with deltas distinct and sorted.
class EtaQuotient {
 public:
  EtaQuotient(std::initializer_list<EtaFactor> factors);
  explicit EtaQuotient(std::vector<EtaFactor> factors);

  /// Parses "2^5,1^-2,4^-2".
  static EtaQuotient parse(const std::string& text);

  const std::vector<EtaFactor>& factors() const { return factors_; }
  /// sum of delta * r_delta: 24 times the leading q-power.
  std::int64_t prefactor24() const;

 private:
  std::vector<EtaFactor> factors_;
};

struct QExpansion {
  std::int64_t prefactor24;
  TruncSeries series;

  /// Absorbs the q^{prefactor24/24} shift. Throws InvalidArgument when the
  /// prefactor is not a non-negative multiple of 24.
  TruncSeries to_series() const;
};

QExpansion eta_quotient(const EtaQuotient& q, std::size_t trunc, ResidueRing ring);

/// eta_quotient(...).to_series(), truncated at exactly q^T.
TruncSeries eta_series(const EtaQuotient& q, std::size_t trunc, ResidueRing ring);

/// phi(q) = sum over all integers n of q^{n^2}.
TruncSeries theta_phi(std::size_t trunc, ResidueRing ring);

/// F(q) = eta(4z)^8 / eta(2z)^4 = q + 4q^3 + 6q^5 + ...
TruncSeries theta_F(std::size_t trunc, ResidueRing ring);

const EtaQuotient& phi_eta_form();
const EtaQuotient& phi_minus_eta_form();
const EtaQuotient& F_eta_form();

/// phi(q)^m = sum r_m(n) q^n.
TruncSeries r_m_series(std::uint64_t m_exp, std::size_t trunc, ResidueRing ring);

/// Number of (x_1..x_m) in Z^m with sum x_i^2 = n, by direct enumeration.
/// Budget: m_exp <= 12, n <= 50.
std::int64_t r_m_bruteforce(std::int64_t n, int m_exp);

/// Exact r_m(0..T) from two word-size prime moduli and CRT. Valid while the
/// true values stay below ~4.6e18.
std::vector<std::int64_t> r_m_exact(std::uint64_t m_exp, std::size_t trunc);

/// sum pbar(n) q^n = 1 / phi(-q).
TruncSeries overpartition_series(std::size_t trunc, ResidueRing ring);

}  // namespace overpart

#pragma once

// Modular forms on Gamma0(4) as q-expansions: the monomial basis F^b phi^a of
// C[phi, F], triangular decomposition, and the Hecke / U / V / twist
// operators with their level and character bookkeeping.
//
// Labels are metadata carried alongside a series. Nothing here checks that a
// series actually transforms like a modular form.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "overpart/chars.hpp"
#include "overpart/modseries.hpp"

namespace overpart {

enum class Group { Gamma0, Gamma1 };

std::string to_string(Group g);

/// Weight k2/2 on Gamma0(level) with a character, or on Gamma1(level).
class SpaceLabel {
 public:
  static SpaceLabel gamma0(int k2, std::uint64_t level, DirichletChar character);
  static SpaceLabel gamma1(int k2, std::uint64_t level);

  int twice_weight() const { return k2_; }
  bool half_integral() const { return k2_ % 2 != 0; }
  std::uint64_t level() const { return level_; }
  Group group() const { return group_; }
  /// Present exactly for Gamma0 labels. Its modulus divides the level.
  const std::optional<DirichletChar>& character() const { return character_; }

  /// Character value at n viewed modulo the level (0 off units, trivial
  /// character for Gamma1 labels is not defined and throws).
  int character_value(std::int64_t n) const;

  /// Same space viewed at level * factor.
  SpaceLabel inflated(std::uint64_t factor) const;
  SpaceLabel as_gamma1() const { return gamma1(k2_, level_); }

  std::string to_string() const;

  /// Weight, level and group agree, and the characters agree on units.
  friend bool operator==(const SpaceLabel& a, const SpaceLabel& b);

 private:
  SpaceLabel(int k2, std::uint64_t level, Group group, std::optional<DirichletChar> character);

  int k2_;
  std::uint64_t level_;
  Group group_;
  std::optional<DirichletChar> character_;
};

/// psi_k: trivial for k2 = 0 (mod 4) or odd k2, chi_{-4} for k2 = 2 (mod 4).
DirichletChar psi_k(int k2);

/// M_{k2/2}(Gamma0(4), psi_k), the graded piece spanned by F^b phi^a.
SpaceLabel gamma0_4_label(int k2);

/// chi_d(n) = (4d/n).
DirichletChar chi_d(std::uint64_t d);

struct Monomial {
  int a;  // power of phi
  int b;  // power of F
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialBasis {
  int k2;
  std::vector<Monomial> monomials;  // ascending b
};

MonomialBasis basis_monomials(int k2);

/// F^b phi^a through q^T; the expansion starts q^b + ...
TruncSeries expand_monomial(int a, int b, std::size_t trunc, ResidueRing ring);

/// Caches phi and powers of F so repeated monomial expansions at one
/// truncation share work.
class MonomialExpander {
 public:
  MonomialExpander(std::size_t trunc, ResidueRing ring);
  TruncSeries expand(const Monomial& m);
  std::size_t trunc() const { return trunc_; }
  const ResidueRing& ring() const { return ring_; }

 private:
  std::size_t trunc_;
  ResidueRing ring_;
  TruncSeries phi_;
  std::map<int, TruncSeries> f_powers_;
};

struct Decomposition {
  int k2;
  ResidueRing ring;
  std::vector<Residue> coeffs;  // indexed by b

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Smallest truncation decompose() accepts for weight k2/2: the Sturm bound
/// of M_{k2/2}(Gamma0(4)).
std::size_t decomposition_min_trunc(int k2);

/// Forward substitution down the triangular basis. Throws NotInSpan with the
/// first exponent where the residual survives.
Decomposition decompose(const TruncSeries& f, int k2);

/// sum coeffs[b] F^b phi^{k2-4b} through q^T.
TruncSeries recombine(const Decomposition& d, std::size_t trunc);
TruncSeries recombine(const Decomposition& d, MonomialExpander& expander);

/// f | T_{k,N}(ell) for integral weight k = k2even/2. The output is exact
/// through out_trunc (default floor(f.trunc / ell)).
TruncSeries hecke_T(const TruncSeries& f, int k2even, std::uint64_t ell, const DirichletChar& chi,
                    std::optional<std::size_t> out_trunc = std::nullopt);

struct LabeledSeries {
  TruncSeries series;
  SpaceLabel label;
};

/// f | U(d). With level = 4N, requires d | N.
LabeledSeries apply_U(const TruncSeries& f, const SpaceLabel& label, std::uint64_t d);

/// f | V(d); level multiplied by d.
LabeledSeries apply_V(const TruncSeries& f, const SpaceLabel& label, std::uint64_t d);

/// f (x) psi for a real character psi; level multiplied by conductor^2.
LabeledSeries apply_twist(const TruncSeries& f, const SpaceLabel& label, const DirichletChar& psi);

struct SieveResult {
  TruncSeries series;
  /// Level 4NdA^2 from the character-averaging construction.
  SpaceLabel label;
  /// Level obtained by applying U(p) one prime at a time, inflating only when
  /// p does not already divide N, before the twists modulo A.
  SpaceLabel stepwise_label;
  /// Labels after each U(p) step of the stepwise chain.
  std::vector<SpaceLabel> chain;
};

/// g = sum a(d(An+B)) q^{An+B}. Requires gcd(A, B) = 1.
SieveResult sieve_progression(const TruncSeries& f, const SpaceLabel& label, std::uint64_t d, std::uint64_t A,
                              std::uint64_t B);

}  // namespace overpart

#pragma once

// Kronecker symbols and Dirichlet characters for small moduli.
//
// Character values are kept exactly: a value on a unit is an index k standing
// for exp(2 pi i k / order()).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "overpart/errors.hpp"

namespace overpart {

/// The Kronecker symbol (a/n), defined for all integers a and n.
int kronecker(std::int64_t a, std::int64_t n);

std::uint64_t euler_phi(std::uint64_t n);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

class DirichletChar {
 public:
  /// values[n] is -1 on non-units, otherwise an index modulo `order`.
  DirichletChar(std::uint64_t modulus, std::uint32_t order, std::vector<std::int32_t> values);

  static DirichletChar trivial(std::uint64_t modulus);
  /// n -> (D/n) on units modulo `modulus`. The modulus must be a multiple of
  /// the period of (D/.) so the result is a genuine character.
  static DirichletChar kronecker_character(std::int64_t D, std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  /// Order of the character as a group element.
  std::uint32_t order() const { return order_; }

  /// Root-of-unity index at n, or nullopt when gcd(n, modulus) > 1.
  std::optional<std::uint32_t> index_at(std::int64_t n) const;
  /// Value at n for a character taking values in {0, +1, -1} at n.
  /// Throws InvalidArgument when the value is a non-real root of unity.
  int real_value(std::int64_t n) const;

  bool is_real() const { return order_ <= 2; }
  bool is_trivial() const { return order_ == 1; }

  std::uint64_t conductor() const;
  /// The primitive character inducing this one.
  DirichletChar primitive() const;
  /// The same character viewed modulo a multiple of the modulus.
  DirichletChar lift(std::uint64_t new_modulus) const;

  DirichletChar operator*(const DirichletChar& other) const;
  DirichletChar pow(std::int64_t k) const;
  DirichletChar conjugate() const { return pow(-1); }

  /// Kronecker discriminant D with chi = (D/.) on units, for real characters.
  std::optional<std::int64_t> kronecker_discriminant() const;
  std::string describe() const;

  /// Table equality (same modulus, same values).
  friend bool operator==(const DirichletChar&, const DirichletChar&) = default;

 private:
  std::uint64_t modulus_;
  std::uint32_t order_;
  std::vector<std::int32_t> values_;
};

/// Equality of the underlying primitive characters.
bool same_primitive(const DirichletChar& a, const DirichletChar& b);

/// All phi(A) characters modulo A, trivial character first. Budget A <= 10^4.
std::vector<DirichletChar> char_group(std::uint64_t A);

/// True when every character modulo A is real, i.e. u^2 = 1 for all units.
bool unit_group_all_real(std::uint64_t A);

/// (1/phi(A)) sum over psi mod A of conj(psi(B)) psi(n), evaluated exactly.
Rational orthogonality_sum(std::uint64_t A, std::uint64_t B, std::int64_t n);

}  // namespace overpart

#pragma once

// Truncated formal power series over Z/mZ.
//
// Every series knows its truncation T: coefficients c[0..T] are known and
// nothing beyond q^T is. Reading past T throws instead of returning zero.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "overpart/errors.hpp"

namespace overpart {

using Residue = std::uint32_t;

class ResidueRing {
 public:
  explicit ResidueRing(std::uint64_t modulus);

  std::uint32_t modulus() const { return modulus_; }

  Residue reduce(std::int64_t x) const;
  Residue reduce_unsigned(std::uint64_t x) const { return static_cast<Residue>(x % modulus_); }
  Residue add(Residue a, Residue b) const;
  Residue sub(Residue a, Residue b) const;
  Residue neg(Residue a) const { return a == 0 ? 0 : modulus_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(std::uint64_t{a} * b % modulus_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  bool is_unit(Residue a) const;
  /// Throws NotInvertible for non-units.
  Residue inverse(Residue a) const;

  friend bool operator==(const ResidueRing&, const ResidueRing&) = default;

 private:
  std::uint32_t modulus_;
};

class TruncSeries {
 public:
  /// Largest truncation any operation will produce.
  static constexpr std::size_t kMaxTrunc = std::size_t{1} << 28;
  /// Support hints are kept when at most this fraction of coefficients is nonzero.
  static constexpr double kDefaultSparseDensity = 1.0 / 8.0;

  /// Coefficients are reduced into [0, m). The vector must be non-empty.
  TruncSeries(ResidueRing ring, std::vector<Residue> coeffs,
              double sparse_density = kDefaultSparseDensity);

  static TruncSeries zero(ResidueRing ring, std::size_t trunc);
  static TruncSeries one(ResidueRing ring, std::size_t trunc);
  static TruncSeries from_integers(ResidueRing ring, std::span<const std::int64_t> values);

  const ResidueRing& ring() const { return ring_; }
  std::uint32_t modulus() const { return ring_.modulus(); }
  std::size_t trunc() const { return coeffs_.size() - 1; }
  std::span<const Residue> coeffs() const { return coeffs_; }
  const std::optional<std::vector<std::size_t>>& support_hint() const { return support_; }

  /// Throws TruncationError when n > trunc().
  Residue coefficient_at(std::size_t n) const;
  Residue operator[](std::size_t n) const { return coefficient_at(n); }

  /// Same series known only through q^t; t must not exceed trunc().
  TruncSeries truncated(std::size_t t) const;
  bool is_zero() const;

  /// Indices of nonzero coefficients (uses the hint when present).
  std::vector<std::size_t> nonzero_indices() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  ResidueRing ring_;
  std::vector<Residue> coeffs_;
  std::optional<std::vector<std::size_t>> support_;
};

TruncSeries series_add(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_sub(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_scale(const TruncSeries& f, Residue c);

/// Product through min(f.trunc, g.trunc). Iterates over the sparse side when
/// either operand carries a support hint.
TruncSeries ring_mul(const TruncSeries& f, const TruncSeries& g);

TruncSeries ring_pow(const TruncSeries& f, std::uint64_t e);

/// g / f through min(f.trunc, g.trunc); f[0] must be a unit. Cost is
/// O(T * nnz(f)).
TruncSeries ring_divide(const TruncSeries& g, const TruncSeries& f);

TruncSeries ring_invert(const TruncSeries& f);

/// q -> sign * q^d. Result truncation is f.trunc * d.
TruncSeries transform(const TruncSeries& f, std::uint64_t d, int sign);

/// Keeps coefficients with n = B (mod A), zeroes the rest.
TruncSeries extract_progression(const TruncSeries& f, std::uint64_t A, std::uint64_t B);

/// g[n] = f[A n + B], truncated at floor((T - B) / A).
TruncSeries compact_progression(const TruncSeries& f, std::uint64_t A, std::uint64_t B);

inline Residue coefficient_at(const TruncSeries& f, std::size_t n) { return f.coefficient_at(n); }

// Coefficient cache file ("QSER" format, little-endian, version 1).
std::vector<std::uint8_t> encode_series(const TruncSeries& f);
TruncSeries decode_series(std::span<const std::uint8_t> bytes);
void write_series_file(const std::filesystem::path& path, const TruncSeries& f);
TruncSeries read_series_file(const std::filesystem::path& path);

std::string to_string(const TruncSeries& f, std::size_t max_terms = 12);

}  // namespace overpart

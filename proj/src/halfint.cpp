#include "overpart/halfint.hpp"

#include <numeric>

#include "overpart/qgen.hpp"
#include "overpart/sturm.hpp"

namespace overpart {

std::string to_string(Group g) { return g == Group::Gamma0 ? "Gamma0" : "Gamma1"; }

// ---------------------------------------------------------------------------
// SpaceLabel

SpaceLabel::SpaceLabel(int k2, std::uint64_t level, Group group, std::optional<DirichletChar> character)
    : k2_(k2), level_(level), group_(group), character_(std::move(character)) {
  if (k2_ < 1) throw InvalidArgument("space label: twice-weight must be positive");
  if (level_ == 0 || level_ % 4 != 0) {
    throw InvalidArgument("space label: level " + std::to_string(level_) + " is not a positive multiple of 4");
  }
  if (character_) {
    character_ = character_->primitive();
    if (level_ % character_->modulus() != 0) {
      throw InvalidArgument("space label: character conductor " + std::to_string(character_->modulus()) +
                            " does not divide level " + std::to_string(level_));
    }
  }
}

SpaceLabel SpaceLabel::gamma0(int k2, std::uint64_t level, DirichletChar character) {
  return SpaceLabel(k2, level, Group::Gamma0, std::move(character));
}

SpaceLabel SpaceLabel::gamma1(int k2, std::uint64_t level) { return SpaceLabel(k2, level, Group::Gamma1, std::nullopt); }

int SpaceLabel::character_value(std::int64_t n) const {
  if (!character_) throw InvalidArgument("Gamma1 labels carry no character");
  const auto l = static_cast<std::int64_t>(level_);
  if (std::gcd(((n % l) + l) % l, l) != 1) return 0;
  return character_->real_value(n);
}

SpaceLabel SpaceLabel::inflated(std::uint64_t factor) const {
  if (factor == 0) throw InvalidArgument("space label: inflation factor must be positive");
  return SpaceLabel(k2_, level_ * factor, group_, character_);
}

std::string SpaceLabel::to_string() const {
  std::string weight = k2_ % 2 == 0 ? std::to_string(k2_ / 2) : std::to_string(k2_) + "/2";
  std::string out = "M_" + weight + "(" + overpart::to_string(group_) + "(" + std::to_string(level_) + ")";
  if (character_) out += ", " + character_->describe();
  return out + ")";
}

bool operator==(const SpaceLabel& a, const SpaceLabel& b) {
  return a.k2_ == b.k2_ && a.level_ == b.level_ && a.group_ == b.group_ && a.character_ == b.character_;
}

DirichletChar psi_k(int k2) {
  if (k2 % 4 == 2) return DirichletChar::kronecker_character(-4, 4);
  return DirichletChar::trivial(1);
}

SpaceLabel gamma0_4_label(int k2) { return SpaceLabel::gamma0(k2, 4, psi_k(k2)); }

DirichletChar chi_d(std::uint64_t d) {
  if (d == 0) throw InvalidArgument("chi_d: d must be positive");
  return DirichletChar::kronecker_character(static_cast<std::int64_t>(4 * d), 4 * d);
}

// ---------------------------------------------------------------------------
// Basis and decomposition

MonomialBasis basis_monomials(int k2) {
  if (k2 < 1) throw InvalidArgument("basis_monomials: twice-weight must be positive");
  MonomialBasis basis{k2, {}};
  for (int b = 0; 4 * b <= k2; ++b) basis.monomials.push_back(Monomial{k2 - 4 * b, b});
  return basis;
}

MonomialExpander::MonomialExpander(std::size_t trunc, ResidueRing ring)
    : trunc_(trunc), ring_(ring), phi_(theta_phi(trunc, ring)) {}

TruncSeries MonomialExpander::expand(const Monomial& m) {
  if (m.a < 0 || m.b < 0) throw InvalidArgument("monomial exponents must be non-negative");
  if (f_powers_.empty()) {
    f_powers_.emplace(0, TruncSeries::one(ring_, trunc_));
    f_powers_.emplace(1, theta_F(trunc_, ring_));
  }
  for (int b = static_cast<int>(f_powers_.size()); b <= m.b; ++b) {
    f_powers_.emplace(b, ring_mul(f_powers_.at(b - 1), f_powers_.at(1)));
  }
  TruncSeries out = f_powers_.at(m.b);
  for (int i = 0; i < m.a; ++i) out = ring_mul(out, phi_);
  return out;
}

TruncSeries expand_monomial(int a, int b, std::size_t trunc, ResidueRing ring) {
  MonomialExpander expander(trunc, ring);
  return expander.expand(Monomial{a, b});
}

std::size_t decomposition_min_trunc(int k2) {
  return static_cast<std::size_t>(sturm_bound(gamma0_4_label(k2)).bound);
}

Decomposition decompose(const TruncSeries& f, int k2) {
  const MonomialBasis basis = basis_monomials(k2);
  const std::size_t need = decomposition_min_trunc(k2);
  if (f.trunc() < need) {
    throw TruncationError("decompose: weight " + std::to_string(k2) + "/2 needs truncation >= " +
                          std::to_string(need) + ", got " + std::to_string(f.trunc()));
  }
  MonomialExpander expander(f.trunc(), f.ring());
  Decomposition out{k2, f.ring(), {}};
  TruncSeries residual = f;
  for (const auto& m : basis.monomials) {
    const Residue c = residual.coefficient_at(static_cast<std::size_t>(m.b));
    out.coeffs.push_back(c);
    if (c != 0) residual = series_sub(residual, series_scale(expander.expand(m), c));
  }
  for (std::size_t n = 0; n <= residual.trunc(); ++n) {
    if (residual.coeffs()[n] != 0) {
      throw NotInSpan(n, "series is not in the span of F^b phi^a for weight " + std::to_string(k2) +
                             "/2: residual survives at q^" + std::to_string(n));
    }
  }
  return out;
}

TruncSeries recombine(const Decomposition& d, MonomialExpander& expander) {
  if (expander.ring() != d.ring) throw RingMismatch("recombine: expander ring differs from decomposition ring");
  const MonomialBasis basis = basis_monomials(d.k2);
  if (d.coeffs.size() != basis.monomials.size()) {
    throw InvalidArgument("recombine: coefficient count does not match the weight " + std::to_string(d.k2) + "/2 basis");
  }
  TruncSeries out = TruncSeries::zero(d.ring, expander.trunc());
  for (std::size_t b = 0; b < basis.monomials.size(); ++b) {
    if (d.coeffs[b] == 0) continue;
    out = series_add(out, series_scale(expander.expand(basis.monomials[b]), d.coeffs[b]));
  }
  return out;
}

TruncSeries recombine(const Decomposition& d, std::size_t trunc) {
  MonomialExpander expander(trunc, d.ring);
  return recombine(d, expander);
}

// ---------------------------------------------------------------------------
// Operators

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors_with_multiplicity(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Character after U(d) or V(d): the theta multiplier chi_d enters only in
// half-integral weight.
std::optional<DirichletChar> shifted_character(const SpaceLabel& label, std::uint64_t d) {
  if (!label.character()) return std::nullopt;
  if (!label.half_integral()) return label.character();
  return chi_d(d) * *label.character();
}

SpaceLabel with(const SpaceLabel& label, std::uint64_t level, std::optional<DirichletChar> chi) {
  if (label.group() == Group::Gamma1 || !chi) return SpaceLabel::gamma1(label.twice_weight(), level);
  return SpaceLabel::gamma0(label.twice_weight(), level, std::move(*chi));
}

SpaceLabel u_label(const SpaceLabel& label, std::uint64_t d) {
  const std::uint64_t N = label.level() / 4;
  if (N % d != 0) {
    throw InvalidArgument("U(" + std::to_string(d) + ") needs d | N for level 4N = " + std::to_string(label.level()) +
                          "; inflate the label first");
  }
  return with(label, label.level(), shifted_character(label, d));
}

}  // namespace

TruncSeries hecke_T(const TruncSeries& f, int k2even, std::uint64_t ell, const DirichletChar& chi,
                    std::optional<std::size_t> out_trunc) {
  if (k2even < 2 || k2even % 2 != 0) throw InvalidArgument("hecke_T: needs an even twice-weight");
  if (!is_prime(ell)) throw InvalidArgument("hecke_T: " + std::to_string(ell) + " is not prime");
  const int chi_ell = chi.real_value(static_cast<std::int64_t>(ell));
  if (chi_ell == 0) throw InvalidArgument("hecke_T: ell divides the character modulus");
  const std::size_t t = out_trunc.value_or(f.trunc() / ell);
  if (t > f.trunc() / ell) {
    throw TruncationError("hecke_T: output through q^" + std::to_string(t) + " needs input through q^" +
                          std::to_string(t * ell) + ", have q^" + std::to_string(f.trunc()));
  }
  const ResidueRing& ring = f.ring();
  const int k = k2even / 2;
  Residue weight = ring.pow(ring.reduce_unsigned(ell), static_cast<std::uint64_t>(k - 1));
  if (chi_ell < 0) weight = ring.neg(weight);
  std::vector<Residue> c(t + 1);
  for (std::size_t n = 0; n <= t; ++n) {
    Residue v = f.coeffs()[ell * n];
    if (n % ell == 0) v = ring.add(v, ring.mul(weight, f.coeffs()[n / ell]));
    c[n] = v;
  }
  return TruncSeries(ring, std::move(c));
}

LabeledSeries apply_U(const TruncSeries& f, const SpaceLabel& label, std::uint64_t d) {
  if (d == 0) throw InvalidArgument("U(0) is undefined");
  SpaceLabel out = u_label(label, d);
  return LabeledSeries{compact_progression(f, d, 0), std::move(out)};
}

LabeledSeries apply_V(const TruncSeries& f, const SpaceLabel& label, std::uint64_t d) {
  if (d == 0) throw InvalidArgument("V(0) is undefined");
  TruncSeries s = transform(f, d, +1);
  return LabeledSeries{std::move(s), with(label, label.level() * d, shifted_character(label, d))};
}

LabeledSeries apply_twist(const TruncSeries& f, const SpaceLabel& label, const DirichletChar& psi) {
  if (!psi.is_real()) throw InvalidArgument("apply_twist: only real characters act on Z/mZ coefficients");
  const std::uint64_t m = psi.conductor();
  std::vector<Residue> c(f.trunc() + 1);
  for (std::size_t n = 0; n <= f.trunc(); ++n) {
    const int v = psi.real_value(static_cast<std::int64_t>(n));
    c[n] = v == 0 ? 0 : (v > 0 ? f.coeffs()[n] : f.ring().neg(f.coeffs()[n]));
  }
  std::optional<DirichletChar> chi;
  if (label.character()) chi = *label.character() * psi.pow(2);
  return LabeledSeries{TruncSeries(f.ring(), std::move(c)), with(label, label.level() * m * m, std::move(chi))};
}

SieveResult sieve_progression(const TruncSeries& f, const SpaceLabel& label, std::uint64_t d, std::uint64_t A,
                              std::uint64_t B) {
  if (d == 0 || A == 0 || B >= A) throw InvalidArgument("sieve_progression: need d, A >= 1 and 0 <= B < A");
  if (std::gcd(A, B) != 1) {
    throw InvalidArgument("sieve_progression: gcd(A, B) = " + std::to_string(std::gcd(A, B)) + " != 1");
  }
  TruncSeries series = extract_progression(compact_progression(f, d, 0), A, B);
  const bool real_twists = unit_group_all_real(A);

  // Character averaging: view at 4Nd, apply U(d), twist by every psi mod A.
  std::optional<DirichletChar> chi = shifted_character(label, d);
  SpaceLabel conservative =
      real_twists ? with(label, label.level() * d * A * A, chi) : SpaceLabel::gamma1(label.twice_weight(), label.level() * d * A * A);

  std::vector<SpaceLabel> chain;
  SpaceLabel cur = label;
  for (std::uint64_t p : prime_factors_with_multiplicity(d)) {
    if ((cur.level() / 4) % p != 0) cur = cur.inflated(p);
    cur = u_label(cur, p);
    chain.push_back(cur);
  }
  SpaceLabel stepwise = real_twists ? with(cur, cur.level() * A * A, cur.character())
                                    : SpaceLabel::gamma1(cur.twice_weight(), cur.level() * A * A);
  return SieveResult{std::move(series), std::move(conservative), std::move(stepwise), std::move(chain)};
}

}  // namespace overpart

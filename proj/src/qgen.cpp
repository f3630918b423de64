#include "overpart/qgen.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace overpart {

TruncSeries pochhammer(std::uint64_t delta, std::size_t trunc, ResidueRing ring) {
  if (delta == 0) throw InvalidArgument("pochhammer: delta must be positive");
  std::vector<Residue> c(trunc + 1, 0);
  c[0] = 1;
  // Euler: prod (1 - x^k) = sum_k (-1)^k x^{k(3k-1)/2}, k over all integers.
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t lo = delta * (k * (3 * k - 1) / 2);
    if (lo > trunc) break;
    const Residue v = (k & 1) ? ring.neg(1) : 1;
    c[lo] = ring.add(c[lo], v);
    const std::uint64_t hi = delta * (k * (3 * k + 1) / 2);
    if (hi <= trunc) c[hi] = ring.add(c[hi], v);
  }
  return TruncSeries(ring, std::move(c));
}

EtaQuotient::EtaQuotient(std::initializer_list<EtaFactor> factors)
    : EtaQuotient(std::vector<EtaFactor>(factors)) {}

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), [](const auto& a, const auto& b) { return a.delta < b.delta; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].delta == 0) throw InvalidArgument("eta quotient: delta must be positive");
    if (i > 0 && factors_[i].delta == factors_[i - 1].delta) {
      throw InvalidArgument("eta quotient: repeated delta " + std::to_string(factors_[i].delta));
    }
  }
}

EtaQuotient EtaQuotient::parse(const std::string& text) {
  std::vector<EtaFactor> factors;
  std::stringstream ss(text);
  std::string item;
  auto parse_int = [&](std::string_view s, auto& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InvalidArgument("eta quotient: cannot parse '" + std::string(s) + "' in '" + text + "'");
    }
  };
  while (std::getline(ss, item, ',')) {
    const auto caret = item.find('^');
    EtaFactor f{0, 1};
    parse_int(std::string_view(item).substr(0, caret), f.delta);
    if (caret != std::string::npos) parse_int(std::string_view(item).substr(caret + 1), f.exponent);
    factors.push_back(f);
  }
  if (factors.empty()) throw InvalidArgument("eta quotient: empty specification");
  return EtaQuotient(std::move(factors));
}

std::int64_t EtaQuotient::prefactor24() const {
  std::int64_t s = 0;
  for (const auto& f : factors_) s += static_cast<std::int64_t>(f.delta) * f.exponent;
  return s;
}

TruncSeries QExpansion::to_series() const {
  if (prefactor24 < 0 || prefactor24 % 24 != 0) {
    throw InvalidArgument("eta quotient prefactor q^(" + std::to_string(prefactor24) +
                          "/24) is not a non-negative integral power of q");
  }
  const auto shift = static_cast<std::size_t>(prefactor24 / 24);
  std::vector<Residue> c(series.trunc() + shift + 1, 0);
  std::copy(series.coeffs().begin(), series.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(shift));
  return TruncSeries(series.ring(), std::move(c));
}

QExpansion eta_quotient(const EtaQuotient& q, std::size_t trunc, ResidueRing ring) {
  // One sparse factor at a time: each step costs O(T * sqrt(T / delta)).
  TruncSeries acc = TruncSeries::one(ring, trunc);
  for (const auto& f : q.factors()) {
    const TruncSeries p = pochhammer(f.delta, trunc, ring);
    const std::int64_t count = f.exponent < 0 ? -f.exponent : f.exponent;
    for (std::int64_t i = 0; i < count; ++i) acc = f.exponent > 0 ? ring_mul(acc, p) : ring_divide(acc, p);
  }
  return QExpansion{q.prefactor24(), std::move(acc)};
}

TruncSeries eta_series(const EtaQuotient& q, std::size_t trunc, ResidueRing ring) {
  return eta_quotient(q, trunc, ring).to_series().truncated(trunc);
}

TruncSeries theta_phi(std::size_t trunc, ResidueRing ring) {
  std::vector<Residue> c(trunc + 1, 0);
  c[0] = 1;
  const Residue two = ring.reduce(2);
  for (std::size_t k = 1; k * k <= trunc; ++k) c[k * k] = two;
  return TruncSeries(ring, std::move(c));
}

const EtaQuotient& phi_eta_form() {
  static const EtaQuotient q{{2, 5}, {1, -2}, {4, -2}};
  return q;
}

const EtaQuotient& phi_minus_eta_form() {
  static const EtaQuotient q{{1, 2}, {2, -1}};
  return q;
}

const EtaQuotient& F_eta_form() {
  static const EtaQuotient q{{4, 8}, {2, -4}};
  return q;
}

TruncSeries theta_F(std::size_t trunc, ResidueRing ring) { return eta_series(F_eta_form(), trunc, ring); }

TruncSeries r_m_series(std::uint64_t m_exp, std::size_t trunc, ResidueRing ring) {
  if (m_exp == 0) throw InvalidArgument("r_m_series: exponent must be at least 1");
  return ring_pow(theta_phi(trunc, ring), m_exp);
}

namespace {

std::int64_t count_representations(std::int64_t n, int dims, std::map<std::pair<std::int64_t, int>, std::int64_t>& memo) {
  if (dims == 0) return n == 0 ? 1 : 0;
  if (n == 0) return 1;
  const auto key = std::pair{n, dims};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::int64_t total = 0;
  for (std::int64_t x = 0; x * x <= n; ++x) {
    const std::int64_t sub = count_representations(n - x * x, dims - 1, memo);
    total += x == 0 ? sub : 2 * sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::int64_t r_m_bruteforce(std::int64_t n, int m_exp) {
  if (n < 0 || m_exp < 1) throw InvalidArgument("r_m_bruteforce: need n >= 0 and m >= 1");
  if (m_exp > 12 || n > 50) throw BudgetExceeded("r_m_bruteforce: oracle budget is m <= 12, n <= 50");
  std::map<std::pair<std::int64_t, int>, std::int64_t> memo;
  return count_representations(n, m_exp, memo);
}

std::vector<std::int64_t> r_m_exact(std::uint64_t m_exp, std::size_t trunc) {
  constexpr std::uint64_t p1 = 2147483647;  // 2^31 - 1
  constexpr std::uint64_t p2 = 2147483629;
  const ResidueRing r1(p1), r2(p2);
  const TruncSeries a = r_m_series(m_exp, trunc, r1);
  const TruncSeries b = r_m_series(m_exp, trunc, r2);
  const Residue p1_inv = r2.inverse(static_cast<Residue>(p1 % p2));
  std::vector<std::int64_t> out(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) {
    const Residue x1 = a.coeffs()[n];
    const Residue t = r2.mul(r2.sub(b.coeffs()[n], static_cast<Residue>(x1 % p2)), p1_inv);
    out[n] = static_cast<std::int64_t>(x1 + p1 * t);
  }
  return out;
}

TruncSeries overpartition_series(std::size_t trunc, ResidueRing ring) {
  return ring_invert(transform(theta_phi(trunc, ring), 1, -1));
}

}  // namespace overpart

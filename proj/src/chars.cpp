#include "overpart/chars.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace overpart {

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  std::uint64_t m;
  if (n < 0) {
    m = static_cast<std::uint64_t>(-(n + 1)) + 1;
    if (a < 0) result = -result;
  } else {
    m = static_cast<std::uint64_t>(n);
  }
  const int twos = std::countr_zero(m);
  if (twos > 0) {
    if ((a & 1) == 0) return 0;
    m >>= twos;
    const std::int64_t a8 = ((a % 8) + 8) % 8;
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a/m) for odd m > 0; depends on a only modulo m.
  const auto sm = static_cast<std::int64_t>(m);
  std::uint64_t x = static_cast<std::uint64_t>(((a % sm) + sm) % sm);
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      const std::uint64_t r = m & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if ((x & 3) == 3 && (m & 3) == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t reduce_mod(std::int64_t n, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((n % sm) + sm) % sm);
}

// Rescales indices so that `order` is the exact order of the character.
void normalize(std::uint32_t& order, std::vector<std::int32_t>& values) {
  std::uint32_t g = order;
  for (auto v : values) {
    if (v >= 0) g = std::gcd(g, static_cast<std::uint32_t>(v));
  }
  if (g > 1) {
    order /= g;
    for (auto& v : values) {
      if (v >= 0) v /= static_cast<std::int32_t>(g);
    }
  }
}

}  // namespace

DirichletChar::DirichletChar(std::uint64_t modulus, std::uint32_t order, std::vector<std::int32_t> values)
    : modulus_(modulus), order_(order), values_(std::move(values)) {
  if (modulus_ == 0 || order_ == 0) throw InvalidArgument("Dirichlet character needs positive modulus and order");
  if (values_.size() != modulus_) throw InvalidArgument("Dirichlet character table size differs from modulus");
  for (std::uint64_t n = 0; n < modulus_; ++n) {
    const bool unit = std::gcd(n, modulus_) == 1;
    auto& v = values_[n];
    if (!unit) {
      v = -1;
    } else {
      if (v < 0) throw InvalidArgument("Dirichlet character vanishes on a unit");
      v %= static_cast<std::int32_t>(order_);
    }
  }
  normalize(order_, values_);
}

DirichletChar DirichletChar::trivial(std::uint64_t modulus) {
  return DirichletChar(modulus, 1, std::vector<std::int32_t>(modulus, 0));
}

DirichletChar DirichletChar::kronecker_character(std::int64_t D, std::uint64_t modulus) {
  if (D == 0) throw InvalidArgument("(0/.) is not a Dirichlet character");
  const std::uint64_t absD = D < 0 ? static_cast<std::uint64_t>(-D) : static_cast<std::uint64_t>(D);
  const std::int64_t d4 = ((D % 4) + 4) % 4;
  const std::uint64_t period = (d4 == 0 || d4 == 1) ? absD : 4 * absD;
  if (modulus == 0 || modulus % period != 0) {
    throw InvalidArgument("(" + std::to_string(D) + "/.) has period " + std::to_string(period) +
                          ", which does not divide " + std::to_string(modulus));
  }
  std::vector<std::int32_t> values(modulus, -1);
  for (std::uint64_t n = 0; n < modulus; ++n) {
    if (std::gcd(n, modulus) != 1) continue;
    values[n] = kronecker(D, static_cast<std::int64_t>(n == 0 ? modulus : n)) == 1 ? 0 : 1;
  }
  return DirichletChar(modulus, 2, std::move(values));
}

std::optional<std::uint32_t> DirichletChar::index_at(std::int64_t n) const {
  const auto v = values_[reduce_mod(n, modulus_)];
  if (v < 0) return std::nullopt;
  return static_cast<std::uint32_t>(v);
}

int DirichletChar::real_value(std::int64_t n) const {
  const auto idx = index_at(n);
  if (!idx) return 0;
  if (*idx == 0) return 1;
  if (2 * *idx == order_) return -1;
  throw InvalidArgument("character value at " + std::to_string(n) + " is not real");
}

std::uint64_t DirichletChar::conductor() const {
  for (std::uint64_t c = 1; c <= modulus_; ++c) {
    if (modulus_ % c != 0) continue;
    bool induced = true;
    for (std::uint64_t u = 1 % c; u < modulus_ && induced; u += c) {
      if (values_[u] > 0) induced = false;
    }
    if (induced) return c;
  }
  return modulus_;
}

DirichletChar DirichletChar::primitive() const {
  const std::uint64_t c = conductor();
  std::vector<std::int32_t> values(c, -1);
  for (std::uint64_t n = 0; n < c; ++n) {
    if (std::gcd(n, c) != 1) continue;
    for (std::uint64_t u = n; u < modulus_; u += c) {
      if (values_[u] >= 0) {
        values[n] = values_[u];
        break;
      }
    }
  }
  return DirichletChar(c, order_, std::move(values));
}

DirichletChar DirichletChar::lift(std::uint64_t new_modulus) const {
  if (new_modulus == 0 || new_modulus % modulus_ != 0) {
    throw InvalidArgument("cannot lift a character modulo " + std::to_string(modulus_) + " to modulus " +
                          std::to_string(new_modulus));
  }
  std::vector<std::int32_t> values(new_modulus, -1);
  for (std::uint64_t n = 0; n < new_modulus; ++n) {
    if (std::gcd(n, new_modulus) == 1) values[n] = values_[n % modulus_];
  }
  return DirichletChar(new_modulus, order_, std::move(values));
}

DirichletChar DirichletChar::operator*(const DirichletChar& other) const {
  const std::uint64_t L = std::lcm(modulus_, other.modulus_);
  const DirichletChar a = lift(L);
  const DirichletChar b = other.lift(L);
  const std::uint32_t E = std::lcm(a.order_, b.order_);
  std::vector<std::int32_t> values(L, -1);
  for (std::uint64_t n = 0; n < L; ++n) {
    if (a.values_[n] < 0) continue;
    const std::uint64_t s = std::uint64_t(a.values_[n]) * (E / a.order_) + std::uint64_t(b.values_[n]) * (E / b.order_);
    values[n] = static_cast<std::int32_t>(s % E);
  }
  return DirichletChar(L, E, std::move(values));
}

DirichletChar DirichletChar::pow(std::int64_t k) const {
  const auto o = static_cast<std::int64_t>(order_);
  const std::int64_t kk = ((k % o) + o) % o;
  std::vector<std::int32_t> values(values_);
  for (auto& v : values) {
    if (v >= 0) v = static_cast<std::int32_t>((v * kk) % o);
  }
  return DirichletChar(modulus_, order_, std::move(values));
}

std::optional<std::int64_t> DirichletChar::kronecker_discriminant() const {
  if (!is_real()) return std::nullopt;
  const DirichletChar prim = primitive();
  const auto c = static_cast<std::int64_t>(prim.modulus());
  if (c == 1) return 1;
  for (std::int64_t D : {c, -c}) {
    bool match = true;
    for (std::int64_t n = 1; n < c && match; ++n) {
      if (std::gcd(n, c) != 1) continue;
      match = kronecker(D, n) == prim.real_value(n);
    }
    if (match) return D;
  }
  return std::nullopt;
}

std::string DirichletChar::describe() const {
  if (is_trivial()) return "trivial";
  if (auto D = kronecker_discriminant()) return "(" + std::to_string(*D) + "/.)";
  return "order " + std::to_string(order_) + " conductor " + std::to_string(conductor());
}

bool same_primitive(const DirichletChar& a, const DirichletChar& b) { return a.primitive() == b.primitive(); }

std::vector<DirichletChar> char_group(std::uint64_t A) {
  if (A == 0) throw InvalidArgument("char_group: modulus must be positive");
  if (A > 10000) throw BudgetExceeded("char_group: modulus " + std::to_string(A) + " exceeds 10^4");
  if (A == 1) return {DirichletChar::trivial(1)};

  // Generators of (Z/AZ)^x, one cyclic factor at a time.
  struct Generator {
    std::uint64_t prime_power;
    std::uint32_t order;
    std::vector<std::int32_t> log;  // discrete log modulo prime_power, -1 off the subgroup
  };
  std::vector<Generator> gens;
  for (auto [p, e] : factorize(A)) {
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    const std::uint64_t phi_q = euler_phi(q);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> local;  // (generator, order)
    if (p == 2) {
      if (e == 2) local.emplace_back(3, 2);
      if (e >= 3) {
        local.emplace_back(q - 1, 2);
        local.emplace_back(5, static_cast<std::uint32_t>(q / 4));
      }
    } else {
      for (std::uint64_t g = 2; g < q; ++g) {
        if (g % p == 0) continue;
        std::uint64_t x = g, ord = 1;
        while (x != 1) {
          x = x * g % q;
          ++ord;
        }
        if (ord == phi_q) {
          local.emplace_back(g, static_cast<std::uint32_t>(phi_q));
          break;
        }
      }
    }
    if (local.empty()) continue;
    // Enumerate products g1^a g2^b to tabulate discrete logs.
    std::vector<Generator> built;
    for (auto [g, ord] : local) built.push_back(Generator{q, ord, std::vector<std::int32_t>(q, -1)});
    const std::uint32_t ord0 = local[0].second;
    const std::uint32_t ord1 = local.size() > 1 ? local[1].second : 1;
    std::uint64_t x0 = 1;
    for (std::uint32_t a = 0; a < ord0; ++a) {
      std::uint64_t x = x0;
      for (std::uint32_t b = 0; b < ord1; ++b) {
        built[0].log[x] = static_cast<std::int32_t>(a);
        if (built.size() > 1) built[1].log[x] = static_cast<std::int32_t>(b);
        if (local.size() > 1) x = x * local[1].first % q;
      }
      x0 = x0 * local[0].first % q;
    }
    for (auto& g : built) gens.push_back(std::move(g));
  }

  std::uint32_t E = 1;
  for (const auto& g : gens) E = std::lcm(E, g.order);

  std::vector<DirichletChar> out;
  std::vector<std::uint32_t> exps(gens.size(), 0);
  while (true) {
    std::vector<std::int32_t> values(A, -1);
    for (std::uint64_t n = 0; n < A; ++n) {
      if (std::gcd(n, A) != 1) continue;
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto lg = static_cast<std::uint64_t>(gens[i].log[n % gens[i].prime_power]);
        idx += std::uint64_t{exps[i]} * lg * (E / gens[i].order);
      }
      values[n] = static_cast<std::int32_t>(idx % E);
    }
    out.emplace_back(A, E, std::move(values));
    std::size_t i = 0;
    while (i < gens.size() && ++exps[i] == gens[i].order) exps[i++] = 0;
    if (i == gens.size()) break;
  }
  return out;
}

bool unit_group_all_real(std::uint64_t A) {
  for (std::uint64_t u = 1; u < A; ++u) {
    if (std::gcd(u, A) == 1 && (u * u) % A != 1 % A) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, low degree first

// Remainder of p modulo a monic polynomial.
Poly poly_mod(Poly p, const Poly& monic) {
  const std::size_t dm = monic.size() - 1;
  for (std::size_t deg = p.size(); deg-- > dm;) {
    const std::int64_t c = p[deg];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dm; ++i) p[deg - dm + i] -= c * monic[i];
  }
  p.resize(std::min(p.size(), dm));
  return p;
}

Poly cyclotomic(std::uint32_t n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const Poly q = cyclotomic(d);
    // exact division of p by monic q
    const std::size_t dq = q.size() - 1;
    Poly quot(p.size() - dq, 0);
    for (std::size_t deg = p.size(); deg-- > dq;) {
      const std::int64_t c = p[deg];
      quot[deg - dq] = c;
      for (std::size_t i = 0; i <= dq; ++i) p[deg - dq + i] -= c * q[i];
    }
    p = quot;
  }
  return p;
}

}  // namespace

Rational orthogonality_sum(std::uint64_t A, std::uint64_t B, std::int64_t n) {
  if (A == 0 || std::gcd(B, A) != 1) {
    throw InvalidArgument("orthogonality_sum: B = " + std::to_string(B) + " is not coprime to A = " + std::to_string(A));
  }
  const auto group = char_group(A);
  std::uint32_t E = 1;
  for (const auto& chi : group) E = std::lcm(E, chi.order());

  // Sum of exp(2 pi i j / E), kept as counts per j.
  Poly counts(E, 0);
  for (const auto& chi : group) {
    const auto vn = chi.index_at(n);
    if (!vn) continue;
    const auto vb = *chi.index_at(static_cast<std::int64_t>(B));
    const std::uint32_t scale = E / chi.order();
    const std::int64_t j = (static_cast<std::int64_t>(*vn) - static_cast<std::int64_t>(vb)) * scale;
    counts[static_cast<std::size_t>(((j % E) + E) % E)] += 1;
  }
  const Poly reduced = poly_mod(counts, cyclotomic(E));
  for (std::size_t i = 1; i < reduced.size(); ++i) {
    if (reduced[i] != 0) throw Error("orthogonality_sum: character sum is not rational");
  }
  std::int64_t num = reduced.empty() ? 0 : reduced[0];
  auto den = static_cast<std::int64_t>(group.size());
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return Rational{num, den};
}

}  // namespace overpart

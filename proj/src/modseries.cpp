#include "overpart/modseries.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iterator>
#include <limits>
#include <numeric>
#include <sstream>

namespace overpart {

// ---------------------------------------------------------------------------
// ResidueRing

ResidueRing::ResidueRing(std::uint64_t modulus) {
  if (modulus < 2 || modulus > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgument("residue ring modulus must lie in [2, 2^32): " + std::to_string(modulus));
  }
  modulus_ = static_cast<std::uint32_t>(modulus);
}

Residue ResidueRing::reduce(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  return static_cast<Residue>(r);
}

Residue ResidueRing::add(Residue a, Residue b) const {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= modulus_ ? s - modulus_ : s);
}

Residue ResidueRing::sub(Residue a, Residue b) const {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + modulus_ - b);
}

Residue ResidueRing::pow(Residue a, std::uint64_t e) const {
  Residue result = static_cast<Residue>(1 % modulus_);
  Residue base = a % modulus_;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool ResidueRing::is_unit(Residue a) const { return std::gcd(a % modulus_, modulus_) == 1; }

Residue ResidueRing::inverse(Residue a) const {
  std::int64_t r0 = modulus_, r1 = a % modulus_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) {
    throw NotInvertible(std::to_string(a) + " is not a unit modulo " + std::to_string(modulus_));
  }
  return reduce(s0);
}

// ---------------------------------------------------------------------------
// TruncSeries

TruncSeries::TruncSeries(ResidueRing ring, std::vector<Residue> coeffs, double sparse_density)
    : ring_(ring), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("a truncated series needs at least one coefficient");
  if (coeffs_.size() - 1 > kMaxTrunc) {
    throw TruncationError("truncation " + std::to_string(coeffs_.size() - 1) + " exceeds cap");
  }
  const std::uint32_t m = ring_.modulus();
  std::size_t nonzero = 0;
  for (auto& c : coeffs_) {
    if (c >= m) c %= m;
    if (c != 0) ++nonzero;
  }
  if (static_cast<double>(nonzero) <= sparse_density * static_cast<double>(coeffs_.size())) {
    std::vector<std::size_t> support;
    support.reserve(nonzero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) support.push_back(i);
    }
    support_ = std::move(support);
  }
}

TruncSeries TruncSeries::zero(ResidueRing ring, std::size_t trunc) {
  return TruncSeries(ring, std::vector<Residue>(trunc + 1, 0));
}

TruncSeries TruncSeries::one(ResidueRing ring, std::size_t trunc) {
  std::vector<Residue> c(trunc + 1, 0);
  c[0] = 1;
  return TruncSeries(ring, std::move(c));
}

TruncSeries TruncSeries::from_integers(ResidueRing ring, std::span<const std::int64_t> values) {
  std::vector<Residue> c;
  c.reserve(values.size());
  for (auto v : values) c.push_back(ring.reduce(v));
  return TruncSeries(ring, std::move(c));
}

Residue TruncSeries::coefficient_at(std::size_t n) const {
  if (n > trunc()) {
    throw TruncationError("coefficient q^" + std::to_string(n) + " requested from a series known through q^" +
                          std::to_string(trunc()));
  }
  return coeffs_[n];
}

TruncSeries TruncSeries::truncated(std::size_t t) const {
  if (t > trunc()) {
    throw TruncationError("cannot extend truncation from " + std::to_string(trunc()) + " to " + std::to_string(t));
  }
  return TruncSeries(ring_, std::vector<Residue>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(t + 1)));
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

std::vector<std::size_t> TruncSeries::nonzero_indices() const {
  if (support_) return *support_;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

void require_same_ring(const TruncSeries& f, const TruncSeries& g, const char* op) {
  if (f.ring() != g.ring()) {
    throw RingMismatch(std::string(op) + ": operands are modulo " + std::to_string(f.modulus()) + " and " +
                       std::to_string(g.modulus()));
  }
}

// How many products of two residues can be added to a reduced value before a
// 64-bit accumulator may overflow.
std::uint64_t lazy_terms(std::uint32_t m) {
  const std::uint64_t sq = std::uint64_t{m - 1} * (m - 1);
  if (sq == 0) return std::numeric_limits<std::uint64_t>::max();
  return (std::numeric_limits<std::uint64_t>::max() - m) / sq;
}

std::vector<Residue> reduce_all(const std::vector<std::uint64_t>& acc, std::uint32_t m) {
  std::vector<Residue> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Residue>(acc[i] % m);
  return out;
}

}  // namespace

TruncSeries series_add(const TruncSeries& f, const TruncSeries& g) {
  require_same_ring(f, g, "series_add");
  const std::size_t t = std::min(f.trunc(), g.trunc());
  std::vector<Residue> c(t + 1);
  for (std::size_t i = 0; i <= t; ++i) c[i] = f.ring().add(f.coeffs()[i], g.coeffs()[i]);
  return TruncSeries(f.ring(), std::move(c));
}

TruncSeries series_sub(const TruncSeries& f, const TruncSeries& g) {
  require_same_ring(f, g, "series_sub");
  const std::size_t t = std::min(f.trunc(), g.trunc());
  std::vector<Residue> c(t + 1);
  for (std::size_t i = 0; i <= t; ++i) c[i] = f.ring().sub(f.coeffs()[i], g.coeffs()[i]);
  return TruncSeries(f.ring(), std::move(c));
}

TruncSeries series_scale(const TruncSeries& f, Residue s) {
  std::vector<Residue> c(f.coeffs().begin(), f.coeffs().end());
  s %= f.modulus();
  for (auto& x : c) x = f.ring().mul(x, s);
  return TruncSeries(f.ring(), std::move(c));
}

TruncSeries ring_mul(const TruncSeries& f, const TruncSeries& g) {
  require_same_ring(f, g, "ring_mul");
  const std::size_t t = std::min(f.trunc(), g.trunc());
  const std::uint32_t m = f.modulus();

  // Rows come from the operand with fewer known nonzeros.
  const TruncSeries* rows = &f;
  const TruncSeries* cols = &g;
  const std::size_t nf = f.support_hint() ? f.support_hint()->size() : std::numeric_limits<std::size_t>::max();
  const std::size_t ng = g.support_hint() ? g.support_hint()->size() : std::numeric_limits<std::size_t>::max();
  if (ng < nf) std::swap(rows, cols);

  std::vector<std::uint64_t> acc(t + 1, 0);
  const std::uint64_t budget = lazy_terms(m);
  std::uint64_t pending = 0;
  const Residue* col = cols->coeffs().data();
  for (std::size_t i : rows->nonzero_indices()) {
    if (i > t) break;
    const std::uint64_t a = rows->coeffs()[i];
    std::uint64_t* out = acc.data() + i;
    const std::size_t len = t - i + 1;
    for (std::size_t j = 0; j < len; ++j) out[j] += a * col[j];
    if (++pending == budget) {
      for (auto& x : acc) x %= m;
      pending = 0;
    }
  }
  return TruncSeries(f.ring(), reduce_all(acc, m));
}

TruncSeries ring_pow(const TruncSeries& f, std::uint64_t e) {
  if (e == 0) return TruncSeries::one(f.ring(), f.trunc());
  if (e == 1) return f;

  // A sparse base is cheaper to multiply in one factor at a time than to
  // square into dense intermediates.
  if (f.support_hint()) {
    const double nnz = static_cast<double>(f.support_hint()->size());
    const double repeated = static_cast<double>(e - 1) * nnz;
    const double binary = static_cast<double>(std::bit_width(e)) * static_cast<double>(f.trunc() + 1);
    if (repeated <= binary) {
      TruncSeries result = f;
      for (std::uint64_t i = 1; i < e; ++i) result = ring_mul(result, f);
      return result;
    }
  }

  TruncSeries result = TruncSeries::one(f.ring(), f.trunc());
  TruncSeries base = f;
  bool first = true;
  while (e != 0) {
    if (e & 1) {
      result = first ? base : ring_mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e != 0) base = ring_mul(base, base);
  }
  return result;
}

TruncSeries ring_divide(const TruncSeries& g, const TruncSeries& f) {
  require_same_ring(f, g, "ring_divide");
  const ResidueRing& ring = f.ring();
  const std::uint32_t m = ring.modulus();
  const std::size_t t = std::min(f.trunc(), g.trunc());
  const Residue lead = f.coeffs()[0];
  if (!ring.is_unit(lead)) {
    throw NotInvertible("constant term " + std::to_string(lead) + " is not a unit modulo " + std::to_string(m));
  }
  const Residue inv0 = ring.inverse(lead);

  std::vector<std::size_t> offsets;
  std::vector<std::uint64_t> weights;
  for (std::size_t j : f.nonzero_indices()) {
    if (j == 0) continue;
    if (j > t) break;
    offsets.push_back(j);
    weights.push_back(f.coeffs()[j]);
  }
  const bool lazy = offsets.size() <= lazy_terms(m);

  std::vector<Residue> c(t + 1);
  const Residue* gc = g.coeffs().data();
  std::size_t active = 0;
  for (std::size_t n = 0; n <= t; ++n) {
    while (active < offsets.size() && offsets[active] <= n) ++active;
    std::uint64_t acc = 0;
    if (lazy) {
      for (std::size_t k = 0; k < active; ++k) acc += weights[k] * c[n - offsets[k]];
      acc %= m;
    } else {
      for (std::size_t k = 0; k < active; ++k) acc = (acc + weights[k] * c[n - offsets[k]]) % m;
    }
    c[n] = ring.mul(inv0, ring.sub(gc[n], static_cast<Residue>(acc)));
  }
  return TruncSeries(ring, std::move(c));
}

TruncSeries ring_invert(const TruncSeries& f) { return ring_divide(TruncSeries::one(f.ring(), f.trunc()), f); }

TruncSeries transform(const TruncSeries& f, std::uint64_t d, int sign) {
  if (d == 0) throw InvalidArgument("transform: dilation factor must be positive");
  if (sign != 1 && sign != -1) throw InvalidArgument("transform: sign must be +1 or -1");
  if (f.trunc() != 0 && d > TruncSeries::kMaxTrunc / f.trunc()) {
    throw TruncationError("transform: truncation " + std::to_string(f.trunc()) + " * " + std::to_string(d) +
                          " exceeds cap");
  }
  const std::size_t t = f.trunc() * d;
  std::vector<Residue> c(t + 1, 0);
  for (std::size_t n = 0; n <= f.trunc(); ++n) {
    const Residue v = f.coeffs()[n];
    c[n * d] = (sign < 0 && (n & 1)) ? f.ring().neg(v) : v;
  }
  return TruncSeries(f.ring(), std::move(c));
}

TruncSeries extract_progression(const TruncSeries& f, std::uint64_t A, std::uint64_t B) {
  if (A == 0 || B >= A) throw InvalidArgument("extract_progression: need A >= 1 and 0 <= B < A");
  std::vector<Residue> c(f.trunc() + 1, 0);
  for (std::size_t n = B; n <= f.trunc(); n += A) c[n] = f.coeffs()[n];
  return TruncSeries(f.ring(), std::move(c));
}

TruncSeries compact_progression(const TruncSeries& f, std::uint64_t A, std::uint64_t B) {
  if (A == 0 || B >= A) throw InvalidArgument("compact_progression: need A >= 1 and 0 <= B < A");
  if (B > f.trunc()) {
    throw TruncationError("compact_progression: offset " + std::to_string(B) + " beyond truncation");
  }
  const std::size_t t = (f.trunc() - B) / A;
  std::vector<Residue> c(t + 1);
  for (std::size_t n = 0; n <= t; ++n) c[n] = f.coeffs()[A * n + B];
  return TruncSeries(f.ring(), std::move(c));
}

// ---------------------------------------------------------------------------
// Cache file format

namespace {

constexpr std::uint8_t kFormatVersion = 1;

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t pos, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= std::uint64_t{in[pos + static_cast<std::size_t>(i)]} << (8 * i);
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_series(const TruncSeries& f) {
  std::vector<std::uint8_t> out;
  out.reserve(21 + 4 * (f.trunc() + 1));
  for (char ch : {'Q', 'S', 'E', 'R'}) out.push_back(static_cast<std::uint8_t>(ch));
  out.push_back(kFormatVersion);
  put_le(out, f.modulus(), 8);
  put_le(out, f.trunc(), 8);
  for (Residue c : f.coeffs()) put_le(out, c, 4);
  return out;
}

TruncSeries decode_series(std::span<const std::uint8_t> bytes) {
  constexpr std::size_t kHeader = 21;
  if (bytes.size() < kHeader || bytes[0] != 'Q' || bytes[1] != 'S' || bytes[2] != 'E' || bytes[3] != 'R') {
    throw InvalidArgument("not a QSER series file");
  }
  if (bytes[4] != kFormatVersion) {
    throw InvalidArgument("unsupported QSER version " + std::to_string(bytes[4]));
  }
  const std::uint64_t modulus = get_le(bytes, 5, 8);
  const std::uint64_t trunc = get_le(bytes, 13, 8);
  if (trunc > TruncSeries::kMaxTrunc) throw TruncationError("QSER truncation exceeds cap");
  if (bytes.size() != kHeader + 4 * (trunc + 1)) {
    throw InvalidArgument("QSER payload length does not match truncation " + std::to_string(trunc));
  }
  ResidueRing ring(modulus);
  std::vector<Residue> c(trunc + 1);
  for (std::size_t i = 0; i <= trunc; ++i) {
    const std::uint64_t v = get_le(bytes, kHeader + 4 * i, 4);
    if (v >= modulus) throw InvalidArgument("QSER residue out of range at index " + std::to_string(i));
    c[i] = static_cast<Residue>(v);
  }
  return TruncSeries(ring, std::move(c));
}

void write_series_file(const std::filesystem::path& path, const TruncSeries& f) {
  const auto bytes = encode_series(f);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("short write to " + path.string());
}

TruncSeries read_series_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_series(bytes);
}

std::string to_string(const TruncSeries& f, std::size_t max_terms) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (std::size_t n = 0; n <= f.trunc() && shown < max_terms; ++n) {
    const Residue c = f.coeffs()[n];
    if (c == 0) continue;
    if (shown++ != 0) os << " + ";
    if (n == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << 'q';
      if (n != 1) os << '^' << n;
    }
  }
  if (shown == 0) os << '0';
  os << " + O(q^" << f.trunc() + 1 << ")";
  return os.str();
}

}  // namespace overpart

#include "bfcode/boolfn.hpp"

#include <cassert>
#include <sstream>

namespace bfcode {

std::string Descriptor::text() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kRaw:
      os << "raw";
      break;
    case Kind::kConstant:
      os << "constant " << constant_value;
      break;
    case Kind::kMonomial:
      os << "Tr(a*x^" << exponent << "), a=" << alpha;
      break;
    case Kind::kQuadratic:
      os << "quadratic";
      if (!shape.empty()) os << " " << shape;
      break;
  }
  return os.str();
}

BooleanFunction::BooleanFunction(std::shared_ptr<const Field> field,
                                 std::vector<std::uint8_t> table,
                                 Descriptor descriptor)
    : field_(std::move(field)),
      table_(std::move(table)),
      descriptor_(std::move(descriptor)) {
  if (!field_) throw Error(Errc::kBadParams, "null field context");
  if (table_.size() != field_->order())
    throw Error(Errc::kBadParams,
                "truth table has " + std::to_string(table_.size()) +
                    " entries, expected " + std::to_string(field_->order()));
  for (std::uint8_t v : table_)
    if (v > 1) throw Error(Errc::kBadParams, "truth table entries must be bits");
}

BooleanFunction BooleanFunction::constant(std::shared_ptr<const Field> field,
                                          int bit) {
  if (bit != 0 && bit != 1) throw Error(Errc::kBadParams, "constant must be a bit");
  std::vector<std::uint8_t> table(field->order(), static_cast<std::uint8_t>(bit));
  Descriptor d;
  d.kind = Descriptor::Kind::kConstant;
  d.constant_value = bit;
  return BooleanFunction(std::move(field), std::move(table), std::move(d));
}

BooleanFunction BooleanFunction::monomial(std::shared_ptr<const Field> field,
                                          std::uint64_t d, Elem alpha) {
  const Field& F = *field;
  if (d == 0) throw Error(Errc::kBadParams, "monomial exponent must be >= 1");
  if (alpha >= F.order()) throw Error(Errc::kBadParams, "alpha out of range");
  const std::uint64_t group = F.order() - 1;
  std::uint64_t de = d % group;
  if (de == 0) de = group;

  std::vector<std::uint8_t> table(F.order(), 0);
  if (alpha != 0) {
    // Walk x = g^k and x^d = (g^d)^k together; one multiply each per step.
    const Elem g = F.generator();
    const Elem gd = F.pow(g, de);
    Elem x = 1, xd = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
      table[x] = static_cast<std::uint8_t>(F.trace(F.mul(alpha, xd)));
      x = F.mul(x, g);
      xd = F.mul(xd, gd);
    }
  }
  Descriptor desc;
  desc.kind = Descriptor::Kind::kMonomial;
  desc.exponent = d;
  desc.alpha = alpha;
  return BooleanFunction(std::move(field), std::move(table), std::move(desc));
}

BooleanFunction BooleanFunction::from_hex(std::shared_ptr<const Field> field,
                                          const std::string& hex) {
  const std::uint64_t q = field->order();
  if (hex.size() != q / 4)
    throw Error(Errc::kParseError,
                "truth table hex has " + std::to_string(hex.size()) +
                    " digits, expected " + std::to_string(q / 4));
  std::vector<std::uint8_t> table(q, 0);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[i];
    int nibble;
    if (c >= '0' && c <= '9') nibble = c - '0';
    else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
    else
      throw Error(Errc::kParseError,
                  "invalid hex digit at position " + std::to_string(i));
    for (int b = 0; b < 4; ++b)
      table[4 * i + static_cast<std::size_t>(b)] =
          static_cast<std::uint8_t>((nibble >> b) & 1);
  }
  return BooleanFunction(std::move(field), std::move(table));
}

std::string BooleanFunction::to_hex() const {
  std::string out(table_.size() / 4, '0');
  static const char* kDigits = "0123456789abcdef";
  for (std::size_t i = 0; i < out.size(); ++i) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b)
      nibble |= table_[4 * i + static_cast<std::size_t>(b)] << b;
    out[i] = kDigits[nibble];
  }
  return out;
}

std::int64_t WalshSpectrum::multiplicity_sum() const {
  std::int64_t s = 0;
  for (const auto& [w, m] : entries) s += m;
  return s;
}

std::string WalshSpectrum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : entries) {
    if (!first) os << " ";
    first = false;
    os << "[" << w << "]^" << m;
  }
  return os.str();
}

bool WalshSpectrum::is_bent(int n) const {
  if (n % 2 != 0) return false;
  const std::int64_t a = std::int64_t(1) << (n / 2);
  if (entries.size() > 2) return false;
  for (const auto& [w, m] : entries)
    if (w != a && w != -a) return false;
  return !entries.empty();
}

std::optional<std::int64_t> WalshSpectrum::three_valued_amplitude() const {
  if (entries.size() != 3) return std::nullopt;
  auto it = entries.begin();
  const std::int64_t lo = it->first;
  ++it;
  const std::int64_t mid = it->first;
  ++it;
  const std::int64_t hi = it->first;
  if (mid == 0 && hi > 0 && lo == -hi) return hi;
  return std::nullopt;
}

bool WalshSpectrum::is_semibent(int n) const {
  auto a = three_valued_amplitude();
  return a && *a == (std::int64_t(1) << (n / 2 + 1));
}

std::int64_t walsh_naive(const BooleanFunction& f, Elem y) {
  const Field& F = f.field();
  const std::uint32_t mask = F.dual_coordinates(y);
  std::int64_t sum = 0;
  for (Elem x = 0; x < F.order(); ++x)
    sum += ((f(x) ^ Field::parity(x & mask)) != 0) ? -1 : 1;
  return sum;
}

namespace {

void hadamard_inplace(std::vector<std::int32_t>& a) {
  const std::size_t n = a.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t u = a[j];
        const std::int32_t v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
    }
  }
}

}  // namespace

std::vector<std::int32_t> walsh_full(const BooleanFunction& f) {
  const Field& F = f.field();
  const std::uint64_t q = F.order();
  std::vector<std::int32_t> hat(q);
  for (Elem x = 0; x < q; ++x) hat[x] = f(x) ? -1 : 1;
  hadamard_inplace(hat);
  std::vector<std::int32_t> out(q);
  for (Elem y = 0; y < q; ++y) out[y] = hat[F.dual_coordinates(y)];
  return out;
}

WalshSpectrum walsh_spectrum(const BooleanFunction& f) {
  const std::vector<std::int32_t> values = walsh_full(f);
  WalshSpectrum s;
  for (std::int32_t w : values) ++s.entries[w];
  s.at_zero = values[0];
  assert(s.multiplicity_sum() == static_cast<std::int64_t>(f.domain_size()));
  return s;
}

bool check_coset_invariance(const BooleanFunction& f, int t) {
  const Field& F = f.field();
  F.check_subfield_degree(t);
  if (t == 1) return true;
  // Constancy along multiplication by a generator of GF(2^t)^* is
  // constancy on the whole coset.
  const Elem g = F.subfield_generator(t);
  for (Elem x = 1; x < F.order(); ++x)
    if (f(x) != f(F.mul(g, x))) return false;
  return true;
}

std::vector<int> admissible_subfields(const BooleanFunction& f) {
  const int n = f.field().degree();
  std::vector<int> out;
  for (int t = 1; t <= n; ++t)
    if (n % t == 0 && check_coset_invariance(f, t)) out.push_back(t);
  return out;
}

ProductFunction::ProductFunction(BooleanFunction f1, BooleanFunction f2)
    : f1_(std::move(f1)), f2_(std::move(f2)) {}

std::int64_t ProductFunction::walsh_naive(Elem y1, Elem y2) const {
  const Field& F1 = f1_.field();
  const Field& F2 = f2_.field();
  const std::uint32_t m1 = F1.dual_coordinates(y1);
  const std::uint32_t m2 = F2.dual_coordinates(y2);
  std::int64_t sum = 0;
  for (Elem x1 = 0; x1 < F1.order(); ++x1) {
    const int b1 = f1_(x1) ^ Field::parity(x1 & m1);
    for (Elem x2 = 0; x2 < F2.order(); ++x2) {
      const int bit = b1 ^ f2_(x2) ^ Field::parity(x2 & m2);
      sum += bit ? -1 : 1;
    }
  }
  return sum;
}

WalshSpectrum ProductFunction::spectrum() const {
  return merge_product_spectra(walsh_spectrum(f1_), walsh_spectrum(f2_));
}

WalshSpectrum merge_product_spectra(const WalshSpectrum& s1,
                                    const WalshSpectrum& s2) {
  WalshSpectrum out;
  for (const auto& [w1, m1] : s1.entries)
    for (const auto& [w2, m2] : s2.entries) out.entries[w1 * w2] += m1 * m2;
  out.at_zero = s1.at_zero * s2.at_zero;
  return out;
}

}  // namespace bfcode

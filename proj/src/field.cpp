#include "bfcode/field.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace bfcode {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kUnsupportedN: return "UNSUPPORTED_N";
    case Errc::kDegreeMismatch: return "DEGREE_MISMATCH";
    case Errc::kReduciblePoly: return "REDUCIBLE_POLY";
    case Errc::kDivideByZero: return "DIVIDE_BY_ZERO";
    case Errc::kBadSubfieldDegree: return "BAD_SUBFIELD_DEGREE";
    case Errc::kNotCosetClosed: return "NOT_COSET_CLOSED";
    case Errc::kBadParams: return "BAD_PARAMS";
    case Errc::kCoeffFieldViolation: return "COEFF_FIELD_VIOLATION";
    case Errc::kBadShape: return "BAD_SHAPE";
    case Errc::kAlphaNotInSubfield: return "ALPHA_NOT_IN_SUBFIELD";
    case Errc::kNonIntegerMultiplicity: return "NON_INTEGER_MULTIPLICITY";
    case Errc::kEmptyDefiningSet: return "EMPTY_DEFINING_SET";
    case Errc::kHypothesisViolation: return "HYPOTHESIS_VIOLATION";
    case Errc::kProductInvarianceFailed: return "PRODUCT_INVARIANCE_FAILED";
    case Errc::kConditionFailed: return "CONDITION_FAILED";
    case Errc::kParseError: return "PARSE_ERROR";
    case Errc::kUnknownFamily: return "UNKNOWN_FAMILY";
    case Errc::kInternal: return "INTERNAL";
  }
  return "UNKNOWN";
}

namespace gf2poly {

int degree(std::uint64_t p) {
  if (p == 0) return -1;
  return 63 - __builtin_clzll(p);
}

std::uint64_t mod(std::uint64_t a, std::uint64_t p) {
  if (p == 0) return 0;
  const int dp = degree(p);
  for (int da = degree(a); da >= dp; da = degree(a)) {
    const int shift = da - dp;
    a ^= p << shift;
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p == 0) return 0;
  a = mod(a, p);
  b = mod(b, p);
  std::uint64_t r = 0;
  const std::uint64_t top = std::uint64_t(1) << degree(p);
  while (a) {
    if (a & 1) r ^= b;
    a >>= 1;
    b <<= 1;
    if (b & top) b ^= p;
  }
  return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t c = mod(a, b);
    a = b;
    b = c;
  }
  return a;
}

bool is_irreducible(std::uint64_t p) {
  // p is irreducible iff gcd(x^(2^i) - x, p) = 1 for i = 1..deg/2.
  const int d = degree(p);
  if (d <= 0) return false;
  if (d == 1) return true;
  std::uint64_t frob = 2;  // x
  for (int i = 1; i <= d / 2; ++i) {
    frob = mulmod(frob, frob, p);
    if (gcd(frob ^ 2u, p) != 1) return false;
  }
  return true;
}

}  // namespace gf2poly

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

std::uint32_t Field::default_modulus(int n) {
  // Primitive polynomials, lowest-weight entries from the classic LFSR
  // tables; x (value 2) generates the multiplicative group for every one.
  static constexpr std::array<std::uint32_t, 25> kTable = {
      0,         0,         0x7,       0xB,      0x13,     0x25,
      0x43,      0x83,      0x11D,     0x211,    0x409,    0x805,
      0x1053,    0x201B,    0x4443,    0x8003,   0x1100B,  0x20009,
      0x40081,   0x80027,   0x100009,  0x200005, 0x400003, 0x800021,
      0x1000087,
  };
  if (n < kMinDegree || n > kMaxDegree)
    throw Error(Errc::kUnsupportedN,
                "extension degree " + std::to_string(n) + " outside [2, 24]");
  return kTable[static_cast<std::size_t>(n)];
}

Field::Field(int n) : Field(n, default_modulus(n)) {}

Field::Field(int n, std::uint32_t modulus) {
  if (n < kMinDegree || n > kMaxDegree)
    throw Error(Errc::kUnsupportedN,
                "extension degree " + std::to_string(n) + " outside [2, 24]");
  if (gf2poly::degree(modulus) != n)
    throw Error(Errc::kDegreeMismatch,
                "modulus has degree " +
                    std::to_string(gf2poly::degree(modulus)) + ", expected " +
                    std::to_string(n));
  if (!gf2poly::is_irreducible(modulus))
    throw Error(Errc::kReduciblePoly, "modulus polynomial factors over GF(2)");
  n_ = n;
  q_ = std::uint64_t(1) << n;
  modulus_ = modulus;
  order_prime_factors_ = prime_factors(q_ - 1);
  init_generator();
  if (n_ <= kTableDegreeLimit) init_tables();
  init_trace_and_dual();
}

Elem Field::mul_generic(Elem a, Elem b) const {
  std::uint64_t acc = 0;
  std::uint64_t x = a;
  for (std::uint32_t bb = b; bb; bb >>= 1, x <<= 1)
    if (bb & 1) acc ^= x;
  int d;
  while ((d = gf2poly::degree(acc)) >= n_)
    acc ^= std::uint64_t(modulus_) << (d - n_);
  return static_cast<Elem>(acc);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::kDivideByZero, "inverse of zero");
  if (!log_.empty()) {
    const std::uint32_t g = static_cast<std::uint32_t>(q_ - 1);
    return antilog_[(g - log_[a]) % g];
  }
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  Elem base = a;
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw Error(Errc::kDivideByZero, "log of zero");
  if (!log_.empty()) return log_[a];
  Elem cur = 1;
  for (std::uint64_t k = 0; k < q_ - 1; ++k) {
    if (cur == a) return static_cast<std::uint32_t>(k);
    cur = mul(cur, generator_);
  }
  throw Error(Errc::kInternal, "element not reached by generator powers");
}

bool Field::has_full_order(Elem a) const {
  if (a == 0) return false;
  for (std::uint64_t p : order_prime_factors_)
    if (pow(a, (q_ - 1) / p) == 1) return false;
  return true;
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw Error(Errc::kBadParams, "order of zero undefined");
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t p : order_prime_factors_)
    while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
  return ord;
}

void Field::init_generator() {
  for (Elem c = 2; c < q_; ++c) {
    if (has_full_order(c)) {
      generator_ = c;
      return;
    }
  }
  throw Error(Errc::kInternal, "no multiplicative generator found");
}

void Field::init_tables() {
  log_.assign(q_, 0);
  antilog_.assign(q_ - 1, 0);
  Elem cur = 1;
  for (std::uint64_t k = 0; k < q_ - 1; ++k) {
    antilog_[k] = cur;
    log_[cur] = static_cast<std::uint32_t>(k);
    cur = mul_generic(cur, generator_);
  }
  if (cur != 1) throw Error(Errc::kInternal, "generator order mismatch");
}

void Field::init_trace_and_dual() {
  // Tr(x^k) for k up to 2n-2 drives the trace mask and the Gram matrix
  // G[i][j] = Tr(x^i x^j) of the trace bilinear form.
  std::vector<int> tpow(2 * n_ - 1);
  for (int k = 0; k <= 2 * n_ - 2; ++k) {
    Elem e = pow(2, static_cast<std::uint64_t>(k));
    Elem acc = e;
    Elem cur = e;
    for (int i = 1; i < n_; ++i) {
      cur = mul(cur, cur);
      acc ^= cur;
    }
    if (acc > 1) throw Error(Errc::kInternal, "trace left the prime field");
    tpow[static_cast<std::size_t>(k)] = static_cast<int>(acc);
  }
  trace_mask_ = 0;
  for (int i = 0; i < n_; ++i)
    trace_mask_ |= static_cast<std::uint32_t>(tpow[static_cast<std::size_t>(i)]) << i;

  gram_rows_.assign(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      gram_rows_[static_cast<std::size_t>(i)] |=
          static_cast<std::uint32_t>(tpow[static_cast<std::size_t>(i) +
                                          static_cast<std::size_t>(j)])
          << j;

  // Dual basis coordinates are the columns of G^-1 (Gauss-Jordan over GF(2));
  // G is symmetric so rows serve as columns.
  std::vector<std::uint32_t> a = gram_rows_;
  std::vector<std::uint32_t> inv(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) inv[static_cast<std::size_t>(i)] = 1u << i;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if ((a[static_cast<std::size_t>(r)] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error(Errc::kInternal, "degenerate trace form");
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
    std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
    for (int r = 0; r < n_; ++r) {
      if (r != col && ((a[static_cast<std::size_t>(r)] >> col) & 1u)) {
        a[static_cast<std::size_t>(r)] ^= a[static_cast<std::size_t>(col)];
        inv[static_cast<std::size_t>(r)] ^= inv[static_cast<std::size_t>(col)];
      }
    }
  }
  dual_basis_ = std::move(inv);
}

void Field::check_subfield_degree(int t) const {
  if (t < 1 || n_ % t != 0)
    throw Error(Errc::kBadSubfieldDegree,
                "t=" + std::to_string(t) + " does not divide n=" +
                    std::to_string(n_));
}

Elem Field::trace_to(int t, Elem x) const {
  check_subfield_degree(t);
  Elem acc = 0;
  Elem cur = x;
  for (int i = 0; i < n_ / t; ++i) {
    acc ^= cur;
    for (int j = 0; j < t; ++j) cur = mul(cur, cur);
  }
  return acc;
}

bool Field::in_subfield(int t, Elem x) const {
  check_subfield_degree(t);
  Elem cur = x;
  for (int j = 0; j < t; ++j) cur = mul(cur, cur);
  return cur == x;
}

Elem Field::subfield_generator(int t) const {
  check_subfield_degree(t);
  return pow(generator_, (q_ - 1) / ((std::uint64_t(1) << t) - 1));
}

std::vector<Elem> Field::subfield(int t) const {
  Elem g = subfield_generator(t);
  std::vector<Elem> out;
  out.reserve(std::size_t(1) << t);
  out.push_back(0);
  Elem cur = 1;
  const std::uint64_t m = (std::uint64_t(1) << t) - 1;
  for (std::uint64_t k = 0; k < m; ++k) {
    out.push_back(cur);
    cur = mul(cur, g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> Field::coset_representatives(
    int t, const std::vector<Elem>& set) const {
  check_subfield_degree(t);
  std::vector<bool> in_set(q_, false);
  for (Elem x : set) {
    if (x == 0 || x >= q_)
      throw Error(Errc::kBadParams, "coset set must consist of nonzero field elements");
    in_set[x] = true;
  }
  const Elem g = subfield_generator(t);
  std::vector<bool> seen(q_, false);
  std::vector<Elem> reps;
  for (Elem x = 1; x < q_; ++x) {
    if (!in_set[x] || seen[x]) continue;
    reps.push_back(x);  // ascending scan makes x the coset minimum
    Elem y = x;
    do {
      if (!in_set[y])
        throw Error(Errc::kNotCosetClosed,
                    "element " + std::to_string(x) + " has coset member " +
                        std::to_string(y) + " outside the set");
      seen[y] = true;
      y = mul(y, g);
    } while (y != x);
  }
  return reps;
}

Elem Field::basis(int i) const {
  if (i < 0 || i >= n_) throw Error(Errc::kBadParams, "basis index out of range");
  return Elem(1) << i;
}

Elem Field::dual_basis(int i) const {
  if (i < 0 || i >= n_) throw Error(Errc::kBadParams, "basis index out of range");
  return dual_basis_[static_cast<std::size_t>(i)];
}

std::uint32_t Field::dual_coordinates(Elem y) const {
  std::uint32_t out = 0;
  for (int i = 0; i < n_; ++i)
    out |= static_cast<std::uint32_t>(parity(gram_rows_[static_cast<std::size_t>(i)] & y)) << i;
  return out;
}

SubfieldLabeling::SubfieldLabeling(const Field& field, int t) : t_(t) {
  elements_ = field.subfield(t);
  by_label_.assign(std::size_t(1) << t, 0);
  to_label_.reserve(elements_.size());
  to_label_[0] = 0;
  const Elem g = field.subfield_generator(t);
  const std::uint64_t canon_mod = (t == 1) ? 0x3u : Field::default_modulus(t);
  Elem e = 1;
  std::uint64_t c = 1;
  const std::uint64_t m = (std::uint64_t(1) << t) - 1;
  for (std::uint64_t k = 0; k < m; ++k) {
    by_label_[c] = e;
    to_label_[e] = static_cast<std::uint16_t>(c);
    e = field.mul(e, g);
    c = gf2poly::mulmod(c, 2, canon_mod);
  }
}

std::uint16_t SubfieldLabeling::label(Elem x) const {
  auto it = to_label_.find(x);
  if (it == to_label_.end())
    throw Error(Errc::kAlphaNotInSubfield,
                "element " + std::to_string(x) + " is not in the subfield");
  return it->second;
}

Elem SubfieldLabeling::unlabel(std::uint16_t symbol) const {
  if (symbol >= by_label_.size())
    throw Error(Errc::kBadParams, "symbol out of range");
  return by_label_[symbol];
}

}  // namespace bfcode

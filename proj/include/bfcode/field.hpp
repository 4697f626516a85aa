#ifndef BFCODE_FIELD_HPP_
#define BFCODE_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bfcode {

/// Element of GF(2^n), coordinates in the polynomial basis packed into the
/// low n bits (bit i is the coefficient of x^i).
using Elem = std::uint32_t;

enum class Errc {
  kUnsupportedN,
  kDegreeMismatch,
  kReduciblePoly,
  kDivideByZero,
  kBadSubfieldDegree,
  kNotCosetClosed,
  kBadParams,
  kCoeffFieldViolation,
  kBadShape,
  kAlphaNotInSubfield,
  kNonIntegerMultiplicity,
  kEmptyDefiningSet,
  kHypothesisViolation,
  kProductInvarianceFailed,
  kConditionFailed,
  kParseError,
  kUnknownFamily,
  kInternal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Polynomials over GF(2) packed into integers, bit i = coefficient of x^i.
namespace gf2poly {

int degree(std::uint64_t p);  // -1 for the zero polynomial
std::uint64_t mod(std::uint64_t a, std::uint64_t p);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool is_irreducible(std::uint64_t p);

}  // namespace gf2poly

/// Arithmetic context for GF(2^n), 2 <= n <= 24. Immutable after
/// construction and shareable across threads; every operation is a pure
/// function of (context, inputs).
///
/// Multiplication uses log/antilog tables for n <= 16 and carryless
/// multiply + reduction above that; mul_generic() exposes the carryless
/// path unconditionally so the two backends can be checked against each
/// other.
class Field {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 24;
  static constexpr int kTableDegreeLimit = 16;

  /// Built-in irreducible (in fact primitive) polynomial for each degree.
  /// Fixed so that results are reproducible bit for bit; see README.
  static std::uint32_t default_modulus(int n);

  explicit Field(int n);
  Field(int n, std::uint32_t modulus);

  int degree() const { return n_; }
  std::uint64_t order() const { return q_; }
  std::uint32_t modulus() const { return modulus_; }
  Elem generator() const { return generator_; }
  bool has_log_table() const { return !log_.empty(); }

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const {
    if (!log_.empty()) {
      if (a == 0 || b == 0) return 0;
      std::uint32_t s = log_[a] + log_[b];
      const std::uint32_t g = static_cast<std::uint32_t>(q_ - 1);
      if (s >= g) s -= g;
      return antilog_[s];
    }
    return mul_generic(a, b);
  }
  Elem mul_generic(Elem a, Elem b) const;
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// Discrete log base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;

  std::uint64_t multiplicative_order(Elem a) const;

  /// Absolute trace onto GF(2); returns 0 or 1.
  int trace(Elem x) const { return parity(x & trace_mask_); }

  /// Trace onto the subfield GF(2^t); requires t | n.
  Elem trace_to(int t, Elem x) const;

  bool in_subfield(int t, Elem x) const;

  /// Generator of the embedded GF(2^t)^*, namely generator()^((q-1)/(2^t-1)).
  Elem subfield_generator(int t) const;

  /// The 2^t elements of the embedded subfield, ascending by value.
  std::vector<Elem> subfield(int t) const;

  /// One representative per multiplicative coset x*GF(2^t)^* covering the
  /// given set; representatives are the per-coset minima, ascending.
  /// Throws kNotCosetClosed if the set is not a union of cosets.
  std::vector<Elem> coset_representatives(int t,
                                          const std::vector<Elem>& set) const;

  Elem basis(int i) const;       // x^i
  Elem dual_basis(int i) const;  // trace-dual of the polynomial basis

  /// Coordinates of y in the dual basis: bit i equals Tr(y * x^i).
  /// With u in polynomial coordinates, Tr(u*y) = parity(u & dual_coordinates(y)).
  std::uint32_t dual_coordinates(Elem y) const;

  static int parity(std::uint32_t v) { return __builtin_parity(v); }

  void check_subfield_degree(int t) const;

 private:
  void init_generator();
  void init_tables();
  void init_trace_and_dual();
  bool has_full_order(Elem a) const;

  int n_ = 0;
  std::uint64_t q_ = 0;
  std::uint32_t modulus_ = 0;
  Elem generator_ = 0;
  std::uint32_t trace_mask_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> antilog_;
  std::vector<std::uint64_t> order_prime_factors_;
  std::vector<std::uint32_t> gram_rows_;   // gram_rows_[i] bit j = Tr(x^i x^j)
  std::vector<Elem> dual_basis_;
};

/// Deterministic bijection between an embedded subfield GF(2^t) and the
/// canonical t-bit symbols: 0 -> 0 and g^k -> c^k, where g is
/// subfield_generator(t) and c is the canonical generator (value 2) of
/// GF(2^t) under default_modulus(t). Multiplicative on nonzero elements,
/// which is all the enumerators need: symbol counts are compared per
/// nonzero symbol and those are permuted, never mixed.
class SubfieldLabeling {
 public:
  SubfieldLabeling(const Field& field, int t);

  int t() const { return t_; }
  std::uint32_t alphabet_size() const { return 1u << t_; }
  std::uint16_t label(Elem x) const;
  Elem unlabel(std::uint16_t symbol) const;
  const std::vector<Elem>& elements() const { return elements_; }

 private:
  int t_;
  std::vector<Elem> elements_;
  std::vector<Elem> by_label_;
  std::unordered_map<Elem, std::uint16_t> to_label_;
};

}  // namespace bfcode

#endif  // BFCODE_FIELD_HPP_

#ifndef BFCODE_BOOLFN_HPP_
#define BFCODE_BOOLFN_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bfcode/field.hpp"

namespace bfcode {

/// Structured provenance of a truth table. Constructors that build from a
/// formula record it here; tables of unknown origin stay kRaw.
struct Descriptor {
  enum class Kind { kRaw, kConstant, kMonomial, kQuadratic };
  Kind kind = Kind::kRaw;
  std::uint64_t exponent = 0;           // monomial d
  Elem alpha = 0;                       // monomial coefficient
  int constant_value = 0;               // constant functions
  std::vector<Elem> coeffs;             // quadratic c_1..c_floor(n/2)
  std::string shape;                    // quadratic shape tag, see families
  std::string text() const;
};

/// Boolean function on GF(2^n) held as a full truth table indexed by
/// element value.
class BooleanFunction {
 public:
  BooleanFunction(std::shared_ptr<const Field> field,
                  std::vector<std::uint8_t> table, Descriptor descriptor = {});

  static BooleanFunction constant(std::shared_ptr<const Field> field, int bit);
  /// f(x) = Tr(alpha * x^d), d >= 1 (exponents are reduced mod 2^n - 1
  /// on nonzero inputs, with x^0 avoided: d = q-1 keeps d = q-1).
  static BooleanFunction monomial(std::shared_ptr<const Field> field,
                                  std::uint64_t d, Elem alpha);
  static BooleanFunction from_hex(std::shared_ptr<const Field> field,
                                  const std::string& hex);

  int operator()(Elem x) const { return table_[x]; }
  int at_zero() const { return table_[0]; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::uint64_t domain_size() const { return table_.size(); }
  const std::vector<std::uint8_t>& table() const { return table_; }
  const Descriptor& descriptor() const { return descriptor_; }

  /// Lowercase hex, 2^n bits little-endian by element value: table bit x
  /// is bit (x & 3) of the hex digit at string index x >> 2.
  std::string to_hex() const;

 private:
  std::shared_ptr<const Field> field_;
  std::vector<std::uint8_t> table_;
  Descriptor descriptor_;
};

/// Walsh values with multiplicities.
struct WalshSpectrum {
  std::map<std::int64_t, std::int64_t> entries;
  std::int64_t at_zero = 0;

  std::int64_t multiplicity_sum() const;
  std::int64_t value_count() const { return static_cast<std::int64_t>(entries.size()); }
  /// "[-8]^6 [0]^16 [8]^10"
  std::string to_string() const;

  bool is_bent(int n) const;
  /// Returns A if the value set is exactly {0, A, -A} with A > 0.
  std::optional<std::int64_t> three_valued_amplitude() const;
  bool is_semibent(int n) const;
};

std::int64_t walsh_naive(const BooleanFunction& f, Elem y);

/// All q Walsh values, indexed by y. O(q log q): the +-1 table sits in
/// polynomial-basis coordinate order, a length-q Hadamard transform runs
/// in place, and outputs are read back through the dual-basis coordinates
/// of y, which turns Tr(xy) into a plain dot product.
std::vector<std::int32_t> walsh_full(const BooleanFunction& f);

WalshSpectrum walsh_spectrum(const BooleanFunction& f);

/// True iff f is constant on every multiplicative coset x*GF(2^t)^*.
bool check_coset_invariance(const BooleanFunction& f, int t);

/// Divisors t of n with check_coset_invariance true, ascending.
std::vector<int> admissible_subfields(const BooleanFunction& f);

/// f(x1, x2) = f1(x1) + f2(x2) on GF(2^n1) x GF(2^n2).
class ProductFunction {
 public:
  ProductFunction(BooleanFunction f1, BooleanFunction f2);

  int operator()(Elem x1, Elem x2) const { return f1_(x1) ^ f2_(x2); }
  int at_zero() const { return f1_.at_zero() ^ f2_.at_zero(); }
  const BooleanFunction& factor1() const { return f1_; }
  const BooleanFunction& factor2() const { return f2_; }
  std::uint64_t domain_size() const {
    return f1_.domain_size() * f2_.domain_size();
  }

  std::int64_t walsh_naive(Elem y1, Elem y2) const;
  /// Merged spectrum: every product w1*w2 with multiplicity m1*m2, equal
  /// values combined.
  WalshSpectrum spectrum() const;

 private:
  BooleanFunction f1_, f2_;
};

WalshSpectrum merge_product_spectra(const WalshSpectrum& s1,
                                    const WalshSpectrum& s2);

}  // namespace bfcode

#endif  // BFCODE_BOOLFN_HPP_

#ifndef BFCODE_FAMILIES_HPP_
#define BFCODE_FAMILIES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bfcode/boolfn.hpp"
#include "bfcode/field.hpp"

namespace bfcode {

/// Monomial families f(x) = Tr(alpha * x^d) that are bent when the listed
/// side conditions hold.
enum class BentKind { kGold, kDillon, kKasami, kLeander, kCck };

const char* bent_kind_name(BentKind k);
std::optional<BentKind> bent_kind_from_name(const std::string& name);

struct ConditionReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;

  void add(std::string name, bool pass, std::string detail = "");
  bool all_pass() const;
  std::string to_string() const;
};

/// A family-constructed function together with its evaluated side
/// conditions and the spectrum certification. Certification is computed
/// from the actual Walsh spectrum and is authoritative; the condition
/// items are informational.
struct FamilyFunction {
  BooleanFunction fn;
  std::string family;
  std::uint64_t exponent = 0;
  ConditionReport conditions;
  WalshSpectrum spectrum;
  bool certified_bent = false;
  std::optional<std::int64_t> amplitude;     // A when spectrum is {0, +-A}
  std::int64_t predicted_amplitude = 0;       // table prediction, 0 if n/a
  int epsilon = 0;                            // sign of W(0)/2^(n/2) when bent
};

/// Kloosterman-type sum over the subfield GF(2^m)^* embedded in the
/// context field: sum of (-1)^{tr_m(x^-1 + alpha*x)}. The Dillon condition
/// holds iff the sum equals -1.
std::int64_t dillon_condition(const Field& field, int m, Elem alpha);

/// Bent monomial constructors; h is the table parameter (ignored for
/// Dillon, and required to satisfy n = 4h / 6h for Leander / CCK).
FamilyFunction monomial_bent(std::shared_ptr<const Field> field, BentKind kind,
                             int h, Elem alpha);

/// Three-valued monomial series f(x) = Tr(x^d), series index 1..6.
FamilyFunction semibent_monomial(std::shared_ptr<const Field> field,
                                 int series, int h);

/// 2-adic valuation.
int v2(std::uint64_t b);

/// Structural data for the series-6 arithmetic over GF(2^5) symbols:
/// everything is integer-only so it works far beyond constructible sizes.
struct Series6Conditions {
  std::uint64_t h = 0;
  ConditionReport report;
  bool ok = false;
};
Series6Conditions series6_conditions(std::uint64_t l, std::uint64_t n);

/// The coset-invariance sufficient condition: t | n and (2^t - 1) | d.
bool divisibility_condition(std::uint64_t n, std::uint64_t d, int t);

/// Quadratic functions. For n = 2m the coefficient vector is
/// c_1..c_m where the final term uses the half trace; for odd n it is
/// c_1..c_(n-1)/2 with absolute traces throughout.
BooleanFunction quadratic_function(std::shared_ptr<const Field> field,
                                   const std::vector<Elem>& coeffs);

/// Restricted shape with binary coefficients on the odd exponents plus the
/// half-trace term; n = 2m, m = 2s+1, c_bits has length s.
BooleanFunction quadratic_binary_shape(std::shared_ptr<const Field> field,
                                       const std::vector<int>& c_bits);

/// gcd-based bentness test for quadratic_binary_shape: with
/// c(x) = sum c_l (x^(2l+1) + x^(m-(2l+1))) + x^m, the function is bent
/// iff gcd(c(x), x^m + 1) = 1 over GF(2).
bool quadratic_bent_criterion(int m, const std::vector<int>& c_bits);

ProductFunction product_function(BooleanFunction f1, BooleanFunction f2);

struct ThreeValueMultiplicities {
  std::int64_t m_zero = 0;   // multiplicity of 0
  std::int64_t m_plus = 0;   // multiplicity of +A
  std::int64_t m_minus = 0;  // multiplicity of -A
};

/// Closed-form multiplicities of a {0, +A, -A} spectrum from the power
/// moments; f0_sign is (-1)^f(0), i.e. +1 or -1.
ThreeValueMultiplicities three_value_multiplicities(std::uint64_t q,
                                                    std::int64_t a,
                                                    int f0_sign);

struct FamilyInfo {
  std::string name;
  std::string exponent_formula;
  std::string conditions;
  std::string amplitude;  // semibent series only
};
std::vector<FamilyInfo> list_bent_families();
std::vector<FamilyInfo> list_semibent_series();
std::vector<FamilyInfo> list_quadratic_shapes();

}  // namespace bfcode

#endif  // BFCODE_FAMILIES_HPP_

#ifndef BFCODE_ENUMERATORS_HPP_
#define BFCODE_ENUMERATORS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bfcode/code.hpp"

namespace bfcode {

/// Symbol tallies of a codeword: entry s is the number of coordinates
/// whose label equals s. Vectors compare lexicographically, which is the
/// serialization order.
using Composition = std::vector<std::int64_t>;

Composition composition_of(const std::vector<std::uint16_t>& word, int t);

struct WeightEnumerator {
  std::map<std::uint64_t, std::int64_t> terms;  // weight -> codeword count
  std::uint64_t length = 0;

  bool operator==(const WeightEnumerator&) const = default;
  std::int64_t code_size() const;
  std::int64_t distinct_nonzero_weights() const;
  /// "1 + 10x^6 + 15x^8 + 6x^10"
  std::string to_polynomial_string() const;
};

struct CompleteWeightEnumerator {
  std::map<Composition, std::int64_t> terms;  // composition -> codeword count
  std::uint64_t length = 0;
  int t = 1;

  bool operator==(const CompleteWeightEnumerator&) const = default;
  /// Set x_0 = 1 and x_s = x for every nonzero symbol s.
  WeightEnumerator collapse() const;
};

/// One streaming pass over all codewords of a code.
struct BruteForceOutcome {
  CompleteWeightEnumerator cwe_full;
  WeightEnumerator we_full;
  WeightEnumerator we_reduced;
  bool scaling_ok = true;      // wt(full word) = (2^t - 1) wt(reduced word)
  bool constancy_ok = true;    // equal nonzero-symbol counts per nonzero word
  bool zero_only_from_zero = true;  // only b = 0 yields the zero word
  std::string first_violation;
};

/// Deterministic for every worker count: the codeword index space is split
/// into contiguous ranges and per-range tallies merge in range order.
BruteForceOutcome enumerate_code(const TraceCode& code, int workers = 1);
BruteForceOutcome enumerate_code(const ProductTraceCode& code, int workers = 1);

CompleteWeightEnumerator cwe_bruteforce(const TraceCode& code, int workers = 1);
WeightEnumerator we_bruteforce(const TraceCode& code, bool reduced,
                               int workers = 1);

/// Closed-form enumerators derived from a Walsh spectrum. `terms` carries
/// the per-walsh-value data: how often the value occurs as b sweeps the
/// nonzero inputs, and the full-code composition (zero-symbol count and
/// the shared count of every nonzero symbol).
struct ClosedFormPrediction {
  std::string source;  // "spectrum", "bent", "three-valued", "product"
  std::uint64_t n_tilde = 0;
  std::uint64_t n_reduced = 0;
  int dimension = 0;
  std::int64_t w_at_zero = 0;

  struct Term {
    std::int64_t w = 0;
    std::int64_t count = 0;         // codewords with this walsh value
    std::int64_t zero_symbols = 0;  // zero-symbol coordinates per such word
    std::int64_t each_nonzero = 0;  // coordinates per nonzero symbol
  };
  std::vector<Term> terms;

  bool has_cwe = false;
  CompleteWeightEnumerator cwe_full;
  WeightEnumerator we_full;
  WeightEnumerator we_reduced;
};

ClosedFormPrediction predict_from_spectrum(const WalshSpectrum& spectrum,
                                           int t, int f0);

/// Two-weight specialization for a bent function; epsilon is the sign of
/// the Walsh value at zero. Cross-checked internally against
/// predict_from_spectrum.
ClosedFormPrediction predict_bent(int n, int f0, int epsilon, int t);

/// Three-weight specialization for a {0, +A, -A} spectrum.
ClosedFormPrediction predict_three_valued(std::uint64_t q, std::int64_t a,
                                          int f0, std::int64_t w_at_zero,
                                          int t);

/// Reduced-code weight enumerator for the concatenation of two functions;
/// the merged product spectrum is computed internally.
ClosedFormPrediction predict_product(const WalshSpectrum& s1,
                                     const WalshSpectrum& s2, int t, int f1_0,
                                     int f2_0);

struct CertificationReport {
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  bool ok = true;

  std::uint64_t code_size = 0;
  std::uint64_t n_tilde = 0;
  std::uint64_t n_reduced = 0;
  int dimension = 0;
  std::int64_t w_at_zero = 0;
  double wall_ms = 0.0;
  int workers = 1;

  void add(std::string name, bool pass, std::string detail = "");
  std::string to_text() const;
};

/// Brute force versus the applicable closed forms, exact integer equality
/// throughout.
CertificationReport certify(const TraceCode& code, int workers = 1);
CertificationReport certify(const ProductTraceCode& code, int workers = 1);

/// Compare against an externally supplied prediction (negative controls:
/// a corrupted prediction pinpoints its first mismatching weight).
CertificationReport certify_against(const TraceCode& code,
                                    const ClosedFormPrediction& prediction,
                                    int workers = 1);
CertificationReport certify_against(const ProductTraceCode& code,
                                    const ClosedFormPrediction& prediction,
                                    int workers = 1);

}  // namespace bfcode

#endif  // BFCODE_ENUMERATORS_HPP_

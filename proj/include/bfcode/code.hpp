#ifndef BFCODE_CODE_HPP_
#define BFCODE_CODE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bfcode/boolfn.hpp"
#include "bfcode/families.hpp"
#include "bfcode/field.hpp"

namespace bfcode {

/// Hypotheses that make the trace-code construction and its closed-form
/// enumerators valid for a pair (f, t). A code is constructible iff every
/// item passes.
struct HypothesisReport {
  ConditionReport checks;
  bool ok = false;
  WalshSpectrum spectrum;
  std::int64_t w_at_zero = 0;
  std::string first_failure() const;
};

HypothesisReport validate(const BooleanFunction& f, int t);

/// The defining-set pair (full set of nonzero zeros, coset representatives),
/// both ascending. Needs only t | n and coset invariance, not the
/// enumerator hypotheses.
std::pair<std::vector<Elem>, std::vector<Elem>> defining_sets(
    const BooleanFunction& f, int t);

/// The code pair built from the nonzero zeros of f: coordinates of the
/// full code run over the whole defining set, those of the reduced code
/// over one representative per multiplicative coset of GF(2^t)^*.
/// Codewords are indexed by b in GF(2^n); symbols are canonical t-bit
/// labels. Immutable after build; codeword generation is thread-safe.
class TraceCode {
 public:
  static TraceCode build(BooleanFunction f, int t);

  const BooleanFunction& function() const { return f_; }
  const Field& field() const { return f_.field(); }
  int t() const { return t_; }
  int dimension() const { return field().degree() / t_; }
  std::uint64_t code_size() const { return field().order(); }
  std::uint64_t full_length() const { return defining_full_.size(); }
  std::uint64_t reduced_length() const { return defining_reduced_.size(); }
  const std::vector<Elem>& defining_set_full() const { return defining_full_; }
  const std::vector<Elem>& defining_set_reduced() const { return defining_reduced_; }
  const HypothesisReport& report() const { return report_; }
  std::int64_t w_at_zero() const { return report_.w_at_zero; }
  const SubfieldLabeling& labeling() const { return labeling_; }

  void codeword_full(Elem b, std::vector<std::uint16_t>& out) const;
  void codeword_reduced(Elem b, std::vector<std::uint16_t>& out) const;

 private:
  TraceCode(BooleanFunction f, int t, HypothesisReport report);

  BooleanFunction f_;
  int t_;
  HypothesisReport report_;
  SubfieldLabeling labeling_;
  std::vector<Elem> defining_full_;
  std::vector<Elem> defining_reduced_;
  std::vector<std::uint16_t> label_of_trace_;  // x -> label(Tr_t^n(x))
};

/// Report for the product construction over GF(2^n1) x GF(2^n2).
struct ProductHypothesisReport {
  ConditionReport checks;
  bool ok = false;
  WalshSpectrum merged_spectrum;
  std::int64_t omega_at_zero = 0;
  std::string first_failure() const;
};

ProductHypothesisReport validate_product(const ProductFunction& f, int t);

/// Code from f(x1,x2) = f1(x1) + f2(x2): the defining set collects the
/// nonzero zeros of f in the product space, coset-reduced under the
/// diagonal GF(2^t)^* action. Codewords are indexed by pairs b = (b1, b2),
/// enumerated lexicographically (ordinal b1 * q2 + b2).
class ProductTraceCode {
 public:
  static ProductTraceCode build(ProductFunction f, int t);
  static ProductTraceCode build(BooleanFunction f1, BooleanFunction f2, int t);

  const ProductFunction& function() const { return f_; }
  int t() const { return t_; }
  int dimension() const;
  std::uint64_t code_size() const { return f_.domain_size(); }
  std::uint64_t full_length() const { return defining_full_.size(); }
  std::uint64_t reduced_length() const { return defining_reduced_.size(); }
  const std::vector<std::pair<Elem, Elem>>& defining_set_full() const { return defining_full_; }
  const std::vector<std::pair<Elem, Elem>>& defining_set_reduced() const { return defining_reduced_; }
  const ProductHypothesisReport& report() const { return report_; }
  std::int64_t omega_at_zero() const { return report_.omega_at_zero; }

  void codeword_full(std::uint64_t b_ordinal, std::vector<std::uint16_t>& out) const;
  void codeword_reduced(std::uint64_t b_ordinal, std::vector<std::uint16_t>& out) const;

 private:
  ProductTraceCode(ProductFunction f, int t, ProductHypothesisReport report);
  void fill(const std::vector<std::pair<Elem, Elem>>& coords, Elem b1, Elem b2,
            std::vector<std::uint16_t>& out) const;

  ProductFunction f_;
  int t_;
  ProductHypothesisReport report_;
  std::vector<std::pair<Elem, Elem>> defining_full_;
  std::vector<std::pair<Elem, Elem>> defining_reduced_;
  std::vector<std::uint16_t> label_of_trace1_, label_of_trace2_;
};

}  // namespace bfcode

#endif  // BFCODE_CODE_HPP_

#ifndef BFCODE_DESCRIPTOR_HPP_
#define BFCODE_DESCRIPTOR_HPP_

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bfcode/enumerators.hpp"

namespace bfcode {

/// Hex convention used everywhere: minimal lowercase digits, no prefix.
std::string to_hex(std::uint64_t v);
/// Strict parse; reports the position of the first offending character.
std::uint64_t parse_hex(const std::string& s);

/// A parsed function descriptor document. Kinds and their fields:
///   monomial  {n, d, alpha_hex}
///   raw       {n, truth_table_hex}
///   quadratic {n, shape, coeffs_hex[], lambda (single_half only)}
///   family    {n, name, params{h?, alpha_hex?}}
///   product   {f1, f2}
/// Every single-field kind accepts an optional poly_hex override. Unknown
/// fields are rejected.
struct FunctionDescriptor {
  std::string kind;
  int n = 0;
  std::optional<std::uint32_t> poly;

  std::uint64_t d = 0;
  Elem alpha = 0;

  std::string truth_table_hex;

  std::string shape;
  std::vector<Elem> coeffs;
  int lambda = -1;

  std::string family_name;
  std::optional<int> h;
  std::optional<Elem> family_alpha;

  std::shared_ptr<FunctionDescriptor> f1, f2;
};

FunctionDescriptor parse_descriptor(const nlohmann::json& doc);
FunctionDescriptor parse_descriptor_text(const std::string& text);
nlohmann::json serialize_descriptor(const FunctionDescriptor& d);

/// The function a descriptor denotes, plus the family condition report
/// when the descriptor named a family.
struct BuiltFunction {
  std::variant<BooleanFunction, ProductFunction> fn;
  std::optional<FamilyFunction> family;

  bool is_product() const { return std::holds_alternative<ProductFunction>(fn); }
  const BooleanFunction& single() const { return std::get<BooleanFunction>(fn); }
  const ProductFunction& product() const { return std::get<ProductFunction>(fn); }
};

BuiltFunction build_function(const FunctionDescriptor& d);

/// Report documents (deterministic: object keys serialize sorted and all
/// arrays are emitted in a fixed order).
nlohmann::json spectrum_document(const FunctionDescriptor& d,
                                 const BuiltFunction& built);
nlohmann::json enumerator_document(const WeightEnumerator& we,
                                   const CompleteWeightEnumerator* cwe,
                                   int dimension, const std::string& provenance);
nlohmann::json condition_report_document(const ConditionReport& rep);
nlohmann::json certification_document(const CertificationReport& rep,
                                      bool with_timing);

std::string spectrum_to_text(const WalshSpectrum& s);

}  // namespace bfcode

#endif  // BFCODE_DESCRIPTOR_HPP_

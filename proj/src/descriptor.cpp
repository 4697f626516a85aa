#include "bfcode/descriptor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bfcode {

using nlohmann::json;

std::string to_hex(std::uint64_t v) {
  static const char* kDigits = "0123456789abcdef";
  if (v == 0) return "0";
  std::string out;
  while (v) {
    out.push_back(kDigits[v & 0xf]);
    v >>= 4;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t parse_hex(const std::string& s) {
  if (s.empty()) throw Error(Errc::kParseError, "empty hex string");
  if (s.size() > 16) throw Error(Errc::kParseError, "hex string too long");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else
      throw Error(Errc::kParseError,
                  "invalid hex digit '" + std::string(1, c) + "' at position " +
                      std::to_string(i));
    v = (v << 4) | static_cast<std::uint64_t>(digit);
  }
  return v;
}

namespace {

void require_keys(const json& doc, const std::set<std::string>& required,
                  const std::set<std::string>& optional) {
  if (!doc.is_object()) throw Error(Errc::kParseError, "descriptor must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (!required.count(key) && !optional.count(key))
      throw Error(Errc::kParseError, "unknown field \"" + key + "\"");
  }
  for (const auto& key : required) {
    if (!doc.count(key))
      throw Error(Errc::kParseError, "missing field \"" + key + "\"");
  }
}

int get_int(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer())
    throw Error(Errc::kParseError, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string get_str(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_string())
    throw Error(Errc::kParseError, std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Elem hex_elem(const std::string& s) {
  const std::uint64_t v = parse_hex(s);
  if (v > 0xffffffu)
    throw Error(Errc::kParseError, "field element out of range: " + s);
  return static_cast<Elem>(v);
}

void parse_poly(const json& doc, FunctionDescriptor& out) {
  if (doc.count("poly_hex")) {
    const std::uint64_t v = parse_hex(get_str(doc, "poly_hex"));
    if (v > 0x1ffffffu)
      throw Error(Errc::kParseError, "poly_hex out of range");
    out.poly = static_cast<std::uint32_t>(v);
  }
}

}  // namespace

FunctionDescriptor parse_descriptor(const json& doc) {
  FunctionDescriptor out;
  if (!doc.is_object() || !doc.count("kind"))
    throw Error(Errc::kParseError, "descriptor needs a \"kind\" field");
  out.kind = get_str(doc, "kind");

  if (out.kind == "monomial") {
    require_keys(doc, {"kind", "n", "d", "alpha_hex"}, {"poly_hex"});
    out.n = get_int(doc, "n");
    const auto& dv = doc.at("d");
    if (!dv.is_number_integer() || dv.get<std::int64_t>() < 1)
      throw Error(Errc::kParseError, "field \"d\" must be a positive integer");
    out.d = dv.get<std::uint64_t>();
    out.alpha = hex_elem(get_str(doc, "alpha_hex"));
    parse_poly(doc, out);
  } else if (out.kind == "raw") {
    require_keys(doc, {"kind", "n", "truth_table_hex"}, {"poly_hex"});
    out.n = get_int(doc, "n");
    out.truth_table_hex = get_str(doc, "truth_table_hex");
    parse_poly(doc, out);
  } else if (out.kind == "quadratic") {
    require_keys(doc, {"kind", "n", "shape", "coeffs_hex"}, {"poly_hex", "lambda"});
    out.n = get_int(doc, "n");
    out.shape = get_str(doc, "shape");
    const auto& arr = doc.at("coeffs_hex");
    if (!arr.is_array())
      throw Error(Errc::kParseError, "field \"coeffs_hex\" must be an array");
    for (const auto& c : arr) {
      if (!c.is_string())
        throw Error(Errc::kParseError, "coefficients must be hex strings");
      out.coeffs.push_back(hex_elem(c.get<std::string>()));
    }
    if (doc.count("lambda")) {
      if (out.shape != "single_half")
        throw Error(Errc::kParseError, "\"lambda\" only applies to shape single_half");
      out.lambda = get_int(doc, "lambda");
    }
    if (out.shape == "single_half" && out.lambda < 0)
      throw Error(Errc::kParseError, "shape single_half needs \"lambda\"");
    parse_poly(doc, out);
  } else if (out.kind == "family") {
    require_keys(doc, {"kind", "n", "name", "params"}, {"poly_hex"});
    out.n = get_int(doc, "n");
    out.family_name = get_str(doc, "name");
    const auto& params = doc.at("params");
    require_keys(params, {}, {"h", "alpha_hex"});
    if (params.count("h")) out.h = get_int(params, "h");
    if (params.count("alpha_hex"))
      out.family_alpha = hex_elem(get_str(params, "alpha_hex"));
    parse_poly(doc, out);
  } else if (out.kind == "product") {
    require_keys(doc, {"kind", "f1", "f2"}, {});
    out.f1 = std::make_shared<FunctionDescriptor>(parse_descriptor(doc.at("f1")));
    out.f2 = std::make_shared<FunctionDescriptor>(parse_descriptor(doc.at("f2")));
    if (out.f1->kind == "product" || out.f2->kind == "product")
      throw Error(Errc::kParseError, "nested products are not supported");
  } else {
    throw Error(Errc::kParseError, "unknown kind \"" + out.kind + "\"");
  }
  return out;
}

FunctionDescriptor parse_descriptor_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::kParseError, e.what());
  }
  return parse_descriptor(doc);
}

json serialize_descriptor(const FunctionDescriptor& d) {
  json doc;
  doc["kind"] = d.kind;
  if (d.kind == "product") {
    doc["f1"] = serialize_descriptor(*d.f1);
    doc["f2"] = serialize_descriptor(*d.f2);
    return doc;
  }
  doc["n"] = d.n;
  if (d.poly) doc["poly_hex"] = to_hex(*d.poly);
  if (d.kind == "monomial") {
    doc["d"] = d.d;
    doc["alpha_hex"] = to_hex(d.alpha);
  } else if (d.kind == "raw") {
    doc["truth_table_hex"] = d.truth_table_hex;
  } else if (d.kind == "quadratic") {
    doc["shape"] = d.shape;
    json arr = json::array();
    for (Elem c : d.coeffs) arr.push_back(to_hex(c));
    doc["coeffs_hex"] = arr;
    if (d.lambda >= 0) doc["lambda"] = d.lambda;
  } else if (d.kind == "family") {
    doc["name"] = d.family_name;
    json params = json::object();
    if (d.h) params["h"] = *d.h;
    if (d.family_alpha) params["alpha_hex"] = to_hex(*d.family_alpha);
    doc["params"] = params;
  }
  return doc;
}

namespace {

std::shared_ptr<const Field> make_field_for(const FunctionDescriptor& d) {
  if (d.poly) return std::make_shared<Field>(d.n, *d.poly);
  return std::make_shared<Field>(d.n);
}

BooleanFunction build_quadratic(const FunctionDescriptor& d,
                                std::shared_ptr<const Field> field) {
  const int n = field->degree();
  const int m = n / 2;
  if (d.shape == "general") return quadratic_function(field, d.coeffs);
  if (n % 2 != 0)
    throw Error(Errc::kBadShape, "shape " + d.shape + " needs n = 2m");
  if (d.shape == "odd") {
    std::vector<Elem> coeffs(static_cast<std::size_t>(m), 0);
    const int slots = m / 2;  // odd exponents 1, 3, ..., below m
    if (static_cast<int>(d.coeffs.size()) != slots)
      throw Error(Errc::kBadShape,
                  "shape odd needs " + std::to_string(slots) + " coefficients");
    for (int lambda = 0; lambda < slots; ++lambda)
      coeffs[2 * static_cast<std::size_t>(lambda)] = d.coeffs[static_cast<std::size_t>(lambda)];
    return quadratic_function(std::move(field), coeffs);
  }
  if (m % 2 != 1)
    throw Error(Errc::kBadShape, "shape " + d.shape + " needs odd m");
  const int s = (m - 1) / 2;
  if (d.shape == "odd_half") {
    if (static_cast<int>(d.coeffs.size()) != s + 1)
      throw Error(Errc::kBadShape, "shape odd_half needs " +
                                       std::to_string(s + 1) + " coefficients");
    std::vector<Elem> coeffs(static_cast<std::size_t>(m), 0);
    for (int lambda = 0; lambda < s; ++lambda)
      coeffs[2 * static_cast<std::size_t>(lambda)] = d.coeffs[static_cast<std::size_t>(lambda)];
    coeffs[static_cast<std::size_t>(m - 1)] = d.coeffs[static_cast<std::size_t>(s)];
    return quadratic_function(std::move(field), coeffs);
  }
  if (d.shape == "binary_half") {
    std::vector<int> bits;
    for (Elem c : d.coeffs) bits.push_back(static_cast<int>(c));
    return quadratic_binary_shape(std::move(field), bits);
  }
  if (d.shape == "single_half") {
    if (!d.coeffs.empty())
      throw Error(Errc::kBadShape, "shape single_half takes no coefficients");
    if (d.lambda < 0 || d.lambda >= s)
      throw Error(Errc::kBadShape, "lambda must lie in [0, " +
                                       std::to_string(s - 1) + "]");
    std::vector<int> bits(static_cast<std::size_t>(s), 0);
    bits[static_cast<std::size_t>(d.lambda)] = 1;
    return quadratic_binary_shape(std::move(field), bits);
  }
  throw Error(Errc::kBadShape, "unknown quadratic shape \"" + d.shape + "\"");
}

FamilyFunction build_family(const FunctionDescriptor& d,
                            std::shared_ptr<const Field> field) {
  if (auto kind = bent_kind_from_name(d.family_name)) {
    if (!d.family_alpha)
      throw Error(Errc::kParseError,
                  "family " + d.family_name + " needs params.alpha_hex");
    int h = d.h.value_or(0);
    if (!d.h) {
      if (*kind == BentKind::kLeander) h = field->degree() / 4;
      else if (*kind == BentKind::kCck) h = field->degree() / 6;
      else if (*kind == BentKind::kDillon) h = 0;
      else
        throw Error(Errc::kParseError,
                    "family " + d.family_name + " needs params.h");
    }
    return monomial_bent(std::move(field), *kind, h, *d.family_alpha);
  }
  if (d.family_name.rfind("series", 0) == 0 && d.family_name.size() == 7) {
    const int series = d.family_name[6] - '0';
    if (series >= 1 && series <= 6) {
      if ((series <= 2 || series == 6) && !d.h)
        throw Error(Errc::kParseError,
                    "family " + d.family_name + " needs params.h");
      return semibent_monomial(std::move(field), series, d.h.value_or(0));
    }
  }
  throw Error(Errc::kUnknownFamily, "unknown family \"" + d.family_name + "\"");
}

}  // namespace

BuiltFunction build_function(const FunctionDescriptor& d) {
  if (d.kind == "product") {
    BuiltFunction a = build_function(*d.f1);
    BuiltFunction b = build_function(*d.f2);
    return BuiltFunction{
        ProductFunction(std::move(std::get<BooleanFunction>(a.fn)),
                        std::move(std::get<BooleanFunction>(b.fn))),
        std::nullopt};
  }
  auto field = make_field_for(d);
  if (d.kind == "monomial")
    return BuiltFunction{BooleanFunction::monomial(std::move(field), d.d, d.alpha),
                         std::nullopt};
  if (d.kind == "raw")
    return BuiltFunction{
        BooleanFunction::from_hex(std::move(field), d.truth_table_hex),
        std::nullopt};
  if (d.kind == "quadratic")
    return BuiltFunction{build_quadratic(d, std::move(field)), std::nullopt};
  if (d.kind == "family") {
    FamilyFunction fam = build_family(d, std::move(field));
    BooleanFunction fn = fam.fn;
    return BuiltFunction{std::move(fn), std::move(fam)};
  }
  throw Error(Errc::kParseError, "unknown kind \"" + d.kind + "\"");
}

std::string spectrum_to_text(const WalshSpectrum& s) { return s.to_string(); }

json condition_report_document(const ConditionReport& rep) {
  json arr = json::array();
  for (const auto& item : rep.items) {
    json one;
    one["name"] = item.name;
    one["pass"] = item.pass;
    if (!item.detail.empty()) one["detail"] = item.detail;
    arr.push_back(one);
  }
  return arr;
}

json spectrum_document(const FunctionDescriptor& d, const BuiltFunction& built) {
  json doc;
  doc["descriptor"] = serialize_descriptor(d);
  WalshSpectrum s;
  if (built.is_product()) {
    const ProductFunction& f = built.product();
    s = f.spectrum();
    doc["n"] = json::array({f.factor1().field().degree(),
                            f.factor2().field().degree()});
    json t_list = json::array();
    const int g = std::gcd(f.factor1().field().degree(),
                           f.factor2().field().degree());
    for (int t = 1; t <= g; ++t)
      if (g % t == 0 && check_coset_invariance(f.factor1(), t) &&
          check_coset_invariance(f.factor2(), t))
        t_list.push_back(t);
    doc["admissible_t"] = t_list;
  } else {
    const BooleanFunction& f = built.single();
    s = walsh_spectrum(f);
    doc["n"] = f.field().degree();
    doc["poly_hex"] = to_hex(f.field().modulus());
    json t_list = json::array();
    for (int t : admissible_subfields(f)) t_list.push_back(t);
    doc["admissible_t"] = t_list;
    const int n = f.field().degree();
    std::string cls = "general";
    if (s.is_bent(n)) cls = "bent";
    else if (s.is_semibent(n)) cls = "semibent";
    else if (s.three_valued_amplitude()) cls = "three-valued";
    doc["classification"] = cls;
  }
  json spec = json::array();
  for (const auto& [w, m] : s.entries) spec.push_back(json::array({w, m}));
  doc["spectrum"] = spec;
  doc["spectrum_text"] = s.to_string();
  doc["w_at_zero"] = s.at_zero;
  if (built.family) {
    doc["family"] = built.family->family;
    doc["exponent"] = built.family->exponent;
    doc["conditions"] = condition_report_document(built.family->conditions);
  }
  return doc;
}

json enumerator_document(const WeightEnumerator& we,
                         const CompleteWeightEnumerator* cwe, int dimension,
                         const std::string& provenance) {
  json doc;
  doc["length"] = we.length;
  doc["dimension"] = dimension;
  json weights = json::array();
  for (const auto& [w, c] : we.terms) {
    json one;
    one["w"] = w;
    one["count"] = c;
    weights.push_back(one);
  }
  doc["weights"] = weights;
  doc["polynomial"] = we.to_polynomial_string();
  if (cwe) {
    json terms = json::array();
    for (const auto& [comp, mult] : cwe->terms) {
      json one;
      json composition = json::object();
      for (std::size_t sym = 0; sym < comp.size(); ++sym) {
        if (comp[sym] != 0)
          composition[to_hex(sym)] = comp[sym];
      }
      one["composition"] = composition;
      one["mult"] = mult;
      terms.push_back(one);
    }
    doc["cwe"] = terms;
  }
  doc["provenance"] = provenance;
  return doc;
}

json certification_document(const CertificationReport& rep, bool with_timing) {
  json doc;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json one;
    one["name"] = c.name;
    one["pass"] = c.pass;
    if (!c.detail.empty()) one["detail"] = c.detail;
    checks.push_back(one);
  }
  doc["checks"] = checks;
  doc["overall"] = rep.ok;
  doc["code_size"] = rep.code_size;
  doc["length_full"] = rep.n_tilde;
  doc["length_reduced"] = rep.n_reduced;
  doc["dimension"] = rep.dimension;
  if (with_timing) {
    doc["timing"] = {{"wall_ms", rep.wall_ms}, {"workers", rep.workers}};
  }
  return doc;
}

}  // namespace bfcode

#include <doctest.h>

#include "bfcode/descriptor.hpp"

using namespace bfcode;
using nlohmann::json;

TEST_CASE("hex helpers") {
  CHECK(to_hex(0) == "0");
  CHECK(to_hex(255) == "ff");
  CHECK(to_hex(0x1a2b) == "1a2b");
  CHECK(parse_hex("0") == 0);
  CHECK(parse_hex("ff") == 255);
  try {
    parse_hex("1G2");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kParseError);
    CHECK(std::string(e.what()).find("position 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_hex(""), Error);
  CHECK_THROWS_AS(parse_hex("FF"), Error);  // lowercase only
}

TEST_CASE("descriptor round trips losslessly") {
  const std::vector<std::string> samples = {
      R"({"kind":"monomial","n":5,"d":3,"alpha_hex":"1"})",
      R"({"kind":"monomial","n":4,"d":3,"alpha_hex":"6","poly_hex":"13"})",
      R"({"kind":"raw","n":4,"truth_table_hex":"06a9"})",
      R"({"kind":"quadratic","n":10,"shape":"single_half","coeffs_hex":[],"lambda":0})",
      R"({"kind":"quadratic","n":6,"shape":"general","coeffs_hex":["2","0","1"]})",
      R"({"kind":"family","n":4,"name":"dillon","params":{"alpha_hex":"6"}})",
      R"({"kind":"family","n":6,"name":"gold","params":{"alpha_hex":"2","h":1}})",
      R"({"kind":"product","f1":{"kind":"monomial","n":4,"d":3,"alpha_hex":"2"},"f2":{"kind":"monomial","n":2,"d":1,"alpha_hex":"1"}})",
  };
  for (const auto& text : samples) {
    const auto d1 = parse_descriptor_text(text);
    const json j1 = serialize_descriptor(d1);
    const auto d2 = parse_descriptor(j1);
    const json j2 = serialize_descriptor(d2);
    CHECK(j1 == j2);
    CHECK(j1 == json::parse(text));
  }
}

TEST_CASE("descriptor rejects malformed documents") {
  // unknown field
  CHECK_THROWS_AS(
      parse_descriptor_text(R"({"kind":"monomial","n":5,"d":3,"alpha_hex":"1","extra":1})"),
      Error);
  // missing field
  CHECK_THROWS_AS(parse_descriptor_text(R"({"kind":"monomial","n":5,"d":3})"), Error);
  // unknown kind
  CHECK_THROWS_AS(parse_descriptor_text(R"({"kind":"affine","n":5})"), Error);
  // nested product
  CHECK_THROWS_AS(parse_descriptor_text(
                      R"({"kind":"product","f1":{"kind":"product","f1":{"kind":"raw","n":2,"truth_table_hex":"a"},"f2":{"kind":"raw","n":2,"truth_table_hex":"a"}},"f2":{"kind":"raw","n":2,"truth_table_hex":"a"}})"),
                  Error);
  // malformed json text
  CHECK_THROWS_AS(parse_descriptor_text("{"), Error);
  // bad hex in alpha
  try {
    parse_descriptor_text(R"({"kind":"monomial","n":5,"d":3,"alpha_hex":"0x"})");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kParseError);
    CHECK(std::string(e.what()).find("position 1") != std::string::npos);
  }
  // lambda on the wrong shape
  CHECK_THROWS_AS(
      parse_descriptor_text(R"({"kind":"quadratic","n":10,"shape":"general","coeffs_hex":[],"lambda":1})"),
      Error);
}

TEST_CASE("building functions from descriptors") {
  const auto mono = build_function(
      parse_descriptor_text(R"({"kind":"monomial","n":5,"d":3,"alpha_hex":"1"})"));
  CHECK_FALSE(mono.is_product());
  CHECK(walsh_spectrum(mono.single()).three_valued_amplitude() == 8);

  const auto raw = build_function(parse_descriptor_text(
      R"({"kind":"raw","n":4,"truth_table_hex":")" +
      mono.single().to_hex().substr(0, 4) + R"("})"));
  CHECK(raw.single().domain_size() == 16);

  const auto fam = build_function(parse_descriptor_text(
      R"({"kind":"family","n":4,"name":"dillon","params":{"alpha_hex":"6"}})"));
  REQUIRE(fam.family.has_value());
  CHECK(fam.family->certified_bent);

  const auto quad = build_function(parse_descriptor_text(
      R"({"kind":"quadratic","n":10,"shape":"single_half","coeffs_hex":[],"lambda":0})"));
  CHECK(walsh_spectrum(quad.single()).is_bent(10));

  const auto prod = build_function(parse_descriptor_text(
      R"({"kind":"product","f1":{"kind":"monomial","n":4,"d":3,"alpha_hex":"2"},"f2":{"kind":"monomial","n":2,"d":1,"alpha_hex":"1"}})"));
  CHECK(prod.is_product());

  // unknown family name
  try {
    build_function(parse_descriptor_text(
        R"({"kind":"family","n":4,"name":"nosuch","params":{}})"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kUnknownFamily);
  }
}

TEST_CASE("report documents") {
  const auto desc = parse_descriptor_text(
      R"({"kind":"monomial","n":5,"d":3,"alpha_hex":"1"})");
  const auto built = build_function(desc);
  const json doc = spectrum_document(desc, built);
  CHECK(doc.at("w_at_zero") == 0);
  CHECK(doc.at("classification") == "semibent");
  CHECK(doc.at("admissible_t") == json::array({1}));
  CHECK(doc.at("spectrum_text") == "[-8]^6 [0]^16 [8]^10");

  const auto code = TraceCode::build(built.single(), 1);
  const auto outcome = enumerate_code(code);
  const json enums = enumerator_document(outcome.we_reduced, &outcome.cwe_full,
                                         code.dimension(), "bruteforce");
  CHECK(enums.at("length") == 15);
  CHECK(enums.at("dimension") == 5);
  CHECK(enums.at("provenance") == "bruteforce");
  CHECK(enums.at("weights").size() == 4);
  CHECK(enums.count("cwe") == 1);
  CHECK(enums.at("polynomial") == "1 + 10x^6 + 15x^8 + 6x^10");

  const auto rep = certify(code);
  const json cert = certification_document(rep, /*with_timing=*/false);
  CHECK(cert.at("overall") == true);
  CHECK(cert.count("timing") == 0);
}

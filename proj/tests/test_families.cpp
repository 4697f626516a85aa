#include <doctest.h>

#include <memory>

#include "bfcode/families.hpp"

using namespace bfcode;

namespace {
std::shared_ptr<const Field> field(int n) { return std::make_shared<Field>(n); }
}

TEST_CASE("kloosterman-type sum") {
  Field f(4);
  const Elem omega = f.subfield_generator(2);
  CHECK(dillon_condition(f, 2, 1) == 3);
  CHECK(dillon_condition(f, 2, omega) == -1);
  CHECK(dillon_condition(f, 2, f.mul(omega, omega)) == -1);
  // sum over 2^m - 1 terms has that parity
  Field g(6);
  for (Elem a : g.subfield(3)) {
    if (a == 0) continue;
    const std::int64_t s = dillon_condition(g, 3, a);
    CHECK(((s % 2) + 2) % 2 == 1);
  }
  CHECK_THROWS_AS(dillon_condition(f, 2, 0), Error);
  // alpha outside the subfield
  bool threw = false;
  for (Elem x = 2; x < 16; ++x) {
    if (!f.in_subfield(2, x)) {
      try {
        dillon_condition(f, 2, x);
      } catch (const Error& e) {
        threw = e.code() == Errc::kAlphaNotInSubfield;
      }
      break;
    }
  }
  CHECK(threw);
}

TEST_CASE("dillon bent functions on GF(16)") {
  auto f = field(4);
  const Elem omega = f->subfield_generator(2);
  const auto fam = monomial_bent(f, BentKind::kDillon, 0, omega);
  CHECK(fam.exponent == 3);
  CHECK(fam.conditions.all_pass());
  CHECK(fam.certified_bent);
  CHECK(fam.epsilon == 1);
  CHECK(fam.spectrum.entries.at(4) == 10);
  CHECK(fam.spectrum.entries.at(-4) == 6);

  // alpha = 1 fails the sum condition yet the report still certifies honestly
  const auto bad = monomial_bent(f, BentKind::kDillon, 0, 1);
  CHECK_FALSE(bad.conditions.all_pass());
}

TEST_CASE("gold conditions as printed can fail while certification holds") {
  auto f = field(6);
  const auto fam = monomial_bent(f, BentKind::kGold, 1, f->generator());
  // d = 3, alpha outside the cubes: certified bent
  CHECK(fam.certified_bent);
  // but n/gcd(n,h) = 6 is even, so the printed parity row fails
  bool parity_pass = true;
  for (const auto& item : fam.conditions.items)
    if (item.name == "n/gcd(n,h) is odd") parity_pass = item.pass;
  CHECK_FALSE(parity_pass);
}

TEST_CASE("kasami and leander and cck") {
  auto f4 = field(4);
  const auto kas = monomial_bent(f4, BentKind::kKasami, 3, f4->generator());
  CHECK(kas.conditions.all_pass());
  CHECK(kas.certified_bent);

  const auto lea = monomial_bent(f4, BentKind::kLeander, 1, 1);
  CHECK(lea.exponent == 9);
  bool odd_pass = false;
  for (const auto& item : lea.conditions.items)
    if (item.name == "h is odd") odd_pass = item.pass;
  CHECK(odd_pass);

  CHECK_THROWS_AS(monomial_bent(f4, BentKind::kLeander, 2, 1), Error);
  CHECK_THROWS_AS(monomial_bent(f4, BentKind::kCck, 1, 1), Error);  // n != 6h
  CHECK_THROWS_AS(monomial_bent(f4, BentKind::kDillon, 0, 0), Error);  // alpha = 0
  CHECK_THROWS_AS(monomial_bent(field(5), BentKind::kDillon, 0, 1), Error);  // odd n

  auto f6 = field(6);
  // cck alpha in GF(2^3)* with vanishing trace
  Elem alpha = 0;
  for (Elem a : f6->subfield(3)) {
    if (a == 0 || a == 1) continue;
    Elem acc = 0, cur = a;
    for (int i = 0; i < 3; ++i) {
      acc ^= cur;
      cur = f6->mul(cur, cur);
    }
    if (acc == 0) {
      alpha = a;
      break;
    }
  }
  REQUIRE(alpha != 0);
  const auto cck = monomial_bent(f6, BentKind::kCck, 1, alpha);
  CHECK(cck.exponent == 7);
  CHECK(cck.conditions.all_pass());
  CHECK(cck.certified_bent);
}

TEST_CASE("three-valued monomial series") {
  const auto s1 = semibent_monomial(field(5), 1, 1);
  CHECK(s1.exponent == 3);
  CHECK(s1.predicted_amplitude == 8);
  CHECK(s1.conditions.all_pass());
  CHECK(s1.spectrum.entries ==
        std::map<std::int64_t, std::int64_t>{{-8, 6}, {0, 16}, {8, 10}});

  const auto s5 = semibent_monomial(field(5), 5, 0);
  CHECK(s5.exponent == 7);  // 2^m + 3 with m = 2
  CHECK(s5.predicted_amplitude == 8);
  CHECK(s5.conditions.all_pass());

  const auto s6 = semibent_monomial(field(5), 6, 1);
  CHECK(s6.exponent == 7);  // 2*3+1
  CHECK(s6.conditions.all_pass());

  CHECK_THROWS_AS(semibent_monomial(field(4), 5, 0), Error);   // needs odd n
  CHECK_THROWS_AS(semibent_monomial(field(6), 6, 1), Error);   // 6 does not divide 5
  CHECK_THROWS_AS(semibent_monomial(field(5), 7, 1), Error);   // unknown series
  CHECK_THROWS_AS(semibent_monomial(field(2), 6, 20), Error);  // d out of range
}

TEST_CASE("2-adic valuation") {
  CHECK(v2(12) == 2);
  CHECK(v2(1) == 0);
  CHECK(v2(64) == 6);
  CHECK_THROWS_AS(v2(0), Error);
}

TEST_CASE("series6 integer conditions") {
  const auto ok = series6_conditions(0, 85);
  CHECK(ok.h == 21);
  CHECK(ok.ok);

  CHECK_FALSE(series6_conditions(0, 5).ok);    // 2*3^21 + 1 > 2^5 - 1
  CHECK_FALSE(series6_conditions(0, 10).ok);   // 10 does not divide 85
  CHECK_FALSE(series6_conditions(0, 17).ok);   // 5 does not divide 17
  CHECK(series6_conditions(1, 205).ok);        // h = 51, n = 205 | 205
  CHECK(series6_conditions(2, 5 * 65).ok == ((120 * 2 + 85) % 325 == 0));
}

TEST_CASE("divisibility condition implies invariance for monomials") {
  CHECK(divisibility_condition(4, 3, 2));
  CHECK_FALSE(divisibility_condition(4, 2, 2));
  CHECK_FALSE(divisibility_condition(5, 3, 2));
  for (int n : {4, 6}) {
    auto f = field(n);
    for (int t = 1; t <= n; ++t) {
      if (n % t != 0) continue;
      for (std::uint64_t d = 1; d < f->order() - 1; ++d) {
        if (!divisibility_condition(static_cast<std::uint64_t>(n), d, t)) continue;
        const auto fn = BooleanFunction::monomial(f, d, f->generator());
        CHECK(check_coset_invariance(fn, t));
      }
    }
  }
}

TEST_CASE("subfield divisibility consequences for the named exponents") {
  // GF(4) codes (t = 2) need 3 | d: that is h odd for the gold and kasami
  // exponents, h even for cck, m even for dillon, and always for leander
  for (std::uint64_t h = 1; h <= 10; ++h) {
    const std::uint64_t gold = (std::uint64_t(1) << h) + 1;
    const std::uint64_t kasami = (std::uint64_t(1) << (2 * h)) - (std::uint64_t(1) << h) + 1;
    const std::uint64_t cck = (std::uint64_t(1) << (2 * h)) + (std::uint64_t(1) << h) + 1;
    CHECK((gold % 3 == 0) == (h % 2 == 1));
    CHECK((kasami % 3 == 0) == (h % 2 == 1));
    CHECK((cck % 3 == 0) == (h % 2 == 0));
    const std::uint64_t leander = ((std::uint64_t(1) << h) + 1) * ((std::uint64_t(1) << h) + 1);
    CHECK((leander % 3 == 0) == (h % 2 == 1));  // square of the gold exponent
  }
  for (std::uint64_t m = 2; m <= 12; ++m) {
    const std::uint64_t dillon = (std::uint64_t(1) << m) - 1;
    CHECK((dillon % 3 == 0) == (m % 2 == 0));
    // every divisor t of m embeds GF(2^t)* into the dillon exponent
    for (int t = 1; t <= static_cast<int>(m); ++t)
      if (m % static_cast<std::uint64_t>(t) == 0)
        CHECK(divisibility_condition(2 * m, dillon, t));
  }
  // GF(32) symbols: 31 | 2^m - 1 whenever 5 | m, and 31 | 2*3^h + 1 at
  // h = 30l + 21
  CHECK(divisibility_condition(20, (std::uint64_t(1) << 10) - 1, 5));
  std::uint64_t p = 1;
  for (int i = 0; i < 21; ++i) p *= 3;
  CHECK((2 * p + 1) % 31 == 0);
}

TEST_CASE("quadratic functions") {
  auto f4 = field(4);
  const auto zero = quadratic_function(f4, {0, 0});
  for (Elem x = 0; x < 16; ++x) CHECK(zero(x) == 0);

  // the half-trace coefficient must lie in GF(2^m)
  Elem outside = 0;
  for (Elem x = 2; x < 16; ++x)
    if (!f4->in_subfield(2, x)) {
      outside = x;
      break;
    }
  CHECK_THROWS_AS(quadratic_function(f4, {0, outside}), Error);
  try {
    quadratic_function(f4, {0, outside});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kCoeffFieldViolation);
  }
  CHECK_THROWS_AS(quadratic_function(f4, {1}), Error);  // wrong count

  // direct evaluation agrees with the formula: Tr(c1 x^3) + Tr_1^2(x^5)
  const auto g = quadratic_function(f4, {f4->generator(), 1});
  for (Elem x = 0; x < 16; ++x) {
    const Elem t1 = f4->mul(f4->generator(), f4->mul(x, f4->pow(x, 2)));
    const Elem z = f4->mul(x, f4->pow(x, 4));  // x^(1+2^m) lies in GF(4)
    const Elem half_trace = f4->add(z, f4->mul(z, z));  // z + z^2
    REQUIRE(half_trace <= 1);
    const int expect = f4->trace(t1) ^ static_cast<int>(half_trace);
    CHECK(g(x) == expect);
  }
}

TEST_CASE("restricted quadratic shapes and the gcd criterion") {
  // n = 10, m = 5, single term lambda = 0: bent iff gcd(3, 5) = 1
  auto f10 = field(10);
  const auto bent = quadratic_binary_shape(f10, {1, 0});
  CHECK(bent.descriptor().shape == "single_half");
  CHECK(walsh_spectrum(bent).is_bent(10));
  CHECK(quadratic_bent_criterion(5, {1, 0}));

  // n = 6, m = 3, single lambda = 0: gcd(3, 3) = 3, not bent
  auto f6 = field(6);
  const auto notbent = quadratic_binary_shape(f6, {1});
  CHECK_FALSE(walsh_spectrum(notbent).is_bent(6));
  CHECK_FALSE(quadratic_bent_criterion(3, {1}));

  // n = 6, zero bits: only the half-trace term, which is bent
  const auto half_only = quadratic_binary_shape(f6, {0});
  CHECK(walsh_spectrum(half_only).is_bent(6));
  CHECK(quadratic_bent_criterion(3, {0}));

  CHECK_THROWS_AS(quadratic_binary_shape(field(8), {1}), Error);  // m even
  CHECK_THROWS_AS(quadratic_bent_criterion(4, {1}), Error);
  CHECK_THROWS_AS(quadratic_bent_criterion(5, {1}), Error);  // wrong length
}

TEST_CASE("criterion agrees with certification for every vector, m up to 9") {
  for (int m : {3, 5, 7, 9}) {
    const int n = 2 * m;
    const int s = (m - 1) / 2;
    auto f = field(n);
    for (int mask = 0; mask < (1 << s); ++mask) {
      std::vector<int> bits(static_cast<std::size_t>(s));
      for (int i = 0; i < s; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      const auto fn = quadratic_binary_shape(f, bits);
      CHECK(quadratic_bent_criterion(m, bits) == walsh_spectrum(fn).is_bent(n));
    }
  }
}

TEST_CASE("closed-form three-value multiplicities") {
  const auto m = three_value_multiplicities(32, 8, 1);
  CHECK(m.m_zero == 16);
  CHECK(m.m_plus == 10);
  CHECK(m.m_minus == 6);
  CHECK(m.m_zero + m.m_plus + m.m_minus == 32);

  const auto deg = three_value_multiplicities(16, 4, 1);
  CHECK(deg.m_zero == 0);  // amplitude sqrt(q) leaves no zero values

  for (int sign : {1, -1}) {
    const auto v = three_value_multiplicities(128, 16, sign);
    CHECK(v.m_zero + v.m_plus + v.m_minus == 128);
  }
  CHECK_THROWS_AS(three_value_multiplicities(32, 3, 1), Error);
  CHECK_THROWS_AS(three_value_multiplicities(32, 2, 1), Error);
  CHECK_THROWS_AS(three_value_multiplicities(32, 8, 0), Error);
}

TEST_CASE("product spectrum algebra") {
  // two copies of the {0,8,-8} spectrum on GF(32)
  auto f5 = field(5);
  const auto fn = BooleanFunction::monomial(f5, 3, 1);
  const auto s = walsh_spectrum(fn);
  const auto merged = merge_product_spectra(s, s);
  CHECK(merged.entries.at(0) == 16 * 32 + 16 * 16);  // m0*(q) + (m+ + m-)*mu0
  CHECK(merged.entries.at(64) == 10 * 10 + 6 * 6);
  CHECK(merged.entries.at(-64) == 10 * 6 + 6 * 10);
  CHECK(merged.multiplicity_sum() == 1024);
}

TEST_CASE("family listings") {
  CHECK(list_bent_families().size() == 5);
  CHECK(list_semibent_series().size() == 6);
  CHECK(list_quadratic_shapes().size() == 5);
}

#include <doctest.h>

#include <memory>
#include <random>

#include "bfcode/boolfn.hpp"
#include "bfcode/families.hpp"

using namespace bfcode;

namespace {

std::shared_ptr<const Field> field(int n) { return std::make_shared<Field>(n); }

BooleanFunction random_function(std::shared_ptr<const Field> f, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint8_t> table(f->order());
  for (auto& b : table) b = rng() & 1;
  return BooleanFunction(std::move(f), std::move(table));
}

}  // namespace

TEST_CASE("evaluation and construction") {
  auto f4 = field(4);
  const auto zero = BooleanFunction::constant(f4, 0);
  for (Elem x = 0; x < 16; ++x) CHECK(zero(x) == 0);

  const auto mono = BooleanFunction::monomial(field(5), 3, 1);
  CHECK(mono(0) == 0);  // 0^d = 0 and Tr(0) = 0
  const Field& F = mono.field();
  for (Elem x = 0; x < 32; ++x)
    CHECK(mono(x) == F.trace(F.pow(x, 3)));

  CHECK_THROWS_AS(BooleanFunction::monomial(field(4), 0, 1), Error);
  CHECK_THROWS_AS(BooleanFunction::constant(f4, 2), Error);
  // wrong table length
  CHECK_THROWS_AS(BooleanFunction(field(4), std::vector<std::uint8_t>(8, 0)), Error);
}

TEST_CASE("monomial exponent wraps modulo the group order") {
  // x^(d + q - 1) agrees with x^d on nonzero inputs and both vanish at 0
  auto f = field(4);
  const auto a = BooleanFunction::monomial(f, 3, 7);
  const auto b = BooleanFunction::monomial(f, 3 + 15, 7);
  for (Elem x = 0; x < 16; ++x) CHECK(a(x) == b(x));
}

TEST_CASE("truth table hex round trip") {
  auto f = field(6);
  const auto fn = random_function(f, 99);
  const std::string hex = fn.to_hex();
  CHECK(hex.size() == 64 / 4);
  const auto back = BooleanFunction::from_hex(f, hex);
  for (Elem x = 0; x < 64; ++x) CHECK(back(x) == fn(x));

  CHECK_THROWS_AS(BooleanFunction::from_hex(f, hex + "0"), Error);
  std::string bad = hex;
  bad[3] = 'G';
  try {
    BooleanFunction::from_hex(f, bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kParseError);
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("walsh transform of the zero and linear functions") {
  auto f = field(4);
  const auto zero = BooleanFunction::constant(f, 0);
  CHECK(walsh_naive(zero, 0) == 16);
  for (Elem y = 1; y < 16; ++y) CHECK(walsh_naive(zero, y) == 0);

  // f(x) = Tr(cx) peaks exactly at y = c
  const Elem c = 5;
  std::vector<std::uint8_t> table(16);
  for (Elem x = 0; x < 16; ++x)
    table[x] = static_cast<std::uint8_t>(f->trace(f->mul(c, x)));
  const BooleanFunction lin(f, table);
  for (Elem y = 0; y < 16; ++y)
    CHECK(walsh_naive(lin, y) == (y == c ? 16 : 0));
}

TEST_CASE("fast transform equals the naive sum") {
  for (int n = 2; n <= 8; ++n) {
    auto f = field(n);
    for (std::uint32_t seed : {1u, 2u, 3u}) {
      const auto fn = random_function(f, seed * 17 + static_cast<std::uint32_t>(n));
      const auto full = walsh_full(fn);
      REQUIRE(full.size() == f->order());
      for (Elem y = 0; y < f->order(); ++y)
        CHECK(full[y] == walsh_naive(fn, y));
    }
  }
}

TEST_CASE("walsh values have the parity of q and satisfy the power moments") {
  for (int n : {3, 5, 8}) {
    auto f = field(n);
    const auto fn = random_function(f, 1234u + static_cast<std::uint32_t>(n));
    const auto full = walsh_full(fn);
    const std::int64_t q = static_cast<std::int64_t>(f->order());
    std::int64_t sum = 0, sum2 = 0;
    for (std::int32_t w : full) {
      CHECK((w % 2 + 2) % 2 == q % 2);
      sum += w;
      sum2 += std::int64_t(w) * w;
    }
    CHECK(sum == (fn.at_zero() ? -q : q));
    CHECK(sum2 == q * q);
  }
}

TEST_CASE("spectrum of known functions") {
  auto z = walsh_spectrum(BooleanFunction::constant(field(4), 0));
  CHECK(z.entries == std::map<std::int64_t, std::int64_t>{{0, 15}, {16, 1}});
  CHECK(z.at_zero == 16);
  CHECK(z.multiplicity_sum() == 16);

  const auto s = walsh_spectrum(BooleanFunction::monomial(field(5), 3, 1));
  CHECK(s.entries ==
        std::map<std::int64_t, std::int64_t>{{-8, 6}, {0, 16}, {8, 10}});
  CHECK(s.at_zero == 0);
  CHECK(s.three_valued_amplitude() == 8);
  CHECK(s.is_semibent(5));
  CHECK(s.to_string() == "[-8]^6 [0]^16 [8]^10");

  // a bent function on GF(16): Tr(alpha x^3) with alpha outside the cubes
  auto f4 = field(4);
  const Elem theta = f4->generator();
  const auto bent = BooleanFunction::monomial(f4, 3, theta);
  const auto bs = walsh_spectrum(bent);
  CHECK(bs.is_bent(4));
  CHECK(bs.entries.at(4) + bs.entries.at(-4) == 16);
  CHECK(bs.entries.at(bs.at_zero) ==
        8 + (bs.at_zero > 0 ? 2 : -2) * (bent.at_zero() ? -1 : 1));
}

TEST_CASE("coset invariance") {
  auto f4 = field(4);
  const auto any = random_function(f4, 5);
  CHECK(check_coset_invariance(any, 1));

  const Elem omega = f4->subfield_generator(2);
  const auto inv3 = BooleanFunction::monomial(f4, 3, omega);
  CHECK(check_coset_invariance(inv3, 2));  // (2^2 - 1) | 3

  const auto tr = BooleanFunction::monomial(f4, 1, 1);
  CHECK_FALSE(check_coset_invariance(tr, 2));
  CHECK_THROWS_AS(check_coset_invariance(tr, 3), Error);

  // invariance matches the exhaustive definition
  Field g(6);
  auto f6 = field(6);
  const auto m7 = BooleanFunction::monomial(f6, 7, 1);
  for (int t : {2, 3}) {
    bool expected = true;
    for (Elem alpha : f6->subfield(t)) {
      if (alpha == 0) continue;
      for (Elem x = 1; x < 64 && expected; ++x)
        if (m7(f6->mul(alpha, x)) != m7(x)) expected = false;
    }
    CHECK(check_coset_invariance(m7, t) == expected);
  }
}

TEST_CASE("admissible subfields") {
  auto f4 = field(4);
  CHECK(admissible_subfields(BooleanFunction::constant(f4, 0)) ==
        std::vector<int>{1, 2, 4});
  const Elem omega = f4->subfield_generator(2);
  const auto inv3 = BooleanFunction::monomial(f4, 3, omega);
  const auto adm = admissible_subfields(inv3);
  CHECK(std::count(adm.begin(), adm.end(), 2) == 1);
  CHECK(admissible_subfields(BooleanFunction::monomial(f4, 1, 1)) ==
        std::vector<int>{1});
}

TEST_CASE("invariance forces equal walsh values along cosets") {
  for (int n : {4, 6, 12}) {
    auto f = field(n);
    for (int t = 2; t <= n; ++t) {
      if (n % t != 0) continue;
      const std::uint64_t d = (std::uint64_t(1) << t) - 1;
      const auto fn = BooleanFunction::monomial(f, d, 1);
      REQUIRE(check_coset_invariance(fn, t));
      const auto full = walsh_full(fn);
      for (Elem alpha : f->subfield(t)) {
        if (alpha == 0) continue;
        for (Elem b = 1; b < f->order(); ++b)
          CHECK(full[f->mul(alpha, b)] == full[b]);
      }
    }
  }
}

TEST_CASE("product walsh values factor") {
  auto f1 = field(4);
  auto f2 = field(3);
  const auto g1 = BooleanFunction::monomial(f1, 3, f1->generator());
  const auto g2 = BooleanFunction::monomial(f2, 3, 1);
  const ProductFunction p(g1, g2);
  const auto w1 = walsh_full(g1);
  const auto w2 = walsh_full(g2);
  for (Elem y1 = 0; y1 < 16; ++y1)
    for (Elem y2 = 0; y2 < 8; ++y2)
      CHECK(p.walsh_naive(y1, y2) == std::int64_t(w1[y1]) * w2[y2]);

  // merged spectrum counts every pair product
  const auto merged = p.spectrum();
  std::map<std::int64_t, std::int64_t> direct;
  for (Elem y1 = 0; y1 < 16; ++y1)
    for (Elem y2 = 0; y2 < 8; ++y2) ++direct[std::int64_t(w1[y1]) * w2[y2]];
  CHECK(merged.entries == direct);
  CHECK(merged.at_zero == std::int64_t(w1[0]) * w2[0]);

  const ProductFunction zz(BooleanFunction::constant(f1, 0),
                           BooleanFunction::constant(f2, 0));
  const auto zs = zz.spectrum();
  CHECK(zs.entries ==
        std::map<std::int64_t, std::int64_t>{{0, 127}, {128, 1}});
}

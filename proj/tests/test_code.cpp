#include <doctest.h>

#include <memory>
#include <set>

#include "bfcode/code.hpp"

using namespace bfcode;

namespace {
std::shared_ptr<const Field> field(int n) { return std::make_shared<Field>(n); }

BooleanFunction dillon16(const std::shared_ptr<const Field>& f) {
  return BooleanFunction::monomial(f, 3, f->subfield_generator(2));
}
}  // namespace

TEST_CASE("hypothesis validation") {
  auto f4 = field(4);
  const auto zero = BooleanFunction::constant(f4, 0);
  CHECK(validate(zero, 1).ok);
  CHECK(validate(zero, 2).ok);
  // t = n: the symbol-count integrality fails at w_j = w(0)
  CHECK_FALSE(validate(zero, 4).ok);
  CHECK_FALSE(validate(zero, 3).ok);  // t does not divide n

  CHECK(validate(dillon16(f4), 2).ok);

  const auto tr = BooleanFunction::monomial(f4, 1, 1);
  const auto rep = validate(tr, 2);
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure().find("constant on every coset") != std::string::npos);

  // f(x) = Tr(cx) with t = 1 hits the excluded w(0) - w_j = -q case
  const auto rep2 = validate(tr, 1);
  CHECK_FALSE(rep2.ok);
  CHECK(rep2.first_failure().find("-q") != std::string::npos);
}

TEST_CASE("defining sets") {
  auto f4 = field(4);
  const auto zero = BooleanFunction::constant(f4, 0);
  const TraceCode all = TraceCode::build(zero, 2);
  CHECK(all.full_length() == 15);
  CHECK(all.reduced_length() == 5);

  const TraceCode dillon = TraceCode::build(dillon16(f4), 2);
  CHECK(dillon.full_length() == 9);
  CHECK(dillon.reduced_length() == 3);
  CHECK(dillon.dimension() == 2);
  // defining set = nonzero zeros, ascending
  const auto& dfull = dillon.defining_set_full();
  CHECK(std::is_sorted(dfull.begin(), dfull.end()));
  for (Elem x : dfull) {
    CHECK(x != 0);
    CHECK(dillon.function()(x) == 0);
  }
  // closed under the subfield action
  const Elem g = f4->subfield_generator(2);
  for (Elem x : dfull)
    CHECK(std::count(dfull.begin(), dfull.end(), f4->mul(g, x)) == 1);

  auto f5 = field(5);
  const TraceCode c3 = TraceCode::build(BooleanFunction::monomial(f5, 3, 1), 1);
  CHECK(c3.full_length() == 15);
  CHECK(c3.reduced_length() == 15);
  // closed-form length: 2^(n-1) + (w0 - 1 - (-1)^f(0))/2
  CHECK(c3.w_at_zero() == 0);
  CHECK(c3.full_length() == 16 + (0 - 1 - 1) / 2);
}

TEST_CASE("defining sets need only divisibility and invariance") {
  auto f4 = field(4);
  // Tr(x) fails the enumerator hypotheses at t = 1, but its defining set
  // is still well formed: the 7 nonzero trace zeros
  const auto tr = BooleanFunction::monomial(f4, 1, 1);
  REQUIRE_FALSE(validate(tr, 1).ok);
  const auto [full, reduced] = defining_sets(tr, 1);
  CHECK(full.size() == 7);
  CHECK(reduced == full);
  for (Elem x : full) CHECK(tr(x) == 0);

  // invariance is still required
  CHECK_THROWS_AS(defining_sets(tr, 2), Error);
  CHECK_THROWS_AS(defining_sets(BooleanFunction::constant(f4, 0), 3), Error);
  CHECK_THROWS_AS(defining_sets(BooleanFunction::constant(f4, 1), 1), Error);
}

TEST_CASE("construction refusals") {
  auto f4 = field(4);
  const auto one = BooleanFunction::constant(f4, 1);
  try {
    TraceCode::build(one, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kEmptyDefiningSet);
  }
  try {
    TraceCode::build(BooleanFunction::constant(f4, 0), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kBadSubfieldDegree);
  }
  try {
    TraceCode::build(BooleanFunction::monomial(f4, 1, 1), 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kHypothesisViolation);
  }
}

TEST_CASE("codewords") {
  auto f4 = field(4);
  const TraceCode code = TraceCode::build(dillon16(f4), 2);
  std::vector<std::uint16_t> full, reduced;

  code.codeword_full(0, full);
  CHECK(full == std::vector<std::uint16_t>(9, 0));
  code.codeword_reduced(0, reduced);
  CHECK(reduced == std::vector<std::uint16_t>(3, 0));

  // weight scaling and distinctness over all b
  std::set<std::vector<std::uint16_t>> words;
  for (Elem b = 0; b < 16; ++b) {
    code.codeword_full(b, full);
    code.codeword_reduced(b, reduced);
    int wf = 0, wr = 0;
    for (auto s : full) wf += s != 0;
    for (auto s : reduced) wr += s != 0;
    CHECK(wf == 3 * wr);
    words.insert(full);
  }
  CHECK(words.size() == 16);

  // per-codeword symbol counts against the spectrum: for W(b) = -4,
  // every nonzero symbol appears (16 + 4 + 4)/8 = 3 times and zero
  // (16 + 4 - 12)/8 - 1 = 0 times
  const auto walsh = walsh_full(code.function());
  REQUIRE(code.w_at_zero() == 4);
  for (Elem b = 1; b < 16; ++b) {
    code.codeword_full(b, full);
    std::vector<int> counts(4, 0);
    for (auto s : full) ++counts[s];
    if (walsh[b] == -4) {
      CHECK(counts[0] == 0);
      CHECK(counts[1] == 3);
      CHECK(counts[2] == 3);
      CHECK(counts[3] == 3);
    } else {
      REQUIRE(walsh[b] == 4);
      CHECK(counts[0] == 3);
      CHECK(counts[1] == 2);
      CHECK(counts[2] == 2);
      CHECK(counts[3] == 2);
    }
  }
}

TEST_CASE("codeword symbols equal the direct trace-label path") {
  // the internal trace table is built additively; recompute every symbol
  // from scratch
  for (int t : {1, 2, 3}) {
    auto f = field(6);
    const auto fn = BooleanFunction::monomial(f, 7, 1);
    if (!validate(fn, t).ok) continue;
    const TraceCode code = TraceCode::build(fn, t);
    const SubfieldLabeling lab(*f, t);
    std::vector<std::uint16_t> word;
    for (Elem b = 0; b < 64; ++b) {
      code.codeword_full(b, word);
      const auto& coords = code.defining_set_full();
      for (std::size_t i = 0; i < coords.size(); ++i)
        CHECK(word[i] == lab.label(f->trace_to(t, f->mul(b, coords[i]))));
    }
  }
}

TEST_CASE("product construction") {
  auto f1 = field(4);
  auto f2 = field(2);
  const ProductFunction zz(BooleanFunction::constant(f1, 0),
                           BooleanFunction::constant(f2, 0));
  const ProductTraceCode all = ProductTraceCode::build(zz, 1);
  CHECK(all.full_length() == 16 * 4 - 1);
  CHECK(all.reduced_length() == all.full_length());
  CHECK(all.dimension() == 6);

  const ProductTraceCode reduced2 = ProductTraceCode::build(
      ProductFunction(BooleanFunction::constant(f1, 0),
                      BooleanFunction::constant(field(4), 0)),
      2);
  CHECK(reduced2.full_length() == 255);
  CHECK(reduced2.reduced_length() == 85);
  CHECK(reduced2.dimension() == 4);

  // the diagonal action closes the defining set
  {
    const Field& g1 = reduced2.function().factor1().field();
    const Field& g2 = reduced2.function().factor2().field();
    const Elem a1 = g1.subfield_generator(2);
    const Elem a2 = g2.subfield_generator(2);
    std::set<std::pair<Elem, Elem>> dset(reduced2.defining_set_full().begin(),
                                         reduced2.defining_set_full().end());
    for (const auto& [x1, x2] : dset)
      CHECK(dset.count({g1.mul(a1, x1), g2.mul(a2, x2)}) == 1);
  }

  // zero codeword at b = (0,0); distinct codewords overall
  std::vector<std::uint16_t> word;
  reduced2.codeword_full(0, word);
  for (auto s : word) CHECK(s == 0);
  std::set<std::vector<std::uint16_t>> words;
  for (std::uint64_t b = 0; b < reduced2.code_size(); ++b) {
    reduced2.codeword_full(b, word);
    words.insert(word);
  }
  CHECK(words.size() == reduced2.code_size());
}

TEST_CASE("product construction errors") {
  auto f1 = field(4);
  auto f2 = field(2);
  // t does not divide both degrees
  try {
    ProductTraceCode::build(BooleanFunction::constant(f1, 0),
                            BooleanFunction::constant(field(3), 0), 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kBadSubfieldDegree);
  }
  // factor 2 not invariant: f2(x) = Tr(x) on GF(4) with t = 2
  try {
    ProductTraceCode::build(BooleanFunction::constant(f1, 0),
                            BooleanFunction::monomial(f2, 1, 1), 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kProductInvarianceFailed);
  }
  // constant one plus constant zero never vanishes off the origin
  try {
    ProductTraceCode::build(BooleanFunction::constant(f1, 1),
                            BooleanFunction::constant(f2, 0), 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kEmptyDefiningSet);
  }
  // while f1 == f2 == 1 makes f identically zero: a full defining set
  const ProductTraceCode ones = ProductTraceCode::build(
      BooleanFunction::constant(f1, 1), BooleanFunction::constant(f2, 1), 1);
  CHECK(ones.full_length() == 63);
}

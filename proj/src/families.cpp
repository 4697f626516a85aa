#include "bfcode/families.hpp"

#include <numeric>
#include <sstream>

namespace bfcode {

const char* bent_kind_name(BentKind k) {
  switch (k) {
    case BentKind::kGold: return "gold";
    case BentKind::kDillon: return "dillon";
    case BentKind::kKasami: return "kasami";
    case BentKind::kLeander: return "leander";
    case BentKind::kCck: return "cck";
  }
  return "?";
}

std::optional<BentKind> bent_kind_from_name(const std::string& name) {
  if (name == "gold") return BentKind::kGold;
  if (name == "dillon") return BentKind::kDillon;
  if (name == "kasami") return BentKind::kKasami;
  if (name == "leander") return BentKind::kLeander;
  if (name == "cck") return BentKind::kCck;
  return std::nullopt;
}

void ConditionReport::add(std::string name, bool pass, std::string detail) {
  items.push_back(Item{std::move(name), pass, std::move(detail)});
}

bool ConditionReport::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string ConditionReport::to_string() const {
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "  [ok]   " : "  [fail] ") << it.name;
    if (!it.detail.empty()) os << " (" << it.detail << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

/// Absolute trace of the subfield GF(2^m): sum of z^(2^i), i < m.
/// z must lie in the subfield for the result to be a bit.
int subfield_abs_trace(const Field& field, int m, Elem z) {
  Elem acc = z;
  Elem cur = z;
  for (int i = 1; i < m; ++i) {
    cur = field.mul(cur, cur);
    acc ^= cur;
  }
  if (acc > 1) throw Error(Errc::kInternal, "subfield trace left GF(2)");
  return static_cast<int>(acc);
}

}  // namespace

std::int64_t dillon_condition(const Field& field, int m, Elem alpha) {
  field.check_subfield_degree(m);
  if (alpha == 0 || !field.in_subfield(m, alpha))
    throw Error(Errc::kAlphaNotInSubfield,
                "alpha must lie in the embedded GF(2^" + std::to_string(m) +
                    ")*");
  std::int64_t sum = 0;
  for (Elem x : field.subfield(m)) {
    if (x == 0) continue;
    const Elem term = field.add(field.inv(x), field.mul(alpha, x));
    sum += subfield_abs_trace(field, m, term) ? -1 : 1;
  }
  return sum;
}

FamilyFunction monomial_bent(std::shared_ptr<const Field> field, BentKind kind,
                             int h, Elem alpha) {
  const Field& F = *field;
  const int n = F.degree();
  const std::uint64_t q = F.order();
  if (n % 2 != 0)
    throw Error(Errc::kBadParams, "bent families need even n");
  const int m = n / 2;
  if (alpha == 0 || alpha >= q)
    throw Error(Errc::kBadParams, "alpha must be a nonzero field element");

  std::uint64_t d = 0;
  ConditionReport rep;
  switch (kind) {
    case BentKind::kGold: {
      if (h < 1 || h > 31) throw Error(Errc::kBadParams, "gold needs 1 <= h <= 31");
      d = (std::uint64_t(1) << h) + 1;
      const int g = std::gcd(n, h);
      rep.add("n/gcd(n,h) is odd", (n / g) % 2 == 1,
              "n/gcd = " + std::to_string(n / g));
      const std::uint64_t sub = std::gcd(d, q - 1);
      const bool inside = F.pow(alpha, (q - 1) / sub) == 1;
      rep.add("alpha outside the (2^h+1)-th power subgroup", !inside,
              "subgroup index " + std::to_string(sub));
      break;
    }
    case BentKind::kDillon: {
      d = (std::uint64_t(1) << m) - 1;
      const bool in_sub = alpha != 0 && F.in_subfield(m, alpha);
      rep.add("alpha in GF(2^m)*", in_sub);
      if (in_sub) {
        const std::int64_t sum = dillon_condition(F, m, alpha);
        rep.add("kloosterman-type sum equals -1", sum == -1,
                "sum = " + std::to_string(sum));
      } else {
        rep.add("kloosterman-type sum equals -1", false, "not evaluated");
      }
      break;
    }
    case BentKind::kKasami: {
      if (h < 1 || h > 31) throw Error(Errc::kBadParams, "kasami needs 1 <= h <= 31");
      d = (std::uint64_t(1) << (2 * h)) - (std::uint64_t(1) << h) + 1;
      rep.add("3 does not divide m", m % 3 != 0, "m = " + std::to_string(m));
      rep.add("gcd(h, n) = 1", std::gcd(h, n) == 1);
      const std::uint64_t sub = std::gcd<std::uint64_t>(3, q - 1);
      const bool inside = F.pow(alpha, (q - 1) / sub) == 1;
      rep.add("alpha outside the cube subgroup", !inside);
      break;
    }
    case BentKind::kLeander: {
      if (h < 1 || n != 4 * h)
        throw Error(Errc::kBadParams, "leander needs n = 4h");
      const std::uint64_t b = (std::uint64_t(1) << h) + 1;
      d = b * b;
      rep.add("h is odd", h % 2 == 1, "h = " + std::to_string(h));
      break;
    }
    case BentKind::kCck: {
      if (h < 1 || n != 6 * h)
        throw Error(Errc::kBadParams, "cck needs n = 6h");
      d = (std::uint64_t(1) << (2 * h)) + (std::uint64_t(1) << h) + 1;
      const bool in_sub = F.in_subfield(3 * h, alpha);
      rep.add("alpha in GF(2^3h)*", in_sub);
      if (in_sub) {
        // trace from GF(2^3h) onto GF(2^h)
        Elem acc = 0, cur = alpha;
        for (int i = 0; i < 3; ++i) {
          acc ^= cur;
          for (int j = 0; j < h; ++j) cur = F.mul(cur, cur);
        }
        rep.add("trace onto GF(2^h) of alpha is zero", acc == 0);
      } else {
        rep.add("trace onto GF(2^h) of alpha is zero", false, "not evaluated");
      }
      break;
    }
  }

  FamilyFunction out{BooleanFunction::monomial(field, d, alpha),
                     bent_kind_name(kind),
                     d,
                     std::move(rep),
                     {},
                     false,
                     std::nullopt,
                     0,
                     0};
  out.spectrum = walsh_spectrum(out.fn);
  out.certified_bent = out.spectrum.is_bent(n);
  out.amplitude = out.spectrum.three_valued_amplitude();
  if (out.certified_bent) out.epsilon = out.spectrum.at_zero > 0 ? 1 : -1;
  out.conditions.add("certified bent by walsh spectrum", out.certified_bent,
                     out.spectrum.to_string());
  return out;
}

int v2(std::uint64_t b) {
  if (b == 0) throw Error(Errc::kBadParams, "v2(0) undefined");
  return __builtin_ctzll(b);
}

FamilyFunction semibent_monomial(std::shared_ptr<const Field> field,
                                 int series, int h) {
  const Field& F = *field;
  const int n = F.degree();
  const std::uint64_t q = F.order();
  std::uint64_t d = 0;
  std::int64_t predicted_a = 0;
  ConditionReport rep;

  auto amplitude_from_gcd = [&](int hh) -> std::int64_t {
    // sqrt(2^gcd(h,n) * q), integer whenever gcd(h,n) + n is even
    const int e = std::gcd(hh, n) + n;
    return (e % 2 == 0) ? (std::int64_t(1) << (e / 2)) : 0;
  };

  switch (series) {
    case 1:
    case 2: {
      if (h < 1 || h > 31) throw Error(Errc::kBadParams, "series needs 1 <= h <= 31");
      d = series == 1 ? (std::uint64_t(1) << h) + 1
                      : (std::uint64_t(1) << (2 * h)) - (std::uint64_t(1) << h) + 1;
      rep.add("v2(h) >= v2(n)", v2(static_cast<std::uint64_t>(h)) >=
                                    v2(static_cast<std::uint64_t>(n)),
              "v2(h) = " + std::to_string(v2(static_cast<std::uint64_t>(h))) +
                  ", v2(n) = " + std::to_string(v2(static_cast<std::uint64_t>(n))));
      predicted_a = amplitude_from_gcd(h);
      break;
    }
    case 3:
    case 4: {
      if (n % 2 != 0 || (n / 2) % 2 != 1)
        throw Error(Errc::kBadParams, "series needs n = 2m with m odd");
      const int m = n / 2;
      d = series == 3
              ? (std::uint64_t(1) << m) + (std::uint64_t(1) << ((m - 1) / 2)) + 1
              : (std::uint64_t(1) << ((m + 1) / 2)) + 3;
      predicted_a = std::int64_t(1) << (m + 1);  // 2*sqrt(q)
      break;
    }
    case 5: {
      if (n % 2 != 1 || n < 3)
        throw Error(Errc::kBadParams, "series needs n = 2m + 1");
      const int m = (n - 1) / 2;
      d = (std::uint64_t(1) << m) + 3;
      predicted_a = std::int64_t(1) << ((n + 1) / 2);  // sqrt(2q)
      break;
    }
    case 6: {
      if (h < 1 || h > 32) throw Error(Errc::kBadParams, "series needs 1 <= h <= 32");
      if ((4 * static_cast<std::uint64_t>(h) + 1) % static_cast<std::uint64_t>(n) != 0)
        throw Error(Errc::kBadParams, "series needs n | 4h + 1");
      std::uint64_t p = 1;
      for (int i = 0; i < h; ++i) p *= 3;
      d = 2 * p + 1;
      rep.add("n divides 4h + 1 (relation symbol read as divisibility)", true,
              "4h + 1 = " + std::to_string(4 * static_cast<std::uint64_t>(h) + 1));
      predicted_a = std::int64_t(1) << ((n + 1) / 2);
      break;
    }
    default:
      throw Error(Errc::kBadParams, "series index must be 1..6");
  }

  if (d < 1 || d > q - 1)
    throw Error(Errc::kBadParams,
                "exponent d = " + std::to_string(d) + " outside [1, q-1]");

  FamilyFunction out{BooleanFunction::monomial(field, d, 1),
                     "series" + std::to_string(series),
                     d,
                     std::move(rep),
                     {},
                     false,
                     std::nullopt,
                     predicted_a,
                     0};
  out.spectrum = walsh_spectrum(out.fn);
  out.amplitude = out.spectrum.three_valued_amplitude();
  out.certified_bent = out.spectrum.is_bent(n);
  const bool three_ok = out.amplitude && predicted_a != 0 &&
                        *out.amplitude == predicted_a;
  out.conditions.add("certified three-valued {0, +A, -A} with the predicted A",
                     three_ok,
                     "predicted A = " + std::to_string(predicted_a) +
                         ", spectrum " + out.spectrum.to_string());
  if (three_ok) {
    const auto mults = three_value_multiplicities(q, predicted_a,
                                                  out.fn.at_zero() ? -1 : 1);
    const bool mk = out.spectrum.entries.at(0) == mults.m_zero &&
                    out.spectrum.entries.at(predicted_a) == mults.m_plus &&
                    out.spectrum.entries.at(-predicted_a) == mults.m_minus;
    out.conditions.add("multiplicities match the power-moment closed form", mk);
  }
  return out;
}

Series6Conditions series6_conditions(std::uint64_t l, std::uint64_t n) {
  Series6Conditions out;
  out.h = 30 * l + 21;
  ConditionReport& rep = out.report;
  rep.add("h = 30l + 21", true, "h = " + std::to_string(out.h));
  rep.add("5 divides n", n != 0 && n % 5 == 0);
  rep.add("n divides 120l + 85",
          n != 0 && (120 * l + 85) % n == 0,
          "120l + 85 = " + std::to_string(120 * l + 85));
  // 31 | 2*3^h + 1, checked with a modular power
  std::uint64_t pw = 1;
  for (std::uint64_t i = 0; i < out.h % 30; ++i) pw = (pw * 3) % 31;  // ord_31(3) = 30
  rep.add("31 divides 2*3^h + 1", (2 * pw + 1) % 31 == 0);
  // 2*3^h + 1 <= 2^n - 1, exact in 128 bits when possible
  bool size_ok;
  if (out.h <= 75) {
    unsigned __int128 v = 1;
    for (std::uint64_t i = 0; i < out.h; ++i) v *= 3;
    v = 2 * v + 1;
    if (n >= 127) {
      size_ok = true;
    } else {
      const unsigned __int128 lim =
          ((unsigned __int128)1 << n) - 1;
      size_ok = v <= lim;
    }
  } else {
    const long double bits = 1.0L + static_cast<long double>(out.h) * 1.5849625007211562L;
    size_ok = bits < static_cast<long double>(n);
  }
  rep.add("2*3^h + 1 <= 2^n - 1", size_ok);
  out.ok = rep.all_pass();
  return out;
}

bool divisibility_condition(std::uint64_t n, std::uint64_t d, int t) {
  if (t < 1 || n == 0 || n % static_cast<std::uint64_t>(t) != 0) return false;
  return d % ((std::uint64_t(1) << t) - 1) == 0;
}

BooleanFunction quadratic_function(std::shared_ptr<const Field> field,
                                   const std::vector<Elem>& coeffs) {
  const Field& F = *field;
  const int n = F.degree();
  const int terms = n / 2;  // i = 1 .. floor(n/2)
  if (static_cast<int>(coeffs.size()) != terms)
    throw Error(Errc::kBadParams,
                "expected " + std::to_string(terms) + " coefficients, got " +
                    std::to_string(coeffs.size()));
  for (Elem c : coeffs)
    if (c >= F.order()) throw Error(Errc::kBadParams, "coefficient out of range");
  const bool even_n = n % 2 == 0;
  const int m = n / 2;
  if (even_n && !F.in_subfield(m, coeffs[static_cast<std::size_t>(m - 1)]))
    throw Error(Errc::kCoeffFieldViolation,
                "the half-trace coefficient must lie in GF(2^m)");

  std::vector<std::uint8_t> table(F.order(), 0);
  for (Elem x = 0; x < F.order(); ++x) {
    int bit = 0;
    Elem frob = x;  // x^(2^i) as i advances
    for (int i = 1; i <= terms; ++i) {
      frob = F.mul(frob, frob);
      const Elem c = coeffs[static_cast<std::size_t>(i - 1)];
      if (c == 0) continue;
      const Elem term = F.mul(c, F.mul(x, frob));
      if (even_n && i == m)
        bit ^= subfield_abs_trace(F, m, term);
      else
        bit ^= F.trace(term);
    }
    table[x] = static_cast<std::uint8_t>(bit);
  }

  Descriptor desc;
  desc.kind = Descriptor::Kind::kQuadratic;
  desc.coeffs = coeffs;
  // shape tag: which restricted form the coefficients match
  desc.shape = "general";
  if (even_n) {
    bool even_idx_zero = true;
    for (int i = 2; i < m; i += 2)
      if (coeffs[static_cast<std::size_t>(i - 1)] != 0) even_idx_zero = false;
    const Elem cm = coeffs[static_cast<std::size_t>(m - 1)];
    if (even_idx_zero && cm == 0) {
      desc.shape = "odd";
    } else if (even_idx_zero && cm != 0 && m % 2 == 1) {
      bool binary = cm == 1;
      int ones = 0;
      for (int i = 1; i < m; i += 2) {
        const Elem c = coeffs[static_cast<std::size_t>(i - 1)];
        if (c > 1) binary = false;
        if (c == 1) ++ones;
      }
      if (binary)
        desc.shape = ones == 1 ? "single_half" : "binary_half";
      else
        desc.shape = "odd_half";
    }
  }
  return BooleanFunction(std::move(field), std::move(table), std::move(desc));
}

BooleanFunction quadratic_binary_shape(std::shared_ptr<const Field> field,
                                       const std::vector<int>& c_bits) {
  const int n = field->degree();
  if (n % 2 != 0) throw Error(Errc::kBadShape, "shape needs n = 2m");
  const int m = n / 2;
  if (m % 2 != 1) throw Error(Errc::kBadShape, "shape needs odd m");
  const int s = (m - 1) / 2;
  if (static_cast<int>(c_bits.size()) != s)
    throw Error(Errc::kBadShape,
                "expected " + std::to_string(s) + " coefficient bits");
  std::vector<Elem> coeffs(static_cast<std::size_t>(m), 0);
  for (int lambda = 0; lambda < s; ++lambda) {
    const int bit = c_bits[static_cast<std::size_t>(lambda)];
    if (bit != 0 && bit != 1) throw Error(Errc::kBadShape, "coefficients must be bits");
    coeffs[2 * static_cast<std::size_t>(lambda)] = static_cast<Elem>(bit);  // index i = 2*lambda + 1
  }
  coeffs[static_cast<std::size_t>(m - 1)] = 1;  // half-trace term
  return quadratic_function(std::move(field), coeffs);
}

bool quadratic_bent_criterion(int m, const std::vector<int>& c_bits) {
  if (m < 3 || m % 2 != 1) throw Error(Errc::kBadShape, "criterion needs odd m >= 3");
  const int s = (m - 1) / 2;
  if (static_cast<int>(c_bits.size()) != s)
    throw Error(Errc::kBadShape,
                "expected " + std::to_string(s) + " coefficient bits");
  std::uint64_t c = std::uint64_t(1) << m;
  for (int lambda = 0; lambda < s; ++lambda) {
    const int bit = c_bits[static_cast<std::size_t>(lambda)];
    if (bit != 0 && bit != 1) throw Error(Errc::kBadShape, "coefficients must be bits");
    if (bit)
      c ^= (std::uint64_t(1) << (2 * lambda + 1)) |
           (std::uint64_t(1) << (m - (2 * lambda + 1)));
  }
  const std::uint64_t modulus = (std::uint64_t(1) << m) | 1;  // x^m + 1
  return gf2poly::gcd(c, modulus) == 1;
}

ProductFunction product_function(BooleanFunction f1, BooleanFunction f2) {
  return ProductFunction(std::move(f1), std::move(f2));
}

ThreeValueMultiplicities three_value_multiplicities(std::uint64_t q,
                                                    std::int64_t a,
                                                    int f0_sign) {
  if (f0_sign != 1 && f0_sign != -1)
    throw Error(Errc::kBadParams, "f0_sign must be +1 or -1");
  if (a <= 0 || q % static_cast<std::uint64_t>(a) != 0)
    throw Error(Errc::kNonIntegerMultiplicity,
                "amplitude must positively divide q");
  const std::int64_t qa = static_cast<std::int64_t>(q / static_cast<std::uint64_t>(a));
  if (qa * qa > static_cast<std::int64_t>(q))
    throw Error(Errc::kNonIntegerMultiplicity,
                "(q/A)^2 exceeds q; no such spectrum exists");
  ThreeValueMultiplicities out;
  out.m_zero = static_cast<std::int64_t>(q) - qa * qa;
  out.m_plus = (qa * qa + qa * f0_sign) / 2;
  out.m_minus = (qa * qa - qa * f0_sign) / 2;
  return out;
}

std::vector<FamilyInfo> list_bent_families() {
  return {
      {"gold", "2^h + 1",
       "n/gcd(n,h) odd; alpha outside the (2^h+1)-th power subgroup", ""},
      {"dillon", "2^m - 1",
       "alpha in GF(2^m)*; kloosterman-type sum over GF(2^m)* equals -1", ""},
      {"kasami", "2^(2h) - 2^h + 1",
       "3 does not divide m; gcd(h,n) = 1; alpha outside the cube subgroup", ""},
      {"leander", "(2^h + 1)^2", "n = 4h; h odd", ""},
      {"cck", "2^(2h) + 2^h + 1",
       "n = 6h; alpha in GF(2^3h)*; trace onto GF(2^h) of alpha is zero", ""},
  };
}

std::vector<FamilyInfo> list_semibent_series() {
  return {
      {"series1", "2^h + 1", "v2(h) >= v2(n)", "sqrt(2^gcd(h,n) * q)"},
      {"series2", "2^(2h) - 2^h + 1", "v2(h) >= v2(n)", "sqrt(2^gcd(h,n) * q)"},
      {"series3", "2^m + 2^((m-1)/2) + 1", "n = 2m, m odd", "2*sqrt(q)"},
      {"series4", "2^((m+1)/2) + 3", "n = 2m, m odd", "2*sqrt(q)"},
      {"series5", "2^m + 3", "n = 2m + 1", "sqrt(2q)"},
      {"series6", "2*3^h + 1",
       "n | 4h + 1; over GF(32) symbols: h = 30l + 21, 5 | n, n | 120l + 85",
       "sqrt(2q)"},
  };
}

std::vector<FamilyInfo> list_quadratic_shapes() {
  return {
      {"general", "sum Tr(c_i x^(1+2^i)), i = 1..floor(n/2)",
       "half-trace final term when n = 2m; c_m in GF(2^m)", ""},
      {"odd", "sum over odd i of Tr(c_i x^(1+2^i))", "n = 2m; no half-trace term", ""},
      {"odd_half", "odd-exponent traces plus the half-trace term",
       "n = 2m, m odd; c_m in GF(2^m)*", ""},
      {"binary_half", "odd-exponent traces with bit coefficients plus half trace",
       "n = 2m, m = 2s+1; bent iff gcd(c(x), x^m + 1) = 1", ""},
      {"single_half", "Tr(x^(1+2^(2l+1))) plus half trace",
       "n = 2m, m = 2s+1; bent iff gcd(3(2l+1), m) = 1", ""},
  };
}

}  // namespace bfcode

#include "bfcode/enumerators.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

namespace bfcode {

Composition composition_of(const std::vector<std::uint16_t>& word, int t) {
  Composition out(std::size_t(1) << t, 0);
  for (std::uint16_t s : word) ++out[s];
  return out;
}

std::int64_t WeightEnumerator::code_size() const {
  std::int64_t s = 0;
  for (const auto& [w, c] : terms) s += c;
  return s;
}

std::int64_t WeightEnumerator::distinct_nonzero_weights() const {
  std::int64_t r = 0;
  for (const auto& [w, c] : terms)
    if (w != 0 && c != 0) ++r;
  return r;
}

std::string WeightEnumerator::to_polynomial_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (w == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x^" << w;
    }
  }
  if (first) os << "0";
  return os.str();
}

WeightEnumerator CompleteWeightEnumerator::collapse() const {
  WeightEnumerator out;
  out.length = length;
  for (const auto& [comp, count] : terms) {
    std::int64_t wt = 0;
    for (std::size_t s = 1; s < comp.size(); ++s) wt += comp[s];
    out.terms[static_cast<std::uint64_t>(wt)] += count;
  }
  return out;
}

namespace {

template <class Code>
struct PartialTally {
  std::map<Composition, std::int64_t> cwe;
  std::map<std::uint64_t, std::int64_t> we_full;
  std::map<std::uint64_t, std::int64_t> we_reduced;
  bool scaling_ok = true;
  bool constancy_ok = true;
  bool zero_only_from_zero = true;
  std::string first_violation;
};

template <class Code>
void tally_range(const Code& code, std::uint64_t begin, std::uint64_t end,
                 PartialTally<Code>& out) {
  const int t = code.t();
  const std::int64_t group = (std::int64_t(1) << t) - 1;
  std::vector<std::uint16_t> full, reduced;
  for (std::uint64_t b = begin; b < end; ++b) {
    code.codeword_full(b, full);
    Composition comp = composition_of(full, t);
    const std::int64_t wt_full =
        static_cast<std::int64_t>(full.size()) - comp[0];
    ++out.we_full[static_cast<std::uint64_t>(wt_full)];

    code.codeword_reduced(b, reduced);
    std::int64_t zeros = 0;
    for (std::uint16_t s : reduced) zeros += s == 0;
    const std::int64_t wt_reduced =
        static_cast<std::int64_t>(reduced.size()) - zeros;
    ++out.we_reduced[static_cast<std::uint64_t>(wt_reduced)];

    if (wt_full != group * wt_reduced && out.scaling_ok) {
      out.scaling_ok = false;
      out.first_violation =
          "weight scaling fails at b ordinal " + std::to_string(b);
    }
    if (b != 0) {
      for (std::size_t s = 2; s < comp.size(); ++s) {
        if (comp[s] != comp[1] && out.constancy_ok) {
          out.constancy_ok = false;
          out.first_violation =
              "composition constancy fails at b ordinal " + std::to_string(b);
        }
      }
      if (wt_full == 0) out.zero_only_from_zero = false;
    }
    ++out.cwe[std::move(comp)];
  }
}

template <class Code>
BruteForceOutcome enumerate_impl(const Code& code, int workers) {
  const std::uint64_t total = code.code_size();
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > total)
    workers = static_cast<int>(total);

  std::vector<PartialTally<Code>> parts(static_cast<std::size_t>(workers));
  if (workers == 1) {
    tally_range(code, 0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int k = 0; k < workers; ++k) {
      const std::uint64_t begin = total * static_cast<std::uint64_t>(k) /
                                  static_cast<std::uint64_t>(workers);
      const std::uint64_t end = total * static_cast<std::uint64_t>(k + 1) /
                                static_cast<std::uint64_t>(workers);
      pool.emplace_back([&code, begin, end, &part = parts[static_cast<std::size_t>(k)]] {
        tally_range(code, begin, end, part);
      });
    }
    for (auto& th : pool) th.join();
  }

  BruteForceOutcome out;
  out.cwe_full.length = code.full_length();
  out.cwe_full.t = code.t();
  out.we_full.length = code.full_length();
  out.we_reduced.length = code.reduced_length();
  for (const auto& part : parts) {  // merge in range order
    for (const auto& [comp, c] : part.cwe) out.cwe_full.terms[comp] += c;
    for (const auto& [w, c] : part.we_full) out.we_full.terms[w] += c;
    for (const auto& [w, c] : part.we_reduced) out.we_reduced.terms[w] += c;
    out.scaling_ok = out.scaling_ok && part.scaling_ok;
    out.constancy_ok = out.constancy_ok && part.constancy_ok;
    out.zero_only_from_zero =
        out.zero_only_from_zero && part.zero_only_from_zero;
    if (out.first_violation.empty()) out.first_violation = part.first_violation;
  }
  return out;
}

}  // namespace

BruteForceOutcome enumerate_code(const TraceCode& code, int workers) {
  return enumerate_impl(code, workers);
}

BruteForceOutcome enumerate_code(const ProductTraceCode& code, int workers) {
  return enumerate_impl(code, workers);
}

CompleteWeightEnumerator cwe_bruteforce(const TraceCode& code, int workers) {
  return enumerate_code(code, workers).cwe_full;
}

WeightEnumerator we_bruteforce(const TraceCode& code, bool reduced,
                               int workers) {
  BruteForceOutcome outcome = enumerate_code(code, workers);
  return reduced ? outcome.we_reduced : outcome.we_full;
}

namespace {

int log2_exact(std::uint64_t q) {
  if (q == 0 || (q & (q - 1)) != 0) return -1;
  return __builtin_ctzll(q);
}

/// The closed-form engine shared by every predictor. q_total is the
/// codeword count (2^n, or q1*q2 for concatenations), dim the design
/// dimension over GF(2^t).
ClosedFormPrediction predict_core(const WalshSpectrum& spectrum,
                                  std::uint64_t q_total, int dim, int t,
                                  int f0, std::string source, bool with_cwe) {
  ClosedFormPrediction out;
  out.source = std::move(source);
  out.dimension = dim;
  out.w_at_zero = spectrum.at_zero;
  const std::int64_t q = static_cast<std::int64_t>(q_total);
  if (spectrum.multiplicity_sum() != q)
    throw Error(Errc::kHypothesisViolation,
                "spectrum multiplicities do not sum to the domain size");
  const std::int64_t w0 = spectrum.at_zero;
  if (spectrum.entries.count(w0) == 0)
    throw Error(Errc::kHypothesisViolation,
                "walsh value at zero missing from the spectrum");
  const std::int64_t div = std::int64_t(1) << (t + 1);
  for (const auto& [w, m] : spectrum.entries) {
    if (w0 - w == -q)
      throw Error(Errc::kHypothesisViolation,
                  "w(0) - w_j = -q at w_j = " + std::to_string(w));
    if ((q + w0 - w) % div != 0)
      throw Error(Errc::kHypothesisViolation,
                  "2^(t+1) does not divide q + w(0) - w_j at w_j = " +
                      std::to_string(w));
  }
  const std::int64_t sign0 = f0 ? -1 : 1;
  const std::int64_t n_tilde = (q + w0) / 2 - (1 + sign0) / 2;
  const std::int64_t group = (std::int64_t(1) << t) - 1;
  if (n_tilde <= 0)
    throw Error(Errc::kHypothesisViolation, "empty defining set");
  if (n_tilde % group != 0)
    throw Error(Errc::kHypothesisViolation,
                "defining set size is not a multiple of 2^t - 1");
  out.n_tilde = static_cast<std::uint64_t>(n_tilde);
  out.n_reduced = static_cast<std::uint64_t>(n_tilde / group);

  out.has_cwe = with_cwe;
  out.cwe_full.length = out.n_tilde;
  out.cwe_full.t = t;
  out.we_full.length = out.n_tilde;
  out.we_reduced.length = out.n_reduced;

  // b = 0 contributes the zero word.
  Composition zero_comp(std::size_t(1) << t, 0);
  zero_comp[0] = n_tilde;
  if (with_cwe) out.cwe_full.terms[zero_comp] += 1;
  out.we_full.terms[0] += 1;
  out.we_reduced.terms[0] += 1;

  for (const auto& [w, m] : spectrum.entries) {
    ClosedFormPrediction::Term term;
    term.w = w;
    term.count = m - (w == w0 ? 1 : 0);
    term.each_nonzero = (q + w0 - w) / div;
    term.zero_symbols = (q + w0 + group * w) / div - (1 + sign0) / 2;
    if (term.zero_symbols < 0 || term.each_nonzero < 0)
      throw Error(Errc::kHypothesisViolation,
                  "negative symbol count at w_j = " + std::to_string(w));
    out.terms.push_back(term);
    if (term.count <= 0) continue;
    if (with_cwe) {
      Composition comp(std::size_t(1) << t, term.each_nonzero);
      comp[0] = term.zero_symbols;
      out.cwe_full.terms[comp] += term.count;
    }
    out.we_full.terms[static_cast<std::uint64_t>(group * term.each_nonzero)] +=
        term.count;
    out.we_reduced.terms[static_cast<std::uint64_t>(term.each_nonzero)] +=
        term.count;
  }
  return out;
}

void require_same(const WeightEnumerator& a, const WeightEnumerator& b,
                  const char* what) {
  if (!(a == b))
    throw Error(Errc::kInternal,
                std::string("specialized closed form disagrees with the "
                            "general one: ") +
                    what);
}

}  // namespace

ClosedFormPrediction predict_from_spectrum(const WalshSpectrum& spectrum,
                                           int t, int f0) {
  const std::int64_t q = spectrum.multiplicity_sum();
  const int n = log2_exact(static_cast<std::uint64_t>(q));
  if (n < 0)
    throw Error(Errc::kBadParams, "spectrum multiplicities must sum to 2^n");
  if (t < 1 || n % t != 0)
    throw Error(Errc::kBadSubfieldDegree,
                "t=" + std::to_string(t) + " does not divide n=" + std::to_string(n));
  return predict_core(spectrum, static_cast<std::uint64_t>(q), n / t, t, f0,
                      "spectrum", true);
}

ClosedFormPrediction predict_bent(int n, int f0, int epsilon, int t) {
  if (n % 2 != 0 || n < 2) throw Error(Errc::kBadParams, "bent functions need n = 2m");
  if (epsilon != 1 && epsilon != -1)
    throw Error(Errc::kBadParams, "epsilon must be +1 or -1");
  const int m = n / 2;
  const std::int64_t sign0 = f0 ? -1 : 1;
  WalshSpectrum s;
  const std::int64_t a = std::int64_t(1) << m;
  s.entries[a] = (std::int64_t(1) << (n - 1)) + sign0 * (std::int64_t(1) << (m - 1));
  s.entries[-a] = (std::int64_t(1) << (n - 1)) - sign0 * (std::int64_t(1) << (m - 1));
  s.at_zero = epsilon * a;

  ClosedFormPrediction out = predict_from_spectrum(s, t, f0);
  out.source = "bent";

  // Cross-check against the directly stated two-weight enumerator.
  WeightEnumerator direct;
  direct.length = out.n_reduced;
  direct.terms[0] = 1;
  const std::int64_t low = std::int64_t(1) << (n - t - 1);
  const std::int64_t high = low + epsilon * (std::int64_t(1) << (m - t));
  direct.terms[static_cast<std::uint64_t>(low)] +=
      (std::int64_t(1) << (n - 1)) + epsilon * sign0 * (std::int64_t(1) << (m - 1)) - 1;
  direct.terms[static_cast<std::uint64_t>(high)] +=
      (std::int64_t(1) << (n - 1)) - epsilon * sign0 * (std::int64_t(1) << (m - 1));
  require_same(out.we_reduced, direct, "bent reduced-code weights");
  return out;
}

ClosedFormPrediction predict_three_valued(std::uint64_t q, std::int64_t a,
                                          int f0, std::int64_t w_at_zero,
                                          int t) {
  if (w_at_zero != 0 && w_at_zero != a && w_at_zero != -a)
    throw Error(Errc::kBadParams, "w(0) must be one of 0, +A, -A");
  const ThreeValueMultiplicities m =
      three_value_multiplicities(q, a, f0 ? -1 : 1);
  WalshSpectrum s;
  if (m.m_zero > 0) s.entries[0] = m.m_zero;
  if (m.m_plus > 0) s.entries[a] = m.m_plus;
  if (m.m_minus > 0) s.entries[-a] = m.m_minus;
  s.at_zero = w_at_zero;

  ClosedFormPrediction out = predict_from_spectrum(s, t, f0);
  out.source = "three-valued";

  // Direct statement: weights 2^(n-t-1) + (w(0) - w_j)/2^(t+1).
  const int n = log2_exact(q);
  WeightEnumerator direct;
  direct.length = out.n_reduced;
  direct.terms[0] = 1;
  const std::int64_t base = std::int64_t(1) << (n - t - 1);
  const std::int64_t div = std::int64_t(1) << (t + 1);
  for (const auto& [w, mult] : s.entries) {
    const std::int64_t count = mult - (w == w_at_zero ? 1 : 0);
    if (count <= 0) continue;
    direct.terms[static_cast<std::uint64_t>(base + (w_at_zero - w) / div)] += count;
  }
  require_same(out.we_reduced, direct, "three-valued reduced-code weights");
  return out;
}

ClosedFormPrediction predict_product(const WalshSpectrum& s1,
                                     const WalshSpectrum& s2, int t, int f1_0,
                                     int f2_0) {
  const std::uint64_t q1 = static_cast<std::uint64_t>(s1.multiplicity_sum());
  const std::uint64_t q2 = static_cast<std::uint64_t>(s2.multiplicity_sum());
  const int n1 = log2_exact(q1);
  const int n2 = log2_exact(q2);
  if (n1 < 0 || n2 < 0)
    throw Error(Errc::kBadParams, "spectra must cover 2^n1 and 2^n2 inputs");
  if (t < 1 || n1 % t != 0 || n2 % t != 0)
    throw Error(Errc::kBadSubfieldDegree, "t must divide gcd(n1, n2)");
  WalshSpectrum merged = merge_product_spectra(s1, s2);
  ClosedFormPrediction out =
      predict_core(merged, q1 * q2, (n1 + n2) / t, t, f1_0 ^ f2_0, "product",
                   /*with_cwe=*/false);
  return out;
}

void CertificationReport::add(std::string name, bool pass, std::string detail) {
  ok = ok && pass;
  checks.push_back(Check{std::move(name), pass, std::move(detail)});
}

std::string CertificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  os << (ok ? "overall: PASS" : "overall: FAIL") << "\n";
  return os.str();
}

namespace {

std::string first_weight_mismatch(const WeightEnumerator& predicted,
                                  const WeightEnumerator& observed) {
  for (const auto& [w, c] : observed.terms) {
    auto it = predicted.terms.find(w);
    const std::int64_t pc = it == predicted.terms.end() ? 0 : it->second;
    if (pc != c)
      return "first mismatch at weight " + std::to_string(w) + ": predicted " +
             std::to_string(pc) + ", observed " + std::to_string(c);
  }
  for (const auto& [w, c] : predicted.terms) {
    if (c != 0 && observed.terms.find(w) == observed.terms.end())
      return "first mismatch at weight " + std::to_string(w) + ": predicted " +
             std::to_string(c) + ", observed 0";
  }
  return "";
}

std::string comp_to_string(const Composition& comp) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (i) os << ",";
    os << comp[i];
  }
  os << ")";
  return os.str();
}

std::string first_cwe_mismatch(const CompleteWeightEnumerator& predicted,
                               const CompleteWeightEnumerator& observed) {
  for (const auto& [comp, c] : observed.terms) {
    auto it = predicted.terms.find(comp);
    const std::int64_t pc = it == predicted.terms.end() ? 0 : it->second;
    if (pc != c)
      return "first mismatch at composition " + comp_to_string(comp) +
             ": predicted " + std::to_string(pc) + ", observed " +
             std::to_string(c);
  }
  for (const auto& [comp, c] : predicted.terms) {
    if (c != 0 && observed.terms.find(comp) == observed.terms.end())
      return "first mismatch at composition " + comp_to_string(comp) +
             ": predicted " + std::to_string(c) + ", observed 0";
  }
  return "";
}

/// The distinct-weight claim applies only when the per-value weights are
/// pairwise distinct and every value keeps a positive codeword count.
bool weight_claim_applicable(const ClosedFormPrediction& pred) {
  std::vector<std::int64_t> weights;
  for (const auto& term : pred.terms) {
    if (term.count <= 0) return false;
    weights.push_back(term.each_nonzero);
  }
  std::sort(weights.begin(), weights.end());
  return std::adjacent_find(weights.begin(), weights.end()) == weights.end();
}

template <class Code>
CertificationReport certify_impl(const Code& code,
                                 const ClosedFormPrediction& pred,
                                 int workers) {
  const auto start = std::chrono::steady_clock::now();
  CertificationReport rep;
  rep.workers = workers;
  rep.code_size = code.code_size();
  rep.n_tilde = code.full_length();
  rep.n_reduced = code.reduced_length();
  rep.dimension = code.dimension();

  rep.add("defining set size matches the closed form",
          code.full_length() == pred.n_tilde &&
              code.reduced_length() == pred.n_reduced,
          "counted " + std::to_string(code.full_length()) + ", closed form " +
              std::to_string(pred.n_tilde));

  const BruteForceOutcome outcome = enumerate_code(code, workers);

  rep.add("codewords are pairwise distinct", outcome.zero_only_from_zero,
          outcome.zero_only_from_zero
              ? "dimension " + std::to_string(code.dimension())
              : "a nonzero b maps to the zero word");

  if (pred.has_cwe) {
    const std::string diff = first_cwe_mismatch(pred.cwe_full, outcome.cwe_full);
    rep.add("complete weight enumerator of the full code matches", diff.empty(),
            diff.empty() ? std::to_string(outcome.cwe_full.terms.size()) +
                               " distinct compositions"
                         : diff);
  }
  {
    const std::string diff = first_weight_mismatch(pred.we_full, outcome.we_full);
    rep.add("weight enumerator of the full code matches", diff.empty(), diff);
  }
  {
    const std::string diff =
        first_weight_mismatch(pred.we_reduced, outcome.we_reduced);
    rep.add("weight enumerator of the reduced code matches", diff.empty(),
            diff.empty() ? outcome.we_reduced.to_polynomial_string() : diff);
  }
  rep.add("full-code weights are (2^t - 1) times reduced-code weights",
          outcome.scaling_ok, outcome.scaling_ok ? "" : outcome.first_violation);
  rep.add("nonzero symbol counts are equal within every nonzero codeword",
          outcome.constancy_ok,
          outcome.constancy_ok ? "" : outcome.first_violation);

  if (weight_claim_applicable(pred)) {
    const std::int64_t r =
        static_cast<std::int64_t>(pred.terms.size());
    const bool match = outcome.we_reduced.distinct_nonzero_weights() == r &&
                       outcome.we_full.distinct_nonzero_weights() == r;
    rep.add("distinct nonzero weights equal the walsh value count", match,
            "r = " + std::to_string(r));
  } else {
    rep.add("distinct nonzero weights equal the walsh value count", true,
            "not applicable: repeated weights or a zero-count value");
  }

  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

}  // namespace

CertificationReport certify_against(const TraceCode& code,
                                    const ClosedFormPrediction& prediction,
                                    int workers) {
  return certify_impl(code, prediction, workers);
}

CertificationReport certify_against(const ProductTraceCode& code,
                                    const ClosedFormPrediction& prediction,
                                    int workers) {
  return certify_impl(code, prediction, workers);
}

CertificationReport certify(const TraceCode& code, int workers) {
  const ClosedFormPrediction pred = predict_from_spectrum(
      code.report().spectrum, code.t(), code.function().at_zero());
  return certify_against(code, pred, workers);
}

CertificationReport certify(const ProductTraceCode& code, int workers) {
  const ClosedFormPrediction pred = predict_product(
      walsh_spectrum(code.function().factor1()),
      walsh_spectrum(code.function().factor2()), code.t(),
      code.function().factor1().at_zero(), code.function().factor2().at_zero());
  return certify_against(code, pred, workers);
}

}  // namespace bfcode

#include "bfcode/code.hpp"

#include <algorithm>
#include <tuple>

namespace bfcode {

namespace {

std::string report_first_failure(const ConditionReport& rep) {
  for (const auto& it : rep.items)
    if (!it.pass) return it.name + (it.detail.empty() ? "" : " (" + it.detail + ")");
  return "";
}

/// Hypothesis items shared by the single-field and product constructions:
/// the Walsh value at zero must not differ from any other value by -q
/// (that would kill a codeword), and every symbol count
/// (q + w0 - w_j) / 2^(t+1) must be an integer.
void add_spectrum_checks(ConditionReport& rep, const WalshSpectrum& spectrum,
                         std::uint64_t q, int t) {
  const std::int64_t w0 = spectrum.at_zero;
  rep.add("walsh value at zero identified in the spectrum",
          spectrum.entries.count(w0) != 0, "w(0) = " + std::to_string(w0));

  bool no_minus_q = true;
  std::int64_t bad = 0;
  for (const auto& [w, m] : spectrum.entries) {
    if (w0 - w == -static_cast<std::int64_t>(q)) {
      no_minus_q = false;
      bad = w;
    }
  }
  rep.add("w(0) - w_j differs from -q for every walsh value", no_minus_q,
          no_minus_q ? "" : "fails at w_j = " + std::to_string(bad));

  const std::int64_t div = std::int64_t(1) << (t + 1);
  bool integral = true;
  for (const auto& [w, m] : spectrum.entries) {
    if ((static_cast<std::int64_t>(q) + w0 - w) % div != 0) {
      integral = false;
      bad = w;
    }
  }
  rep.add("2^(t+1) divides q + w(0) - w_j for every walsh value", integral,
          integral ? "" : "fails at w_j = " + std::to_string(bad));
}

}  // namespace

std::string HypothesisReport::first_failure() const {
  return report_first_failure(checks);
}

std::string ProductHypothesisReport::first_failure() const {
  return report_first_failure(checks);
}

HypothesisReport validate(const BooleanFunction& f, int t) {
  HypothesisReport out;
  const Field& F = f.field();
  const bool t_ok = t >= 1 && F.degree() % t == 0;
  out.checks.add("t divides n", t_ok,
                 "t = " + std::to_string(t) + ", n = " + std::to_string(F.degree()));
  if (!t_ok) {
    out.ok = false;
    return out;
  }
  out.checks.add("f is constant on every coset of GF(2^t)*",
                 check_coset_invariance(f, t));
  out.spectrum = walsh_spectrum(f);
  out.w_at_zero = out.spectrum.at_zero;
  add_spectrum_checks(out.checks, out.spectrum, F.order(), t);
  out.ok = out.checks.all_pass();
  return out;
}

std::pair<std::vector<Elem>, std::vector<Elem>> defining_sets(
    const BooleanFunction& f, int t) {
  const Field& F = f.field();
  F.check_subfield_degree(t);
  if (!check_coset_invariance(f, t))
    throw Error(Errc::kHypothesisViolation,
                "f is not constant on every coset of GF(2^t)*");
  std::vector<Elem> full;
  full.reserve(F.order() / 2);
  for (Elem x = 1; x < F.order(); ++x)
    if (f(x) == 0) full.push_back(x);
  if (full.empty())
    throw Error(Errc::kEmptyDefiningSet, "f has no nonzero zeros");
  std::vector<Elem> reduced = F.coset_representatives(t, full);
  return {std::move(full), std::move(reduced)};
}

TraceCode::TraceCode(BooleanFunction f, int t, HypothesisReport report)
    : f_(std::move(f)),
      t_(t),
      report_(std::move(report)),
      labeling_(f_.field(), t) {
  const Field& F = f_.field();
  const std::uint64_t q = F.order();
  std::tie(defining_full_, defining_reduced_) = defining_sets(f_, t_);

  // Tr_t^n is additive, so the trace table fills from the bit positions.
  label_of_trace_.assign(q, 0);
  std::vector<Elem> trace_of(q, 0);
  for (int i = 0; i < F.degree(); ++i)
    trace_of[std::uint64_t(1) << i] = F.trace_to(t_, Elem(1) << i);
  for (Elem x = 1; x < q; ++x) {
    const Elem low = x & (~x + 1);
    trace_of[x] = trace_of[x & (x - 1)] ^ trace_of[low];
  }
  for (Elem x = 0; x < q; ++x)
    label_of_trace_[x] = labeling_.label(trace_of[x]);
}

TraceCode TraceCode::build(BooleanFunction f, int t) {
  bool any_zero = false;
  for (Elem x = 1; x < f.field().order() && !any_zero; ++x)
    any_zero = f(x) == 0;
  if (!any_zero)
    throw Error(Errc::kEmptyDefiningSet, "f has no nonzero zeros");
  HypothesisReport report = validate(f, t);
  if (!report.ok) {
    const std::string why = report.first_failure();
    if (why.rfind("t divides", 0) == 0)
      throw Error(Errc::kBadSubfieldDegree, why);
    throw Error(Errc::kHypothesisViolation, why);
  }
  return TraceCode(std::move(f), t, std::move(report));
}

void TraceCode::codeword_full(Elem b, std::vector<std::uint16_t>& out) const {
  const Field& F = f_.field();
  out.resize(defining_full_.size());
  for (std::size_t i = 0; i < defining_full_.size(); ++i)
    out[i] = label_of_trace_[F.mul(b, defining_full_[i])];
}

void TraceCode::codeword_reduced(Elem b, std::vector<std::uint16_t>& out) const {
  const Field& F = f_.field();
  out.resize(defining_reduced_.size());
  for (std::size_t i = 0; i < defining_reduced_.size(); ++i)
    out[i] = label_of_trace_[F.mul(b, defining_reduced_[i])];
}

ProductHypothesisReport validate_product(const ProductFunction& f, int t) {
  ProductHypothesisReport out;
  const Field& F1 = f.factor1().field();
  const Field& F2 = f.factor2().field();
  const bool t_ok = t >= 1 && F1.degree() % t == 0 && F2.degree() % t == 0;
  out.checks.add("t divides gcd(n1, n2)", t_ok,
                 "t = " + std::to_string(t) + ", n1 = " + std::to_string(F1.degree()) +
                     ", n2 = " + std::to_string(F2.degree()));
  if (!t_ok) {
    out.ok = false;
    return out;
  }
  out.checks.add("factor 1 is constant on every coset of GF(2^t)*",
                 check_coset_invariance(f.factor1(), t));
  out.checks.add("factor 2 is constant on every coset of GF(2^t)*",
                 check_coset_invariance(f.factor2(), t));
  out.merged_spectrum = f.spectrum();
  out.omega_at_zero = out.merged_spectrum.at_zero;
  add_spectrum_checks(out.checks, out.merged_spectrum,
                      F1.order() * F2.order(), t);
  out.ok = out.checks.all_pass();
  return out;
}

ProductTraceCode::ProductTraceCode(ProductFunction f, int t,
                                   ProductHypothesisReport report)
    : f_(std::move(f)), t_(t), report_(std::move(report)) {
  const Field& F1 = f_.factor1().field();
  const Field& F2 = f_.factor2().field();
  const std::uint64_t q1 = F1.order();
  const std::uint64_t q2 = F2.order();

  for (Elem x1 = 0; x1 < q1; ++x1)
    for (Elem x2 = 0; x2 < q2; ++x2) {
      if (x1 == 0 && x2 == 0) continue;
      if (f_(x1, x2) == 0) defining_full_.emplace_back(x1, x2);
    }
  if (defining_full_.empty())
    throw Error(Errc::kEmptyDefiningSet, "f has no nonzero zeros");

  // Orbit representatives of the diagonal GF(2^t)^* action, lexicographic
  // minima in ascending order. Every orbit has the full 2^t - 1 size.
  const Elem g1 = F1.subfield_generator(t_);
  const Elem g2 = F2.subfield_generator(t_);
  std::vector<bool> seen(q1 * q2, false);
  for (const auto& [x1, x2] : defining_full_) {
    const std::uint64_t ordinal = std::uint64_t(x1) * q2 + x2;
    if (seen[ordinal]) continue;
    defining_reduced_.emplace_back(x1, x2);
    Elem y1 = x1, y2 = x2;
    do {
      seen[std::uint64_t(y1) * q2 + y2] = true;
      y1 = F1.mul(y1, g1);
      y2 = F2.mul(y2, g2);
    } while (y1 != x1 || y2 != x2);
  }

  const SubfieldLabeling lab1(F1, t_);
  const SubfieldLabeling lab2(F2, t_);
  label_of_trace1_.assign(q1, 0);
  for (Elem x = 0; x < q1; ++x)
    label_of_trace1_[x] = lab1.label(F1.trace_to(t_, x));
  label_of_trace2_.assign(q2, 0);
  for (Elem x = 0; x < q2; ++x)
    label_of_trace2_[x] = lab2.label(F2.trace_to(t_, x));
}

ProductTraceCode ProductTraceCode::build(ProductFunction f, int t) {
  const int total_degree = f.factor1().field().degree() + f.factor2().field().degree();
  if (total_degree > Field::kMaxDegree)
    throw Error(Errc::kBadParams,
                "product space has degree " + std::to_string(total_degree) +
                    ", beyond the supported 24");
  bool any_zero = false;
  const std::uint64_t q1 = f.factor1().field().order();
  const std::uint64_t q2 = f.factor2().field().order();
  for (Elem x1 = 0; x1 < q1 && !any_zero; ++x1)
    for (Elem x2 = 0; x2 < q2 && !any_zero; ++x2)
      any_zero = !(x1 == 0 && x2 == 0) && f(x1, x2) == 0;
  if (!any_zero)
    throw Error(Errc::kEmptyDefiningSet, "f has no nonzero zeros");
  ProductHypothesisReport report = validate_product(f, t);
  if (!report.ok) {
    const std::string why = report.first_failure();
    if (why.rfind("t divides", 0) == 0)
      throw Error(Errc::kBadSubfieldDegree, why);
    if (why.find("constant on every coset") != std::string::npos)
      throw Error(Errc::kProductInvarianceFailed, why);
    throw Error(Errc::kHypothesisViolation, why);
  }
  return ProductTraceCode(std::move(f), t, std::move(report));
}

ProductTraceCode ProductTraceCode::build(BooleanFunction f1, BooleanFunction f2,
                                         int t) {
  return build(ProductFunction(std::move(f1), std::move(f2)), t);
}

int ProductTraceCode::dimension() const {
  return (f_.factor1().field().degree() + f_.factor2().field().degree()) / t_;
}

void ProductTraceCode::fill(const std::vector<std::pair<Elem, Elem>>& coords,
                            Elem b1, Elem b2,
                            std::vector<std::uint16_t>& out) const {
  const Field& F1 = f_.factor1().field();
  const Field& F2 = f_.factor2().field();
  out.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto& [x1, x2] = coords[i];
    // canonical GF(2^t) addition of the two trace labels
    out[i] = static_cast<std::uint16_t>(label_of_trace1_[F1.mul(b1, x1)] ^
                                        label_of_trace2_[F2.mul(b2, x2)]);
  }
}

void ProductTraceCode::codeword_full(std::uint64_t b_ordinal,
                                     std::vector<std::uint16_t>& out) const {
  const std::uint64_t q2 = f_.factor2().field().order();
  fill(defining_full_, static_cast<Elem>(b_ordinal / q2),
       static_cast<Elem>(b_ordinal % q2), out);
}

void ProductTraceCode::codeword_reduced(std::uint64_t b_ordinal,
                                        std::vector<std::uint16_t>& out) const {
  const std::uint64_t q2 = f_.factor2().field().order();
  fill(defining_reduced_, static_cast<Elem>(b_ordinal / q2),
       static_cast<Elem>(b_ordinal % q2), out);
}

}  // namespace bfcode

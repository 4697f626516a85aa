// Command-line front end: walsh, build, certify, families.
//
// Exit codes: 0 success (certify: all comparisons passed), 1 certification
// mismatch, 2 descriptor/input error, 3 field construction error,
// 4 construction hypothesis failure, 5 anything else.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "bfcode/descriptor.hpp"

namespace {

using namespace bfcode;
using nlohmann::json;

struct DescriptorFlags {
  std::string file;
  std::string kind;
  int n = 0;
  std::int64_t d = 0;
  std::string alpha;
  std::string poly;
  std::string table;
  std::string shape;
  std::string coeffs;
  int lambda = -1;
  std::string family_name;
  int h = std::numeric_limits<int>::min();
  std::string f1_json, f2_json;
};

void add_descriptor_flags(CLI::App* cmd, DescriptorFlags& fl) {
  cmd->add_option("--descriptor", fl.file, "read the descriptor document from a JSON file ('-' for stdin)");
  cmd->add_option("--kind", fl.kind, "monomial | raw | quadratic | family | product");
  cmd->add_option("--n", fl.n, "extension degree");
  cmd->add_option("--d", fl.d, "monomial exponent");
  cmd->add_option("--alpha", fl.alpha, "coefficient, lowercase hex");
  cmd->add_option("--poly", fl.poly, "irreducible polynomial override, lowercase hex");
  cmd->add_option("--table", fl.table, "raw truth table, lowercase hex");
  cmd->add_option("--shape", fl.shape, "quadratic shape: general | odd | odd_half | binary_half | single_half");
  cmd->add_option("--coeffs", fl.coeffs, "comma-separated hex coefficients");
  cmd->add_option("--lambda", fl.lambda, "term index for shape single_half");
  cmd->add_option("--name", fl.family_name, "family name");
  cmd->add_option("--h", fl.h, "family parameter h");
  cmd->add_option("--f1", fl.f1_json, "first factor descriptor (inline JSON)");
  cmd->add_option("--f2", fl.f2_json, "second factor descriptor (inline JSON)");
}

FunctionDescriptor descriptor_from_flags(const DescriptorFlags& fl) {
  if (!fl.file.empty()) {
    std::string text;
    if (fl.file == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(fl.file);
      if (!in) throw Error(Errc::kParseError, "cannot read " + fl.file);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    return parse_descriptor_text(text);
  }
  json doc;
  doc["kind"] = fl.kind;
  if (fl.kind == "product") {
    if (fl.f1_json.empty() || fl.f2_json.empty())
      throw Error(Errc::kParseError, "product needs --f1 and --f2");
    try {
      doc["f1"] = json::parse(fl.f1_json);
      doc["f2"] = json::parse(fl.f2_json);
    } catch (const json::parse_error& e) {
      throw Error(Errc::kParseError, e.what());
    }
    return parse_descriptor(doc);
  }
  doc["n"] = fl.n;
  if (!fl.poly.empty()) doc["poly_hex"] = fl.poly;
  if (fl.kind == "monomial") {
    doc["d"] = fl.d;
    doc["alpha_hex"] = fl.alpha;
  } else if (fl.kind == "raw") {
    doc["truth_table_hex"] = fl.table;
  } else if (fl.kind == "quadratic") {
    doc["shape"] = fl.shape;
    json arr = json::array();
    if (!fl.coeffs.empty()) {
      std::stringstream ss(fl.coeffs);
      std::string item;
      while (std::getline(ss, item, ',')) arr.push_back(item);
    }
    doc["coeffs_hex"] = arr;
    if (fl.lambda >= 0) doc["lambda"] = fl.lambda;
  } else if (fl.kind == "family") {
    doc["name"] = fl.family_name;
    json params = json::object();
    if (fl.h != std::numeric_limits<int>::min()) params["h"] = fl.h;
    if (!fl.alpha.empty()) params["alpha_hex"] = fl.alpha;
    doc["params"] = params;
  }
  return parse_descriptor(doc);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw Error(Errc::kParseError, "cannot write " + path);
  return file;
}

int run_walsh(const DescriptorFlags& fl, bool as_json, bool dump_values) {
  const FunctionDescriptor desc = descriptor_from_flags(fl);
  const BuiltFunction built = build_function(desc);
  const json doc = spectrum_document(desc, built);
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (built.is_product()) {
    std::cout << "function: product over GF(2^"
              << built.product().factor1().field().degree() << ") x GF(2^"
              << built.product().factor2().field().degree() << ")\n";
  } else {
    const BooleanFunction& f = built.single();
    std::cout << "function: " << f.descriptor().text() << " on GF(2^"
              << f.field().degree() << "), poly "
              << to_hex(f.field().modulus()) << "\n";
  }
  std::cout << "W(0) = " << doc.at("w_at_zero").get<std::int64_t>() << "\n";
  std::cout << "spectrum: " << doc.at("spectrum_text").get<std::string>() << "\n";
  if (doc.count("classification"))
    std::cout << "classification: " << doc.at("classification").get<std::string>() << "\n";
  std::cout << "admissible t:";
  for (const auto& t : doc.at("admissible_t")) std::cout << " " << t;
  std::cout << "\n";
  if (built.family) {
    std::cout << "family " << built.family->family << " conditions:\n"
              << built.family->conditions.to_string();
  }
  if (dump_values && !built.is_product()) {
    const BooleanFunction& f = built.single();
    if (f.field().degree() > 20) {
      std::cout << "(value dump skipped: n > 20)\n";
    } else {
      const auto values = walsh_full(f);
      for (std::size_t y = 0; y < values.size(); ++y)
        std::cout << to_hex(y) << " " << values[y] << "\n";
    }
  }
  return 0;
}

std::string b_key(const TraceCode&, std::uint64_t b) { return to_hex(b); }
std::string b_key(const ProductTraceCode& code, std::uint64_t b) {
  const std::uint64_t q2 = code.function().factor2().field().order();
  return to_hex(b / q2) + ":" + to_hex(b % q2);
}

void fill_word(const TraceCode& code, std::uint64_t b, bool reduced,
               std::vector<std::uint16_t>& word) {
  if (reduced)
    code.codeword_reduced(static_cast<Elem>(b), word);
  else
    code.codeword_full(static_cast<Elem>(b), word);
}

void fill_word(const ProductTraceCode& code, std::uint64_t b, bool reduced,
               std::vector<std::uint16_t>& word) {
  if (reduced)
    code.codeword_reduced(b, word);
  else
    code.codeword_full(b, word);
}

template <class Code>
void emit_csv(const Code& code, bool reduced, int workers, std::ostream& out) {
  const std::uint64_t total = code.code_size();
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);
  std::vector<std::string> chunks(static_cast<std::size_t>(workers));
  // Deterministic for any worker count: fixed ranges, in-order concatenation.
  auto render = [&](int k) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(k) / static_cast<std::uint64_t>(workers);
    const std::uint64_t end = total * static_cast<std::uint64_t>(k + 1) / static_cast<std::uint64_t>(workers);
    std::string buf;
    std::vector<std::uint16_t> word;
    for (std::uint64_t b = begin; b < end; ++b) {
      fill_word(code, b, reduced, word);
      buf += b_key(code, b);
      for (std::uint16_t s : word) {
        buf += ',';
        buf += to_hex(s);
      }
      buf += '\n';
    }
    chunks[static_cast<std::size_t>(k)] = std::move(buf);
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < workers; ++k) pool.emplace_back(render, k);
  render(0);
  for (auto& th : pool) th.join();
  for (const auto& c : chunks) out << c;
}

std::vector<std::uint64_t> basis_ordinals(const TraceCode& code) {
  // GF(2^n) is a GF(2^t)-space with basis 1, x, ..., x^(n/t - 1).
  std::vector<std::uint64_t> out;
  for (int j = 0; j < code.dimension(); ++j)
    out.push_back(std::uint64_t(1) << (j));
  return out;
}

std::vector<std::uint64_t> basis_ordinals(const ProductTraceCode& code) {
  const Field& f1 = code.function().factor1().field();
  const Field& f2 = code.function().factor2().field();
  const int t = code.t();
  std::vector<std::uint64_t> out;
  for (int j = 0; j < f1.degree() / t; ++j)
    out.push_back((std::uint64_t(1) << j) * f2.order());
  for (int j = 0; j < f2.degree() / t; ++j)
    out.push_back(std::uint64_t(1) << j);
  return out;
}

template <class Code>
void emit_genmatrix(const Code& code, bool reduced, std::ostream& out) {
  const auto rows = basis_ordinals(code);
  const std::uint64_t len = reduced ? code.reduced_length() : code.full_length();
  out << rows.size() << " " << len << " " << code.t() << "\n";
  std::vector<std::uint16_t> word;
  for (std::uint64_t b : rows) {
    fill_word(code, b, reduced, word);
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) out << " ";
      out << to_hex(word[i]);
    }
    out << "\n";
  }
}

json hypotheses_json(const ConditionReport& rep) {
  return condition_report_document(rep);
}

template <class Code>
json build_summary(const FunctionDescriptor& desc, const Code& code,
                   const WalshSpectrum& spectrum, const ConditionReport& checks) {
  json doc;
  doc["descriptor"] = serialize_descriptor(desc);
  doc["t"] = code.t();
  doc["length_full"] = code.full_length();
  doc["length_reduced"] = code.reduced_length();
  doc["dimension"] = code.dimension();
  doc["code_size"] = code.code_size();
  json spec = json::array();
  for (const auto& [w, m] : spectrum.entries) spec.push_back(json::array({w, m}));
  doc["spectrum"] = spec;
  doc["hypotheses"] = hypotheses_json(checks);
  return doc;
}

int run_build(const DescriptorFlags& fl, int t, bool reduced,
              const std::string& emit, const std::string& out_path,
              int workers) {
  const FunctionDescriptor desc = descriptor_from_flags(fl);
  const BuiltFunction built = build_function(desc);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);

  if (built.is_product()) {
    const ProductHypothesisReport rep = validate_product(built.product(), t);
    if (!rep.ok) {
      std::cerr << "construction hypotheses failed:\n" << rep.checks.to_string();
      return 4;
    }
    const ProductTraceCode code = ProductTraceCode::build(built.product(), t);
    if (emit == "csv") emit_csv(code, reduced, workers, out);
    else if (emit == "genmatrix") emit_genmatrix(code, reduced, out);
    else out << build_summary(desc, code, rep.merged_spectrum, rep.checks).dump(2) << "\n";
    return 0;
  }

  const HypothesisReport rep = validate(built.single(), t);
  if (!rep.ok) {
    std::cerr << "construction hypotheses failed:\n" << rep.checks.to_string();
    return 4;
  }
  const TraceCode code = TraceCode::build(built.single(), t);
  if (emit == "csv") emit_csv(code, reduced, workers, out);
  else if (emit == "genmatrix") emit_genmatrix(code, reduced, out);
  else out << build_summary(desc, code, rep.spectrum, rep.checks).dump(2) << "\n";
  return 0;
}

int run_certify(const DescriptorFlags& fl, int t, bool as_json, int workers) {
  const FunctionDescriptor desc = descriptor_from_flags(fl);
  const BuiltFunction built = build_function(desc);
  CertificationReport rep;
  std::uint64_t q;
  if (built.is_product()) {
    const ProductTraceCode code = ProductTraceCode::build(built.product(), t);
    q = code.code_size();
    rep = certify(code, workers);
  } else {
    const TraceCode code = TraceCode::build(built.single(), t);
    q = code.code_size();
    rep = certify(code, workers);
  }
  if (as_json) {
    std::cout << certification_document(rep, /*with_timing=*/false).dump(2) << "\n";
  } else {
    std::cout << "certification of t=" << t << " code, q=" << q << ", [" << rep.n_reduced
              << ", " << rep.dimension << "] reduced / [" << rep.n_tilde << ", "
              << rep.dimension << "] full\n"
              << rep.to_text();
  }
  // Timing goes to stderr so artifact bytes stay deterministic.
  std::cerr << "timing: q=" << q << " N=" << rep.n_reduced
            << " wall_ms=" << rep.wall_ms << " workers=" << rep.workers << "\n";
  return rep.ok ? 0 : 1;
}

int run_families(const std::string& action, const std::string& name,
                 std::uint64_t n, std::uint64_t l, int h, std::int64_t d,
                 int t, const std::string& alpha_hex) {
  if (action == "list") {
    std::cout << "bent monomial families (f = Tr(alpha x^d), n = 2m):\n";
    for (const auto& f : list_bent_families())
      std::cout << "  " << f.name << ": d = " << f.exponent_formula
                << "; conditions: " << f.conditions << "\n";
    std::cout << "three-valued monomial series (f = Tr(x^d)):\n";
    for (const auto& f : list_semibent_series())
      std::cout << "  " << f.name << ": d = " << f.exponent_formula
                << "; conditions: " << f.conditions << "; A = " << f.amplitude
                << "\n";
    std::cout << "quadratic shapes:\n";
    for (const auto& f : list_quadratic_shapes())
      std::cout << "  " << f.name << ": " << f.exponent_formula << "; "
                << f.conditions << "\n";
    return 0;
  }
  if (action != "conditions") {
    std::cerr << "unknown action \"" << action << "\" (use list or conditions)\n";
    return 2;
  }

  if (name == "series6") {
    const Series6Conditions res = series6_conditions(l, n);
    std::cout << "series6 with l = " << l << ", n = " << n << ": h = " << res.h
              << "\n"
              << res.report.to_string()
              << (res.ok ? "all conditions hold\n" : "conditions fail\n");
    return 0;
  }

  ConditionReport rep;
  std::uint64_t dd = static_cast<std::uint64_t>(d);
  const bool have_alpha = !alpha_hex.empty();
  if (h != std::numeric_limits<int>::min() && (h < 1 || h > 31)) {
    std::cerr << "--h must lie in [1, 31]\n";
    return 2;
  }
  if (name == "gold" || name == "series1") {
    if (h == std::numeric_limits<int>::min()) {
      std::cerr << "--h required\n";
      return 2;
    }
    dd = (std::uint64_t(1) << h) + 1;
    if (name == "gold")
      rep.add("n/gcd(n,h) is odd",
              (n / std::gcd<std::uint64_t>(n, static_cast<std::uint64_t>(h))) % 2 == 1);
    else
      rep.add("v2(h) >= v2(n)",
              v2(static_cast<std::uint64_t>(h)) >= v2(n));
  } else if (name == "kasami" || name == "series2") {
    if (h == std::numeric_limits<int>::min()) {
      std::cerr << "--h required\n";
      return 2;
    }
    dd = (std::uint64_t(1) << (2 * h)) - (std::uint64_t(1) << h) + 1;
    if (name == "kasami") {
      rep.add("3 does not divide m", (n / 2) % 3 != 0);
      rep.add("gcd(h, n) = 1",
              std::gcd<std::uint64_t>(static_cast<std::uint64_t>(h), n) == 1);
    } else {
      rep.add("v2(h) >= v2(n)", v2(static_cast<std::uint64_t>(h)) >= v2(n));
    }
  } else if (name == "dillon") {
    rep.add("n = 2m", n % 2 == 0);
    dd = (std::uint64_t(1) << (n / 2)) - 1;
  } else if (name == "leander") {
    if (h == std::numeric_limits<int>::min()) {
      std::cerr << "--h required\n";
      return 2;
    }
    rep.add("n = 4h", n == 4 * static_cast<std::uint64_t>(h));
    rep.add("h is odd", h % 2 == 1);
    const std::uint64_t b = (std::uint64_t(1) << h) + 1;
    dd = b * b;
  } else if (name == "cck") {
    if (h == std::numeric_limits<int>::min()) {
      std::cerr << "--h required\n";
      return 2;
    }
    rep.add("n = 6h", n == 6 * static_cast<std::uint64_t>(h));
    dd = (std::uint64_t(1) << (2 * h)) + (std::uint64_t(1) << h) + 1;
  } else if (name == "series3" || name == "series4" || name == "series5") {
    const bool even = name != "series5";
    if (even) {
      rep.add("n = 2m with m odd", n % 2 == 0 && (n / 2) % 2 == 1);
      const std::uint64_t m = n / 2;
      dd = name == "series3" ? (std::uint64_t(1) << m) + (std::uint64_t(1) << ((m - 1) / 2)) + 1
                             : (std::uint64_t(1) << ((m + 1) / 2)) + 3;
    } else {
      rep.add("n = 2m + 1", n % 2 == 1);
      dd = (std::uint64_t(1) << ((n - 1) / 2)) + 3;
    }
  } else {
    std::cerr << "unknown family \"" << name << "\"\n";
    return 2;
  }

  std::cout << name << ": d = " << dd << "\n";
  if (t > 0)
    rep.add("t | n and (2^t - 1) | d", divisibility_condition(n, dd, t),
            "t = " + std::to_string(t));
  if (have_alpha && n >= Field::kMinDegree &&
      n <= static_cast<std::uint64_t>(Field::kMaxDegree)) {
    // Alpha-dependent rows need the field; integer rows above never do.
    auto field = std::make_shared<Field>(static_cast<int>(n));
    if (auto kind = bent_kind_from_name(name)) {
      const FamilyFunction fam = monomial_bent(
          field, *kind, h == std::numeric_limits<int>::min() ? 0 : h,
          static_cast<Elem>(parse_hex(alpha_hex)));
      for (const auto& item : fam.conditions.items) rep.items.push_back(item);
    }
  }
  std::cout << rep.to_string();
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"linear codes over GF(2^t) from boolean functions on GF(2^n)"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // keep --h free for the family parameter

  DescriptorFlags fl;
  bool as_json = false, dump_values = false, reduced = false, full = false;
  int t = 1, workers = 1;
  std::string emit = "json", out_path, action, name, alpha_hex;
  std::uint64_t fam_n = 0, fam_l = 0;
  int fam_h = std::numeric_limits<int>::min();
  std::int64_t fam_d = 0;
  int fam_t = 0;

  CLI::App* walsh = app.add_subcommand("walsh", "walsh spectrum of a function");
  walsh->set_help_flag("--help", "print help");
  add_descriptor_flags(walsh, fl);
  walsh->add_flag("--json", as_json, "emit the JSON document");
  walsh->add_flag("--dump-values", dump_values, "print all q walsh values (n <= 20)");

  CLI::App* build = app.add_subcommand("build", "build the code and emit artifacts");
  build->set_help_flag("--help", "print help");
  add_descriptor_flags(build, fl);
  build->add_option("--t", t, "subfield degree")->required();
  build->add_flag("--reduced", reduced, "emit the reduced code (default: full)");
  build->add_flag("--full", full, "emit the full code");
  build->add_option("--emit", emit, "csv | genmatrix | json")
      ->check(CLI::IsMember({"csv", "genmatrix", "json"}));
  build->add_option("--out", out_path, "output file (default: stdout)");
  build->add_option("--workers", workers, "parallel enumeration workers");

  CLI::App* certify_cmd = app.add_subcommand("certify", "closed forms vs brute force");
  certify_cmd->set_help_flag("--help", "print help");
  add_descriptor_flags(certify_cmd, fl);
  certify_cmd->add_option("--t", t, "subfield degree")->required();
  certify_cmd->add_flag("--json", as_json, "emit the JSON document");
  certify_cmd->add_option("--workers", workers, "parallel enumeration workers");

  CLI::App* families = app.add_subcommand("families", "list families / evaluate conditions");
  families->set_help_flag("--help", "print help");
  families->add_option("action", action, "list | conditions")->required();
  families->add_option("--name", name, "family name");
  families->add_option("--n", fam_n, "extension degree (any size)");
  families->add_option("--l", fam_l, "series6 index l");
  families->add_option("--h", fam_h, "family parameter h");
  families->add_option("--d", fam_d, "explicit exponent");
  families->add_option("--t", fam_t, "check t | n and (2^t - 1) | d");
  families->add_option("--alpha", alpha_hex, "alpha, lowercase hex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (walsh->parsed()) return run_walsh(fl, as_json, dump_values);
  if (build->parsed()) {
    if (reduced && full) throw Error(Errc::kParseError, "choose --full or --reduced");
    return run_build(fl, t, reduced, emit, out_path, workers);
  }
  if (certify_cmd->parsed()) return run_certify(fl, t, as_json, workers);
  if (families->parsed())
    return run_families(action, name, fam_n, fam_l, fam_h, fam_d, fam_t, alpha_hex);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::kParseError:
      case Errc::kUnknownFamily:
      case Errc::kBadParams:
      case Errc::kBadShape:
      case Errc::kCoeffFieldViolation:
      case Errc::kAlphaNotInSubfield:
        return 2;
      case Errc::kUnsupportedN:
      case Errc::kDegreeMismatch:
      case Errc::kReduciblePoly:
        return 3;
      case Errc::kHypothesisViolation:
      case Errc::kProductInvarianceFailed:
      case Errc::kBadSubfieldDegree:
      case Errc::kNotCosetClosed:
      case Errc::kEmptyDefiningSet:
      case Errc::kNonIntegerMultiplicity:
        return 4;
      default:
        return 5;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bfcode/descriptor.hpp"

namespace py = pybind11;
using namespace bfcode;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items())
        out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

py::dict spectrum_to_py(const WalshSpectrum& s) {
  py::dict entries;
  for (const auto& [w, m] : s.entries) entries[py::int_(w)] = py::int_(m);
  py::dict out;
  out["entries"] = entries;
  out["at_zero"] = s.at_zero;
  out["text"] = s.to_string();
  return out;
}

WalshSpectrum spectrum_from_py(const py::dict& entries, std::int64_t at_zero) {
  WalshSpectrum s;
  for (const auto& item : entries)
    s.entries[item.first.cast<std::int64_t>()] = item.second.cast<std::int64_t>();
  s.at_zero = at_zero;
  return s;
}

py::dict prediction_to_py(const ClosedFormPrediction& pred) {
  py::dict out;
  out["source"] = pred.source;
  out["length_full"] = pred.n_tilde;
  out["length_reduced"] = pred.n_reduced;
  out["dimension"] = pred.dimension;
  out["w_at_zero"] = pred.w_at_zero;
  out["we_full"] = json_to_py(
      enumerator_document(pred.we_full, pred.has_cwe ? &pred.cwe_full : nullptr,
                          pred.dimension, "closed-form/" + pred.source));
  out["we_reduced"] = json_to_py(enumerator_document(
      pred.we_reduced, nullptr, pred.dimension, "closed-form/" + pred.source));
  return out;
}

py::dict outcome_to_py(const BruteForceOutcome& o, int dimension) {
  py::dict out;
  out["cwe_full"] = json_to_py(
      enumerator_document(o.we_full, &o.cwe_full, dimension, "bruteforce"));
  out["we_full"] =
      json_to_py(enumerator_document(o.we_full, nullptr, dimension, "bruteforce"));
  out["we_reduced"] = json_to_py(
      enumerator_document(o.we_reduced, nullptr, dimension, "bruteforce"));
  out["scaling_ok"] = o.scaling_ok;
  out["constancy_ok"] = o.constancy_ok;
  out["distinct"] = o.zero_only_from_zero;
  return out;
}

template <class Rep>
py::object report_items(const Rep& rep) {
  return json_to_py(condition_report_document(rep));
}

}  // namespace

PYBIND11_MODULE(_bfcode, m) {
  m.doc() = "linear codes over GF(2^t) from boolean functions on GF(2^n)";

  py::register_exception<Error>(m, "BfcodeError");

  py::class_<Field, std::shared_ptr<Field>>(m, "Field")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, std::uint32_t>(), py::arg("n"), py::arg("poly"))
      .def_property_readonly("n", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("poly", &Field::modulus)
      .def_property_readonly("generator", &Field::generator)
      .def("add", &Field::add)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("trace", &Field::trace)
      .def("trace_to", &Field::trace_to, py::arg("t"), py::arg("x"))
      .def("in_subfield", &Field::in_subfield, py::arg("t"), py::arg("x"))
      .def("subfield", &Field::subfield, py::arg("t"))
      .def("subfield_generator", &Field::subfield_generator, py::arg("t"))
      .def("coset_representatives", &Field::coset_representatives, py::arg("t"),
           py::arg("set"))
      .def("multiplicative_order", &Field::multiplicative_order)
      .def("basis", &Field::basis)
      .def("dual_basis", &Field::dual_basis)
      .def_static("default_poly", &Field::default_modulus, py::arg("n"));

  py::class_<BooleanFunction>(m, "BooleanFunction")
      .def_static(
          "constant",
          [](std::shared_ptr<Field> f, int bit) {
            return BooleanFunction::constant(std::move(f), bit);
          },
          py::arg("field"), py::arg("bit"))
      .def_static(
          "monomial",
          [](std::shared_ptr<Field> f, std::uint64_t d, Elem alpha) {
            return BooleanFunction::monomial(std::move(f), d, alpha);
          },
          py::arg("field"), py::arg("d"), py::arg("alpha"))
      .def_static(
          "from_hex",
          [](std::shared_ptr<Field> f, const std::string& hex) {
            return BooleanFunction::from_hex(std::move(f), hex);
          },
          py::arg("field"), py::arg("hex"))
      .def("__call__", &BooleanFunction::operator())
      .def_property_readonly("n",
                             [](const BooleanFunction& f) { return f.field().degree(); })
      .def_property_readonly("at_zero", &BooleanFunction::at_zero)
      .def("to_hex", &BooleanFunction::to_hex)
      .def_property_readonly(
          "descriptor_text",
          [](const BooleanFunction& f) { return f.descriptor().text(); });

  m.def(
      "quadratic_function",
      [](std::shared_ptr<Field> f, const std::vector<Elem>& coeffs) {
        return quadratic_function(std::move(f), coeffs);
      },
      py::arg("field"), py::arg("coeffs"));
  m.def(
      "quadratic_binary_shape",
      [](std::shared_ptr<Field> f, const std::vector<int>& bits) {
        return quadratic_binary_shape(std::move(f), bits);
      },
      py::arg("field"), py::arg("c_bits"));
  m.def("quadratic_bent_criterion", &quadratic_bent_criterion, py::arg("m"),
        py::arg("c_bits"));

  m.def("walsh_naive", &walsh_naive, py::arg("f"), py::arg("y"));
  m.def("walsh_full", &walsh_full, py::arg("f"));
  m.def(
      "walsh_spectrum",
      [](const BooleanFunction& f) { return spectrum_to_py(walsh_spectrum(f)); },
      py::arg("f"));
  m.def("check_coset_invariance", &check_coset_invariance, py::arg("f"),
        py::arg("t"));
  m.def("admissible_subfields", &admissible_subfields, py::arg("f"));

  py::class_<FamilyFunction>(m, "FamilyFunction")
      .def_property_readonly("fn",
                             [](const FamilyFunction& f) { return f.fn; })
      .def_property_readonly("family",
                             [](const FamilyFunction& f) { return f.family; })
      .def_property_readonly("exponent",
                             [](const FamilyFunction& f) { return f.exponent; })
      .def_property_readonly(
          "conditions",
          [](const FamilyFunction& f) { return report_items(f.conditions); })
      .def_property_readonly(
          "conditions_pass",
          [](const FamilyFunction& f) { return f.conditions.all_pass(); })
      .def_property_readonly(
          "spectrum", [](const FamilyFunction& f) { return spectrum_to_py(f.spectrum); })
      .def_property_readonly(
          "certified_bent",
          [](const FamilyFunction& f) { return f.certified_bent; })
      .def_property_readonly("epsilon",
                             [](const FamilyFunction& f) { return f.epsilon; })
      .def_property_readonly("predicted_amplitude", [](const FamilyFunction& f) {
        return f.predicted_amplitude;
      });

  m.def(
      "monomial_bent",
      [](std::shared_ptr<Field> f, const std::string& kind, int h, Elem alpha) {
        auto k = bent_kind_from_name(kind);
        if (!k) throw Error(Errc::kUnknownFamily, "unknown family " + kind);
        return monomial_bent(std::move(f), *k, h, alpha);
      },
      py::arg("field"), py::arg("kind"), py::arg("h"), py::arg("alpha"));
  m.def(
      "semibent_monomial",
      [](std::shared_ptr<Field> f, int series, int h) {
        return semibent_monomial(std::move(f), series, h);
      },
      py::arg("field"), py::arg("series"), py::arg("h") = 0);
  m.def("dillon_condition", &dillon_condition, py::arg("field"), py::arg("m"),
        py::arg("alpha"));
  m.def(
      "three_value_multiplicities",
      [](std::uint64_t q, std::int64_t a, int sign) {
        const auto v = three_value_multiplicities(q, a, sign);
        return py::make_tuple(v.m_zero, v.m_plus, v.m_minus);
      },
      py::arg("q"), py::arg("a"), py::arg("f0_sign"));
  m.def(
      "series6_conditions",
      [](std::uint64_t l, std::uint64_t n) {
        const auto res = series6_conditions(l, n);
        py::dict out;
        out["h"] = res.h;
        out["ok"] = res.ok;
        out["items"] = report_items(res.report);
        return out;
      },
      py::arg("l"), py::arg("n"));
  m.def("divisibility_condition", &divisibility_condition, py::arg("n"),
        py::arg("d"), py::arg("t"));
  m.def("v2", &v2, py::arg("b"));

  py::class_<ProductFunction>(m, "ProductFunction")
      .def(py::init<BooleanFunction, BooleanFunction>(), py::arg("f1"),
           py::arg("f2"))
      .def("__call__", &ProductFunction::operator())
      .def_property_readonly("spectrum", [](const ProductFunction& f) {
        return spectrum_to_py(f.spectrum());
      });

  py::class_<TraceCode>(m, "TraceCode")
      .def_static("build", &TraceCode::build, py::arg("f"), py::arg("t"))
      .def_property_readonly("t", &TraceCode::t)
      .def_property_readonly("dimension", &TraceCode::dimension)
      .def_property_readonly("length_full", &TraceCode::full_length)
      .def_property_readonly("length_reduced", &TraceCode::reduced_length)
      .def_property_readonly("code_size", &TraceCode::code_size)
      .def_property_readonly("defining_set_full", &TraceCode::defining_set_full)
      .def_property_readonly("defining_set_reduced",
                             &TraceCode::defining_set_reduced)
      .def_property_readonly("w_at_zero", &TraceCode::w_at_zero)
      .def_property_readonly(
          "hypotheses",
          [](const TraceCode& c) { return report_items(c.report().checks); })
      .def("codeword_full",
           [](const TraceCode& c, Elem b) {
             std::vector<std::uint16_t> word;
             c.codeword_full(b, word);
             return word;
           })
      .def("codeword_reduced", [](const TraceCode& c, Elem b) {
        std::vector<std::uint16_t> word;
        c.codeword_reduced(b, word);
        return word;
      });

  py::class_<ProductTraceCode>(m, "ProductTraceCode")
      .def_static(
          "build",
          [](const BooleanFunction& f1, const BooleanFunction& f2, int t) {
            return ProductTraceCode::build(f1, f2, t);
          },
          py::arg("f1"), py::arg("f2"), py::arg("t"))
      .def_property_readonly("t", &ProductTraceCode::t)
      .def_property_readonly("dimension", &ProductTraceCode::dimension)
      .def_property_readonly("length_full", &ProductTraceCode::full_length)
      .def_property_readonly("length_reduced", &ProductTraceCode::reduced_length)
      .def_property_readonly("code_size", &ProductTraceCode::code_size)
      .def("codeword_full",
           [](const ProductTraceCode& c, std::uint64_t b) {
             std::vector<std::uint16_t> word;
             c.codeword_full(b, word);
             return word;
           })
      .def("codeword_reduced", [](const ProductTraceCode& c, std::uint64_t b) {
        std::vector<std::uint16_t> word;
        c.codeword_reduced(b, word);
        return word;
      });

  m.def(
      "defining_sets",
      [](const BooleanFunction& f, int t) {
        const auto [full, reduced] = defining_sets(f, t);
        return py::make_tuple(full, reduced);
      },
      py::arg("f"), py::arg("t"));
  m.def(
      "validate",
      [](const BooleanFunction& f, int t) {
        const auto rep = validate(f, t);
        py::dict out;
        out["ok"] = rep.ok;
        out["items"] = report_items(rep.checks);
        out["w_at_zero"] = rep.w_at_zero;
        return out;
      },
      py::arg("f"), py::arg("t"));

  m.def(
      "enumerate_code",
      [](const TraceCode& c, int workers) {
        return outcome_to_py(enumerate_code(c, workers), c.dimension());
      },
      py::arg("code"), py::arg("workers") = 1);
  m.def(
      "enumerate_product_code",
      [](const ProductTraceCode& c, int workers) {
        return outcome_to_py(enumerate_code(c, workers), c.dimension());
      },
      py::arg("code"), py::arg("workers") = 1);

  m.def(
      "predict_from_spectrum",
      [](const py::dict& entries, std::int64_t at_zero, int t, int f0) {
        return prediction_to_py(
            predict_from_spectrum(spectrum_from_py(entries, at_zero), t, f0));
      },
      py::arg("entries"), py::arg("at_zero"), py::arg("t"), py::arg("f0"));
  m.def(
      "predict_bent",
      [](int n, int f0, int epsilon, int t) {
        return prediction_to_py(predict_bent(n, f0, epsilon, t));
      },
      py::arg("n"), py::arg("f0"), py::arg("epsilon"), py::arg("t"));
  m.def(
      "predict_three_valued",
      [](std::uint64_t q, std::int64_t a, int f0, std::int64_t w0, int t) {
        return prediction_to_py(predict_three_valued(q, a, f0, w0, t));
      },
      py::arg("q"), py::arg("a"), py::arg("f0"), py::arg("w_at_zero"),
      py::arg("t"));
  m.def(
      "predict_product",
      [](const py::dict& e1, std::int64_t z1, const py::dict& e2,
         std::int64_t z2, int t, int f1_0, int f2_0) {
        return prediction_to_py(predict_product(spectrum_from_py(e1, z1),
                                                spectrum_from_py(e2, z2), t,
                                                f1_0, f2_0));
      },
      py::arg("entries1"), py::arg("at_zero1"), py::arg("entries2"),
      py::arg("at_zero2"), py::arg("t"), py::arg("f1_0"), py::arg("f2_0"));

  m.def(
      "certify",
      [](const TraceCode& c, int workers) {
        return json_to_py(certification_document(certify(c, workers), true));
      },
      py::arg("code"), py::arg("workers") = 1);
  m.def(
      "certify_product",
      [](const ProductTraceCode& c, int workers) {
        return json_to_py(certification_document(certify(c, workers), true));
      },
      py::arg("code"), py::arg("workers") = 1);

  m.def(
      "build_from_descriptor",
      [](const std::string& text) {
        const auto desc = parse_descriptor_text(text);
        const auto built = build_function(desc);
        if (built.is_product())
          return py::object(py::cast(built.product()));
        return py::object(py::cast(built.single()));
      },
      py::arg("descriptor_json"));
  m.def(
      "descriptor_roundtrip",
      [](const std::string& text) {
        return serialize_descriptor(parse_descriptor_text(text)).dump();
      },
      py::arg("descriptor_json"));
  m.def(
      "spectrum_report",
      [](const std::string& text) {
        const auto desc = parse_descriptor_text(text);
        const auto built = build_function(desc);
        return json_to_py(spectrum_document(desc, built));
      },
      py::arg("descriptor_json"));
}

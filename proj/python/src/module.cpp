#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "otbook/kirby.hpp"
#include "otbook/report.hpp"

namespace py = pybind11;
using namespace otbook;
using io::Json;

namespace {

// Structured results cross the boundary as JSON text; the Python side decodes
// them and turns rational strings into fractions.Fraction.
std::string dump(const Json& j) { return j.dump(); }

std::pair<Integer, Integer> pq(const lens::LensSpace& l) { return {l.p, l.q}; }

std::optional<std::string> cf_evaluate(const std::vector<Integer>& coeffs) {
  const auto v = lens::cf_evaluate(coeffs);
  if (!v) return std::nullopt;
  return v->str();
}

std::optional<std::string> prove(const std::string& word_json) {
  const auto cert = veering::prove_right_veering(io::word_from_json(Json::parse(word_json)));
  if (!cert) return std::nullopt;
  return dump(io::to_json(*cert));
}

std::string check(const std::string& cert_json, const std::optional<std::string>& word_json) {
  std::optional<mcg::TwistWord> expected;
  if (word_json) expected = io::word_from_json(Json::parse(*word_json));
  return dump(io::to_json(veering::check_certificate(io::certificate_from_json(Json::parse(cert_json)), expected)));
}

std::string tight_census(Integer p, Integer q) {
  Json out = Json::array();
  for (const auto& t : census::tight_census(lens::LensSpace::make(p, q))) out.push_back(io::to_json(t));
  return dump(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of otbook";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<IllegalMove> illegal(m, "IllegalMove", base.ptr());
  static py::exception<InvariantViolation> violation(m, "InvariantViolation", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const LookupError& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    } catch (const IllegalMove& e) {
      py::set_error(illegal, e.what());
    } catch (const InvariantViolation& e) {
      py::set_error(violation, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("phi_word", [](Integer h, Integer k) { return dump(io::to_json(mcg::phi_word(h, k))); });
  m.def("family_lens", [](Integer h, Integer k) { return pq(lens::family_lens(h, k)); });
  m.def("neg_cf_expand", [](const std::string& x) { return lens::neg_cf_expand(Rational::parse(x)); });
  m.def("cf_evaluate", &cf_evaluate);
  m.def("chain_to_lens", [](const std::vector<Integer>& f) { return pq(lens::chain_to_lens(f)); });
  m.def("lens_equal", [](Integer p1, Integer q1, Integer p2, Integer q2, bool oriented) {
    return lens::lens_equal(lens::LensSpace::make(p1, q1), lens::LensSpace::make(p2, q2), oriented);
  });
  m.def("presentation_for", [](Integer h, Integer k) { return dump(io::to_json(contact::presentation_for(h, k))); });
  m.def("reduce_family_diagram", [](Integer h, Integer k, bool with_log) {
    return dump(io::to_json(kirby::reduce_family_diagram(h, k), with_log));
  });
  m.def("family_script", [](Integer h, Integer k) { return dump(io::script_to_json(kirby::family_script(h, k))); });
  m.def("replay", [](const std::string& diagram_json, const std::string& script_json) {
    const auto d = io::diagram_from_json(Json::parse(diagram_json));
    const auto s = io::script_from_json(Json::parse(script_json));
    return dump(io::to_json(kirby::replay(d, s), true));
  });
  m.def("d3_family", [](Integer h, Integer k) { return dump(io::to_json(census::overtwisted_verdict(h, k).data)); });
  m.def("tight_census", &tight_census);
  m.def("overtwisted_verdict", [](Integer h, Integer k) { return dump(io::to_json(census::overtwisted_verdict(h, k))); });
  m.def("prove_right_veering", &prove);
  m.def("check_certificate", &check, py::arg("cert"), py::arg("word") = std::nullopt);
  m.def("arikan_tight", &veering::arikan_tight);
  m.def("run_family", [](Integer h, Integer k, bool verbose) {
    return dump(report::to_json(report::run_family(h, k), verbose));
  });
}

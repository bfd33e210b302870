#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tic/certificate_json.hpp"
#include "tic/cli.hpp"
#include "tic/error.hpp"
#include "tic/hyperreal_json.hpp"

namespace py = pybind11;
using namespace tic;

namespace {

HyperReal hyper_from_text(const std::string& text, int order) {
  return eval_hyper(parse(text, {.allow_variables = false, .allow_hyper_literals = true}), order);
}

std::string magnitude_name(Magnitude m) {
  switch (m) {
    case Magnitude::Zero: return "zero";
    case Magnitude::Infinitesimal: return "infinitesimal";
    case Magnitude::Appreciable: return "appreciable";
    case Magnitude::Infinite: return "infinite";
  }
  return "";
}

std::string claim_json(ClaimKind kind, const std::string& expr, const std::string& domain,
                       const std::optional<std::string>& point, const std::optional<std::string>& limit,
                       const std::string& track, int order) {
  Claim c;
  c.kind = kind;
  c.expr = parse(expr);
  if (kind != ClaimKind::LimitOfSequence) c.domain = DomainSpec::parse(domain);
  if (point) c.point = Rational::parse(*point);
  if (limit) c.limit = Rational::parse(*limit);
  if (track != "A" && track != "B" && track != "both") throw Error(ErrorKind::InvalidArgument, "track must be A, B or both");
  Json out = Json::array();
  for (const Certificate& cert : cli::check_claim(c, track != "B", track != "A", order)) out.push_back(to_json(cert));
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_tic, m) {
  m.doc() = "Exact hyperreal arithmetic and dual-track continuity and limit checks";

  static py::exception<Error> tic_error(m, "TicError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = tic_error;
      py::object inst = err(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(err.ptr(), inst.ptr());
    }
  });

  m.attr("DEFAULT_ORDER") = kDefaultOrder;

  py::class_<HyperReal>(m, "HyperReal")
      .def(py::init([](const std::string& text, int order) { return hyper_from_text(text, order); }),
           py::arg("text"), py::arg("order") = kDefaultOrder)
      .def_static("from_json", [](const std::string& s) { return hyperreal_from_json(Json::parse(s)); })
      .def("to_json", [](const HyperReal& h) { return to_json(h).dump(); })
      .def_property_readonly("order", &HyperReal::order)
      .def("st", [](const HyperReal& h) { return st(h).str(); })
      .def("classify", [](const HyperReal& h) { return magnitude_name(classify(h)); })
      .def("valuation", [](const HyperReal& h) { return valuation(h).str(); })
      .def("approx", [](const HyperReal& a, const HyperReal& b) { return approx(a, b); })
      .def("__str__", &HyperReal::str)
      .def("__repr__", [](const HyperReal& h) { return "HyperReal('" + h.str() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);

  m.def("format", [](const std::string& text) { return format(parse(text)); }, py::arg("expr"));
  m.def("differentiate", [](const std::string& text) { return format(differentiate(parse(text))); }, py::arg("expr"));
  m.def("eval_real", [](const std::string& text, const std::string& x) { return eval_real(parse(text), Rational::parse(x)).str(); },
        py::arg("expr"), py::arg("x"));
  m.def("extend_eval", [](const std::string& text, const HyperReal& x) { return extend_eval(parse(text), x); },
        py::arg("expr"), py::arg("x"));

  m.def("check_cont",
        [](const std::string& expr, const std::string& point, const std::string& domain, const std::string& track,
           int order) { return claim_json(ClaimKind::ContinuityAt, expr, domain, point, std::nullopt, track, order); },
        py::arg("expr"), py::arg("point"), py::arg("domain") = "R", py::arg("track") = "both",
        py::arg("order") = kDefaultOrder);
  m.def("check_ucont",
        [](const std::string& expr, const std::string& domain, const std::string& track, int order) {
          return claim_json(ClaimKind::UniformContinuityOn, expr, domain, std::nullopt, std::nullopt, track, order);
        },
        py::arg("expr"), py::arg("domain") = "R", py::arg("track") = "both", py::arg("order") = kDefaultOrder);
  m.def("limit_seq",
        [](const std::string& expr, const std::optional<std::string>& limit, const std::string& track, int order) {
          return claim_json(ClaimKind::LimitOfSequence, expr, "R", std::nullopt, limit, track, order);
        },
        py::arg("expr"), py::arg("limit") = std::nullopt, py::arg("track") = "both", py::arg("order") = kDefaultOrder);
  m.def("limit_at",
        [](const std::string& expr, const std::string& point, const std::optional<std::string>& limit,
           const std::string& domain, const std::string& track, int order) {
          return claim_json(ClaimKind::LimitAtPoint, expr, domain, point, limit, track, order);
        },
        py::arg("expr"), py::arg("point"), py::arg("limit") = std::nullopt, py::arg("domain") = "R",
        py::arg("track") = "both", py::arg("order") = kDefaultOrder);

  m.def("paraphrase_gt_sqrt2", [](const std::string& x) { return paraphrase_gt_sqrt2(Rational::parse(x)); },
        py::arg("x"));

  m.def("run",
        [](const std::vector<std::string>& args, const std::string& input) {
          std::ostringstream out;
          std::ostringstream err;
          std::istringstream in(input);
          const int code = cli::run(args, out, err, in);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("input") = "");
}

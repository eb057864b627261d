// Python bindings. Literals cross the boundary as plain Python objects
// (dicts, lists, ints) in the same grammar as the command-line tool; the
// kernel's errors become subclasses of skewps.SkewpsError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "skewps/errors.hpp"
#include "skewps/session.hpp"
#include "skewps/suites.hpp"

namespace py = pybind11;
using namespace skewps;

namespace {

json to_json(const py::handle& obj) {
  // leaked on purpose: destroying Python objects after finalization aborts
  static const py::object* dumps = new py::object(py::module_::import("json").attr("dumps"));
  return json::parse(py::cast<std::string>((*dumps)(obj)));
}

py::object from_json(const json& j) {
  static const py::object* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

SessionOptions options(int cap, bool checked, int trials, uint64_t seed) {
  SessionOptions o;
  o.cap = cap;
  o.checked = checked;
  o.trials = trials;
  o.seed = seed;
  return o;
}

Context context_arg(const py::object& ctx, int cap, bool checked, int trials, uint64_t seed) {
  return context_from_json(to_json(ctx), options(cap, checked, trials, seed));
}

UntwistingIsomorphism iso_arg(const py::object& ctx, int cap, int trials, uint64_t seed) {
  return isomorphism_from_json(to_json(ctx), options(cap, true, trials, seed));
}

}  // namespace

PYBIND11_MODULE(_skewps, m) {
  m.doc() = "Skew power series rings R[[x;sigma,delta]] over truncated p-adic and F_q[[pi]] coefficients";

  // leaked for the same reason as above
  static auto* base = new py::exception<Error>(m, "SkewpsError");
  static auto* by_name = new std::map<std::string, py::object>();
  for (const char* name : {"ParseError", "UnknownSuite", "DescriptorMismatch", "NotAUnit", "NoUniformiser",
                           "ShapeMismatch", "TwistMismatch", "ValueTooLow", "HypothesisViolated", "OrbitNotClosed",
                           "NotInvertible", "NotCompatible", "NotSolvable", "InsufficientPrecision",
                           "ReducedDegreeTooHigh"}) {
    py::object cls = py::reinterpret_steal<py::object>(
        PyErr_NewException((std::string("skewps._skewps.") + name).c_str(), base->ptr(), nullptr));
    m.attr(name) = cls;
    (*by_name)[name] = cls;
  }
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      auto it = by_name->find(e.name());
      PyErr_SetString(it != by_name->end() ? it->second.ptr() : base->ptr(), e.what());
    } catch (const json::exception& e) {
      PyErr_SetString(by_name->at("ParseError").ptr(), e.what());
    }
  });

  m.def("suite_names", [] { return suite_names(); }, "Names of the seeded property suites.");

  m.def(
      "run_suite",
      [](const std::string& name, int trials, int configurations, uint64_t seed) {
        SuiteOptions o;
        o.trials = trials;
        o.configurations = configurations;
        o.seed = seed;
        return from_json(run_suite(name, o).to_json());
      },
      py::arg("name"), py::arg("trials") = -1, py::arg("configurations") = -1, py::arg("seed") = 0,
      "Runs a suite and returns its report (dict). -1 selects the suite default.");

  m.def(
      "evaluate",
      [](const std::string& expr, const py::object& context, const py::dict& inputs, int cap, bool checked,
         int trials, uint64_t seed) {
        std::map<std::string, json> named;
        for (const auto& [k, v] : inputs) named[py::cast<std::string>(k)] = to_json(v);
        return from_json(session_eval(context_arg(context, cap, checked, trials, seed), expr, named));
      },
      py::arg("expr"), py::arg("context"), py::arg("inputs") = py::dict(), py::arg("cap") = -1,
      py::arg("checked") = true, py::arg("trials") = 32, py::arg("seed") = 0,
      "Evaluates an expression in x, named series, integers, val(...), inv(...) and [literals].");

  m.def(
      "change_variable",
      [](const py::object& context, const py::object& series, const std::string& move, const py::object& elt,
         uint64_t seed) {
        if (move != "shift" && move != "scale") throw ParseError("move must be 'shift' or 'scale'");
        return from_json(session_change_variable(context_arg(context, -1, true, 32, seed), to_json(series),
                                                 move == "shift" ? MoveKind::Shift : MoveKind::Scale, to_json(elt)));
      },
      py::arg("context"), py::arg("series"), py::arg("move"), py::arg("elt"), py::arg("seed") = 0,
      "Re-expresses a series in y = x - t ('shift') or y = a x ('scale').");

  m.def(
      "untwist",
      [](const py::object& witnessed, int trials, uint64_t seed) {
        return from_json(session_untwist(iso_arg(witnessed, -1, trials, seed)));
      },
      py::arg("witnessed"), py::arg("trials") = 32, py::arg("seed") = 0,
      "Builds the untwisting isomorphism and returns its certificate chain.");

  m.def(
      "iso_apply",
      [](const py::object& witnessed, const py::object& series, uint64_t seed) {
        return from_json(session_iso_apply(iso_arg(witnessed, -1, 32, seed), to_json(series)));
      },
      py::arg("witnessed"), py::arg("series"), py::arg("seed") = 0);

  m.def(
      "iso_unapply",
      [](const py::object& witnessed, const py::object& matrix, uint64_t seed) {
        return from_json(session_iso_unapply(iso_arg(witnessed, -1, 32, seed), to_json(matrix)));
      },
      py::arg("witnessed"), py::arg("matrix"), py::arg("seed") = 0);

  m.def(
      "prepare",
      [](const py::object& context, const py::object& series, uint64_t seed) {
        return from_json(session_prepare(context_arg(context, -1, true, 32, seed), to_json(series)));
      },
      py::arg("context"), py::arg("series"), py::arg("seed") = 0, "Depolarizes r = s pi^m, then prepares s = P u.");

  m.def(
      "ideal_poly",
      [](const py::object& context, const py::object& generator, uint64_t seed) {
        const json c = to_json(context);
        if (is_witnessed_context(c))
          return from_json(session_two_sided_ideal_poly(isomorphism_from_json(c, options(-1, true, 32, seed)),
                                                        to_json(generator)));
        return from_json(session_right_ideal_poly(context_from_json(c, options(-1, true, 32, seed)), to_json(generator)));
      },
      py::arg("context"), py::arg("generator"), py::arg("seed") = 0,
      "A nonzero polynomial in the ideal generated by r, with a verified certificate.");
}

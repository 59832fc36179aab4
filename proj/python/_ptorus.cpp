#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ptorus/cli.hpp"
#include "ptorus/counting.hpp"
#include "ptorus/cusp.hpp"
#include "ptorus/error.hpp"
#include "ptorus/farey.hpp"
#include "ptorus/norm.hpp"
#include "ptorus/verify.hpp"

namespace py = pybind11;
using namespace ptorus;

namespace {

using TripleArg = std::tuple<double, double, double>;

FrickeTriple triple_of(const TripleArg& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }

py::int_ to_python_int(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_python_int(const py::int_& v) { return BigInt(v.attr("__str__")().cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_ptorus, m) {
  m.doc() = "Simple closed geodesics on hyperbolic punctured tori";

  static py::exception<Error> error(m, "PtorusError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.attr("MODULAR") = py::make_tuple(3.0, 3.0, 3.0);

  m.def("validate_triple", &validate_triple, py::arg("x"), py::arg("y"), py::arg("z"),
        "x^2 + y^2 + z^2 - xyz.");
  m.def("complete_triple", [](double x, double y) {
    const auto r = complete_triple(x, y);
    return py::make_tuple(r.z_minus, r.z_plus);
  }, py::arg("x"), py::arg("y"), "Both roots z with (x, y, z) a Fricke triple.");
  m.def("hyperbolic_length", &hyperbolic_length, py::arg("trace"));

  m.def("oz_word", [](std::int64_t mm, std::int64_t n) { return oz_word(mm, n).to_string(); },
        py::arg("m"), py::arg("n"), "The word W_{m,n} in s, t, e.g. 's t s'.");
  m.def("word_trace", [](const TripleArg& t, const std::string& word) {
    return evaluate(build_representation(triple_of(t)), Word::parse(word)).trace();
  }, py::arg("triple"), py::arg("word"));
  m.def("slope_trace", [](const TripleArg& t, std::int64_t mm, std::int64_t n) {
    return slope_trace(triple_of(t), Slope(mm, n));
  }, py::arg("triple"), py::arg("m"), py::arg("n"));

  m.def("enumerate_spectrum", [](const TripleArg& t, double length, unsigned parallel) {
    py::list out;
    for (const auto& e : enumerate_spectrum(triple_of(t), length, {parallel})) {
      out.append(py::make_tuple(e.slope.m(), e.slope.n(), e.trace, e.length));
    }
    return out;
  }, py::arg("triple"), py::arg("max_length"), py::arg("parallel") = 1,
     "[(m, n, trace, length)] sorted by (length, m, n).");
  m.def("exact_spectrum", [](const py::int_& x, const py::int_& y, const py::int_& z, double length) {
    py::list out;
    for (const auto& e : exact_spectrum(from_python_int(x), from_python_int(y), from_python_int(z), length)) {
      out.append(py::make_tuple(e.slope.m(), e.slope.n(), to_python_int(e.trace), e.length));
    }
    return out;
  }, py::arg("x"), py::arg("y"), py::arg("z"), py::arg("max_length"));

  m.def("count_series", [](const TripleArg& t, const std::vector<double>& lengths,
                           const std::string& convention, unsigned parallel) {
    const auto s = count_series(triple_of(t), lengths, parse_convention(convention), {parallel});
    std::vector<std::pair<double, std::uint64_t>> out;
    for (const auto& p : s.entries) out.emplace_back(p.length, p.count);
    return out;
  }, py::arg("triple"), py::arg("lengths"), py::arg("convention") = "unoriented", py::arg("parallel") = 1,
     "[(L, N)] for each distinct cutoff, ascending.");
  m.def("primitive_pairs_count", &primitive_pairs_count, py::arg("max_sum"));
  m.def("totient_sum", &totient_sum, py::arg("max_sum"));
  m.def("asymptotic_prediction", &asymptotic_prediction, py::arg("length"));

  m.def("valuation", [](const TripleArg& t, std::int64_t mm, std::int64_t n) {
    return valuation(triple_of(t), {mm, n});
  }, py::arg("triple"), py::arg("m"), py::arg("n"));
  m.def("triangle_margin", [](const TripleArg& t, std::pair<std::int64_t, std::int64_t> h,
                              std::pair<std::int64_t, std::int64_t> g) {
    return triangle_check(triple_of(t), {h.first, h.second}, {g.first, g.second}).margin;
  }, py::arg("triple"), py::arg("h"), py::arg("g"), "l(h) + l(g) - l(h + g).");

  py::class_<BallApprox>(m, "Ball")
      .def_property_readonly("vertices", [](const BallApprox& b) {
        std::vector<std::pair<double, double>> out;
        for (const auto& v : b.vertices) out.emplace_back(v.x, v.y);
        return out;
      })
      .def_readonly("area", &BallApprox::area)
      .def_readonly("depth", &BallApprox::depth)
      .def_readonly("sample_count", &BallApprox::sample_count)
      .def_readonly("min_turn", &BallApprox::min_turn)
      .def("predict_c", [](const BallApprox& b, const std::string& convention) {
        return predict_c(b, parse_convention(convention));
      }, py::arg("convention") = "unoriented")
      .def("norm", [](const BallApprox& b, double x, double y) { return norm_eval_real(b, {x, y}); },
           py::arg("x"), py::arg("y"));
  m.def("build_ball", [](const TripleArg& t, int depth) { return build_ball(triple_of(t), depth); },
        py::arg("triple"), py::arg("depth"));

  m.def("cusp_heights", [](const TripleArg& t, std::int64_t word_bound, int conj_depth, unsigned parallel) {
    py::list out;
    for (const auto& r : verify_cusp_avoidance(triple_of(t), word_bound, conj_depth, parallel)) {
      out.append(py::make_tuple(r.slope.m(), r.slope.n(), r.max_height));
    }
    return out;
  }, py::arg("triple"), py::arg("word_bound"), py::arg("conj_depth"), py::arg("parallel") = 1,
     "[(m, n, max_height)] per slope with |m| + |n| <= word_bound.");

  m.def("run_suite", [](const std::string& name, const TripleArg& t) {
    const SuiteResult r = run_suite(name, triple_of(t));
    return py::dict(py::arg("name") = r.name, py::arg("passed") = r.passed, py::arg("detail") = r.detail);
  }, py::arg("name"), py::arg("triple"));

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line tool in process; returns (exit_code, stdout, stderr).");
}

// Python bindings. Exact values cross the boundary as strings ("3/4").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ultra/census.hpp"
#include "ultra/cli.hpp"
#include "ultra/errors.hpp"
#include "ultra/extremal.hpp"
#include "ultra/io.hpp"
#include "ultra/reptree.hpp"
#include "ultra/transforms.hpp"

namespace py = pybind11;
using namespace ultra;

namespace {

std::vector<std::string> strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

SemimetricSpace make_space(std::vector<std::string> labels,
                           const std::vector<std::vector<std::string>>& matrix) {
  std::vector<std::vector<Rational>> m;
  m.reserve(matrix.size());
  for (const auto& row : matrix) m.push_back(rationals(row));
  return SemimetricSpace(std::move(labels), std::move(m));
}

std::vector<std::vector<std::string>> matrix_of(const SemimetricSpace& s) {
  std::vector<std::vector<std::string>> out(s.size(), std::vector<std::string>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) out[i][j] = to_string(s.d(i, j));
  return out;
}

py::tuple path_tuple(const std::vector<std::string>& order, const std::vector<Rational>& w) {
  return py::make_tuple(order, strings(w));
}

}  // namespace

PYBIND11_MODULE(_ultra, m) {
  m.doc() = "Finite ultrametric spaces with exact rational distances";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "SyntaxError", base.ptr());
  py::register_exception<AxiomViolation>(m, "AxiomViolation", base.ptr());
  py::register_exception<NotUltrametric>(m, "NotUltrametric", base.ptr());
  py::register_exception<TooSmall>(m, "TooSmall", base.ptr());
  py::register_exception<UnknownPoint>(m, "UnknownPoint", base.ptr());
  py::register_exception<NotExtremal>(m, "NotExtremal", base.ptr());
  py::register_exception<NotHamiltonian>(m, "NotHamiltonian", base.ptr());
  py::register_exception<NotInjective>(m, "NotInjective", base.ptr());
  py::register_exception<NotCharacteristic>(m, "NotCharacteristic", base.ptr());
  py::register_exception<NotStrictlyBinary>(m, "NotStrictlyBinary", base.ptr());
  py::register_exception<Oversize>(m, "Oversize", base.ptr());
  py::register_exception<EmptySpace>(m, "EmptySpace", base.ptr());
  py::register_exception<BadEpsilon>(m, "BadEpsilon", base.ptr());
  py::register_exception<NotSurjective>(m, "NotSurjective", base.ptr());

  py::class_<SemimetricSpace>(m, "Space")
      .def(py::init(&make_space), py::arg("labels"), py::arg("matrix"))
      .def_static("from_json", [](const std::string& text) { return parse_space(text, Format::json); })
      .def_static("from_csv", [](const std::string& text) { return parse_space(text, Format::csv); })
      .def_static("read", &read_space_file, py::arg("path"))
      .def("to_json", [](const SemimetricSpace& s) { return serialize_space(s, Format::json); })
      .def("to_csv", [](const SemimetricSpace& s) { return serialize_space(s, Format::csv); })
      .def_property_readonly("labels", &SemimetricSpace::labels)
      .def("matrix", &matrix_of)
      .def("distance",
           [](const SemimetricSpace& s, const std::string& a, const std::string& b) {
             return to_string(s.d(s.index_of(a), s.index_of(b)));
           })
      .def("diameter", [](const SemimetricSpace& s) { return to_string(s.diameter()); })
      .def("__len__", &SemimetricSpace::size)
      .def("__eq__", [](const SemimetricSpace& a, const SemimetricSpace& b) { return a == b; })
      .def("__repr__", [](const SemimetricSpace& s) {
        return "<ultra.Space with " + std::to_string(s.size()) + " points>";
      });

  m.def("is_ultrametric", [](const SemimetricSpace& s) { return !check_ultrametric(s).has_value(); });
  m.def("violating_triple", [](const SemimetricSpace& s) -> std::optional<std::vector<std::string>> {
    const auto t = check_ultrametric(s);
    if (!t) return std::nullopt;
    return std::vector<std::string>{s.label((*t)[0]), s.label((*t)[1]), s.label((*t)[2])};
  });
  m.def("spectrum", [](const SemimetricSpace& s) { return strings(spectrum_of(s).values); });
  m.def("is_extremal", [](const SemimetricSpace& s) { return is_extremal(UltrametricSpace(s)); });
  m.def("characteristic_path", [](const SemimetricSpace& s) {
    const auto p = characteristic_ham_path(UltrametricSpace(s));
    return path_tuple(p.order, p.weights);
  });
  m.def("reconstruct",
        [](std::vector<std::string> order, const std::vector<std::string>& weights) {
          return SemimetricSpace(reconstruct_from_path({std::move(order), rationals(weights)}));
        },
        py::arg("order"), py::arg("weights"));
  m.def("canonical_code", [](const SemimetricSpace& s, bool shape) {
    const auto tree = build_representing_tree(UltrametricSpace(s));
    return canonical_code(tree, shape ? CodeMode::shape : CodeMode::isometry).code;
  }, py::arg("space"), py::arg("shape") = false);
  m.def("are_isometric", [](const SemimetricSpace& a, const SemimetricSpace& b) {
    return are_isometric(UltrametricSpace(a), UltrametricSpace(b));
  });
  m.def("tree_dot", [](const SemimetricSpace& s) {
    return reptree_dot(build_representing_tree(UltrametricSpace(s)));
  });
  m.def("kappa", [](std::size_t n) { return py::int_(py::str(kappa(n).str())); });
  m.def("enumerate_extremal", [](std::size_t n, std::size_t jobs) {
    std::vector<SemimetricSpace> out;
    for (auto& s : enumerate_extremal(n, {.max_n = kDefaultEnumerationLimit, .jobs = jobs})) {
      out.emplace_back(std::move(s));
    }
    return out;
  }, py::arg("n"), py::arg("jobs") = 1);
  m.def("lift", [](const SemimetricSpace& s) {
    const auto r = lift_semimetric(s);
    std::vector<std::string> projection;
    for (std::size_t i = 0; i < r.lifted->size(); ++i) projection.push_back(s.label(r.projection(i)));
    return py::make_tuple(SemimetricSpace(*r.lifted), projection);
  });
  m.def("approximate", [](const SemimetricSpace& s, const std::string& epsilon) {
    const auto a = approximate_extremal(UltrametricSpace(s), parse_rational(epsilon));
    return py::make_tuple(SemimetricSpace(*a.space), to_string(a.witness.max_deviation));
  }, py::arg("space"), py::arg("epsilon"));
  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "ultra");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}

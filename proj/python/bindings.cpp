#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gbihom/catalog.hpp"
#include "gbihom/io.hpp"

namespace py = pybind11;
using namespace gbihom;

namespace {

// Reports cross the boundary as canonical JSON text; the Python layer parses it.
std::string dump(const Json& j) { return canonical_dump(j); }

}  // namespace

PYBIND11_MODULE(_gbihom, m) {
  m.doc() = "Exact analysis of graded BiHom matrix algebras";

  auto& base = py::register_exception<Error>(m, "Error");
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());

  py::class_<GradedBiHomAlgebra>(m, "Algebra")
      .def_property_readonly("n", &GradedBiHomAlgebra::n)
      .def_property_readonly("dim", [](const GradedBiHomAlgebra& A) { return A.underlying().dim(); })
      .def_property_readonly("field", [](const GradedBiHomAlgebra& A) { return A.field().name(); })
      .def("validate_json", [](const GradedBiHomAlgebra& A) { return dump(validation_json(validate(A))); })
      .def("support_json", [](const GradedBiHomAlgebra& A) { return dump(support_json(A)); })
      .def(
          "classes_json",
          [](const GradedBiHomAlgebra& A, bool verify) { return dump(partition_json(classes(A), verify ? &A : nullptr)); },
          py::arg("verify_witnesses") = false)
      .def(
          "decompose_json",
          [](const GradedBiHomAlgebra& A, bool bases) { return dump(decomposition_json(decompose(A), bases)); },
          py::arg("bases") = false)
      .def(
          "simplicity_json",
          [](const GradedBiHomAlgebra& A, bool oracle) {
            SimplicityOptions o;
            o.run_oracle = oracle;
            return dump(simplicity_json(graded_simple(A, o)));
          },
          py::arg("oracle") = false)
      .def("document_json", [](const GradedBiHomAlgebra& A) { return dump(algebra_to_json(A)); });

  m.def(
      "load",
      [](const std::string& text, bool lenient) {
        LoadedDocument d = algebra_from_text(text, {lenient});
        return py::make_tuple(std::move(d.algebra), d.warnings);
      },
      py::arg("text"), py::arg("lenient") = false, "Parse an input document; returns (algebra, warnings).");
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });
  m.def("catalog", [](const std::string& name) { return catalog_entry(name).build(); }, py::arg("name"));
  m.def(
      "primitive_root_of_unity",
      [](std::uint64_t p, std::size_t n) { return primitive_root_of_unity(FieldSpec::prime(p), n).residue(); },
      py::arg("p"), py::arg("n"));
  m.def("sha256_hex", &sha256_hex);
}

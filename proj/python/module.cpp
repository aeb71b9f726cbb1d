#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opgb/buchberger.hpp"
#include "opgb/text.hpp"

namespace py = pybind11;

namespace {

using namespace opgb;

py::object to_py_int(const mpz_class& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

struct PyPresentation {
  PresentationFile file;
};

struct PyResult {
  GroebnerResult result;
  Alphabet alphabet;
  OrderingSpec spec;
};

PyPresentation with_ordering(PyPresentation p, const std::string& ordering) {
  if (ordering.empty()) return p;
  OrderingSpec spec = ordering_from_name(ordering);
  p.file.presentation.spec = spec;
  for (auto& f : p.file.presentation.relations) {
    std::vector<std::pair<TreeMonomial, Rational>> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) terms.emplace_back(t.monomial, t.coefficient);
    f = OperadPolynomial::from_terms(spec, std::move(terms));
  }
  return p;
}

PyResult run_groebner(const PyPresentation& p, std::optional<int> max_arity,
                      std::optional<int> max_rounds, int threads, bool symmetrize,
                      const std::string& ordering) {
  PyPresentation prepared = with_ordering(p, ordering);
  Presentation pres = prepared.file.presentation;
  if (symmetrize && !prepared.file.actions.empty())
    pres.relations = orbit_closure(pres.relations, prepared.file.actions, pres.generators);
  BuchbergerOptions options;
  options.max_arity = max_arity;
  options.max_rounds = max_rounds;
  options.threads = threads;
  GroebnerResult result;
  {
    py::gil_scoped_release release;
    result = buchberger(pres, options);
  }
  return PyResult{std::move(result), pres.generators, pres.spec};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Groebner bases for finitely presented shuffle operads";

  py::class_<PyPresentation>(m, "Presentation")
      .def_static(
          "from_text", [](const std::string& text) { return PyPresentation{parse_presentation(text)}; },
          py::arg("text"))
      .def_static(
          "from_file",
          [](const std::string& path) { return PyPresentation{parse_presentation_file(path)}; },
          py::arg("path"))
      .def_property_readonly("ordering",
                             [](const PyPresentation& p) {
                               return ordering_name(p.file.presentation.spec);
                             })
      .def_property_readonly("warnings",
                             [](const PyPresentation& p) { return p.file.warnings; })
      .def_property_readonly("generators",
                             [](const PyPresentation& p) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const auto& g : p.file.presentation.generators)
                                 out.emplace_back(g.name, g.arity);
                               return out;
                             })
      .def_property_readonly("relations", [](const PyPresentation& p) {
        std::vector<std::string> out;
        for (const auto& f : p.file.presentation.relations)
          out.push_back(format_element(f, p.file.presentation.generators));
        return out;
      });

  py::class_<PyResult>(m, "GroebnerResult")
      .def_property_readonly("basis",
                             [](const PyResult& r) {
                               std::vector<std::string> out;
                               for (const auto& g : r.result.basis)
                                 out.push_back(format_element(g, r.alphabet));
                               return out;
                             })
      .def_property_readonly("complete", [](const PyResult& r) { return r.result.complete; })
      .def_property_readonly("rounds_exhausted",
                             [](const PyResult& r) { return r.result.rounds_exhausted; })
      .def_property_readonly("quadratic", [](const PyResult& r) { return r.result.quadratic; })
      .def_property_readonly("rounds", [](const PyResult& r) { return r.result.rounds; })
      .def_property_readonly("truncation_arity",
                             [](const PyResult& r) -> py::object {
                               if (r.result.truncation_arity)
                                 return py::int_(*r.result.truncation_arity);
                               return py::none();
                             })
      .def_property_readonly("s_polynomials_formed",
                             [](const PyResult& r) { return r.result.stats.s_polynomials_formed; })
      .def_property_readonly("reductions_to_zero",
                             [](const PyResult& r) { return r.result.stats.reductions_to_zero; })
      .def(
          "dimension",
          [](const PyResult& r, int n) { return dimension(r.result, r.alphabet, n); },
          py::arg("n"))
      .def(
          "normal_monomials",
          [](const PyResult& r, int n) {
            std::vector<std::string> out;
            for (const auto& t : normal_monomials(r.result, r.alphabet, n))
              out.push_back(format_tree(t, r.alphabet));
            return out;
          },
          py::arg("n"))
      .def(
          "normal_form",
          [](const PyResult& r, const std::string& element) {
            OperadPolynomial f = parse_element(element, r.alphabet, r.spec);
            return format_element(normal_form(f, r.result.basis), r.alphabet);
          },
          py::arg("element"));

  m.def("groebner", &run_groebner, py::arg("presentation"), py::arg("max_arity") = py::none(),
        py::arg("max_rounds") = py::none(), py::arg("threads") = 1,
        py::arg("symmetrize") = true, py::arg("ordering") = std::string());

  m.def("orderings", [] {
    std::vector<std::string> out;
    for (const auto& [name, spec] : named_orderings()) out.push_back(name);
    return out;
  });

  m.def(
      "shuffle_permutations",
      [](const std::vector<int>& block_sizes) {
        std::vector<std::vector<int>> out;
        for (const auto& s : shuffle_permutations(block_sizes)) out.push_back(s.images);
        return out;
      },
      py::arg("block_sizes"));

  m.def(
      "count_shuffle_permutations",
      [](const std::vector<int>& block_sizes) {
        return to_py_int(count_shuffle_permutations(block_sizes));
      },
      py::arg("block_sizes"));

  m.def(
      "enumerate_monomials",
      [](const PyPresentation& p, int n) {
        std::vector<std::string> out;
        for (const auto& t : enumerate_monomials(p.file.presentation.generators, n))
          out.push_back(format_tree(t, p.file.presentation.generators));
        return out;
      },
      py::arg("presentation"), py::arg("n"));

  m.def(
      "small_common_multiples",
      [](const PyPresentation& p, const std::string& first, const std::string& second) {
        const Alphabet& alphabet = p.file.presentation.generators;
        TreeMonomial alpha = parse_tree(first, alphabet);
        TreeMonomial beta = parse_tree(second, alphabet);
        py::list out;
        for (const auto& r : small_common_multiples(alpha, beta)) {
          py::dict d;
          d["multiple"] = format_tree(r.multiple, alphabet);
          d["first_at"] = format_path(r.emb_a.root_path);
          d["second_at"] = format_path(r.emb_b.root_path);
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("presentation"), py::arg("first"), py::arg("second"));

  m.def(
      "symmetrize",
      [](const PyPresentation& p) {
        if (p.file.actions.empty())
          throw std::invalid_argument("the presentation declares no action lines");
        const Alphabet& alphabet = p.file.presentation.generators;
        std::vector<std::string> out;
        for (const auto& f :
             orbit_closure(p.file.presentation.relations, p.file.actions, alphabet))
          out.push_back(format_element(f, alphabet));
        return out;
      },
      py::arg("presentation"));
}

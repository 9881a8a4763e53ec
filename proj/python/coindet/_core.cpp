/* Python bindings for the main operations; collection-valued results are
 * converted to lists of classes at the boundary. */
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coindet/fixtures.hpp"
#include "coindet/massey.hpp"
#include "coindet/oracle.hpp"

namespace py = pybind11;
using namespace coindet;

namespace {

HomologyClass class_at(std::size_t degree, const Gf2Vector& coords) {
    HomologyClass cls;
    cls.degree = degree;
    cls.coords = coords;
    return cls;
}

std::vector<HomologyClass> basis_classes(const Gf2Subspace& s, std::size_t degree) {
    std::vector<HomologyClass> out;
    out.reserve(s.dim());
    for (const Gf2Vector& v : s.basis()) out.push_back(class_at(degree, v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Massey products and the coindeterminacy invariant for finite "
              "differential graded algebras over F2";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<Refusal>(m, "Refusal", PyExc_RuntimeError);

    py::class_<ChainElement>(m, "ChainElement")
        .def_readonly("degree", &ChainElement::degree)
        .def(py::self == py::self);

    py::class_<Presentation>(m, "Presentation")
        .def_static("parse", &Presentation::parse, py::arg("text"))
        .def("serialize", &Presentation::serialize)
        .def_property_readonly("name", &Presentation::name)
        .def_property_readonly("truncation", &Presentation::truncation)
        .def("basis_dim", &Presentation::basis_dim, py::arg("degree"))
        .def("validate_issues",
             [](const Presentation& p) {
                 std::vector<std::pair<std::string, std::string>> issues;
                 for (const ValidationIssue& issue : p.validate().issues)
                     issues.emplace_back(issue.code, issue.detail);
                 return issues;
             })
        .def("chain", &Presentation::chain, py::arg("polynomial_text"))
        .def("chain_to_string", &Presentation::chain_to_string, py::arg("chain"))
        .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; })
        .def("__repr__",
             [](const Presentation& p) { return "<Presentation " + p.name() + ">"; });

    py::class_<HomologyClass>(m, "HomologyClass")
        .def_readonly("degree", &HomologyClass::degree)
        .def("is_zero", &HomologyClass::is_zero)
        .def(py::self == py::self);

    py::class_<Homology>(m, "Homology")
        .def(py::init<Presentation>(), py::arg("presentation"))
        .def_property_readonly("max_degree", &Homology::max_degree)
        .def("presentation", &Homology::presentation,
             py::return_value_policy::reference_internal)
        .def("available", &Homology::available, py::arg("degree"))
        .def("dim", &Homology::dim, py::arg("degree"))
        .def("class_of",
             [](const Homology& h, const std::string& text) {
                 return h.class_of(h.presentation().chain(text));
             },
             py::arg("polynomial_text"))
        .def("zero_class", &Homology::zero_class, py::arg("degree"))
        .def("basis_class", &Homology::basis_class, py::arg("degree"), py::arg("index"))
        .def("product", &Homology::product, py::arg("s"), py::arg("t"))
        .def("to_string", &Homology::class_to_string, py::arg("cls"))
        .def("basis_strings", [](const Homology& h, std::size_t degree) {
            std::vector<std::string> out;
            for (std::size_t i = 0; i < h.dim(degree); ++i)
                out.push_back(h.class_to_string(h.basis_class(degree, i)));
            return out;
        }, py::arg("degree"));

    py::class_<TripleBracket>(m, "TripleBracket")
        .def_readonly("degree", &TripleBracket::degree)
        .def_readonly("strictly_zero", &TripleBracket::strictly_zero)
        .def("contains_zero", &TripleBracket::contains_zero)
        .def_property_readonly("representative",
                               [](const TripleBracket& tb) {
                                   return class_at(tb.degree, tb.value.representative());
                               })
        .def("indeterminacy_basis",
             [](const TripleBracket& tb) {
                 return basis_classes(tb.value.direction(), tb.degree);
             })
        .def("contains",
             [](const TripleBracket& tb, const HomologyClass& cls) {
                 return tb.degree == cls.degree && tb.value.contains(cls.coords);
             },
             py::arg("cls"))
        .def_readonly("witness_a01", &TripleBracket::witness_a01)
        .def_readonly("witness_a12", &TripleBracket::witness_a12)
        .def_readonly("witness_value", &TripleBracket::witness_value);

    py::class_<CoindetResult>(m, "CoindetResult")
        .def_readonly("degree", &CoindetResult::degree)
        .def_readonly("contains_zero", &CoindetResult::contains_zero)
        .def_property_readonly("representative",
                               [](const CoindetResult& cd) {
                                   return class_at(cd.degree, cd.coset.representative());
                               })
        .def("direction_basis",
             [](const CoindetResult& cd) {
                 return basis_classes(cd.coset.direction(), cd.degree);
             })
        .def("contains",
             [](const CoindetResult& cd, const HomologyClass& cls) {
                 return cd.degree == cls.degree && cd.coset.contains(cls.coords);
             },
             py::arg("cls"))
        .def_readonly("witness_x", &CoindetResult::witness_x)
        .def_readonly("witness_z", &CoindetResult::witness_z)
        .def_readonly("witness_w", &CoindetResult::witness_w);

    py::class_<DefinednessResult>(m, "DefinednessResult")
        .def_readonly("defined", &DefinednessResult::defined)
        .def_readonly("coindet", &DefinednessResult::coindet);

    py::class_<FourfoldBracket>(m, "FourfoldBracket")
        .def_readonly("degree", &FourfoldBracket::degree)
        .def_readonly("kernel_dim", &FourfoldBracket::kernel_dim)
        .def_readonly("enumeration_truncated", &FourfoldBracket::enumeration_truncated)
        .def_readonly("values", &FourfoldBracket::values)
        .def_readonly("representative", &FourfoldBracket::representative)
        .def("lower_bound_basis",
             [](const FourfoldBracket& fb) {
                 return basis_classes(fb.lower_bound_direction, fb.degree);
             })
        .def_readonly("witnesses", &FourfoldBracket::witnesses);

    py::class_<WellDefinednessReport>(m, "WellDefinednessReport")
        .def_readonly("passed", &WellDefinednessReport::passed)
        .def_readonly("trials", &WellDefinednessReport::trials)
        .def_readonly("failures", &WellDefinednessReport::failures);

    m.def("fixture", &fixture, py::arg("name"));
    m.def("fixture_names", &fixture_names);

    m.def("triple_bracket", &triple_bracket, py::arg("h"), py::arg("s0"), py::arg("s1"),
          py::arg("s2"));
    m.def("left_div_subgroup",
          [](const Homology& h, const HomologyClass& a, const HomologyClass& b,
             std::size_t degree) { return basis_classes(left_div_subgroup(h, a, b, degree), degree); },
          py::arg("h"), py::arg("a"), py::arg("b"), py::arg("degree"));
    m.def("right_div_subgroup",
          [](const Homology& h, const HomologyClass& a, const HomologyClass& b,
             std::size_t degree) { return basis_classes(right_div_subgroup(h, a, b, degree), degree); },
          py::arg("h"), py::arg("a"), py::arg("b"), py::arg("degree"));
    m.def("coindeterminacy", &coindeterminacy, py::arg("h"), py::arg("s0"), py::arg("s1"),
          py::arg("s2"), py::arg("s3"));
    m.def("is_fourfold_defined", &is_fourfold_defined, py::arg("h"), py::arg("s0"), py::arg("s1"),
          py::arg("s2"), py::arg("s3"));
    m.def("fourfold_bracket", &fourfold_bracket, py::arg("h"), py::arg("s0"), py::arg("s1"),
          py::arg("s2"), py::arg("s3"), py::arg("enumeration_limit") = 16);
    m.def("half_strict_defined", &half_strict_defined, py::arg("h"), py::arg("s0"), py::arg("s1"),
          py::arg("s2"), py::arg("s3"));
    m.def("coindet_well_definedness_check", &coindet_well_definedness_check, py::arg("h"),
          py::arg("s0"), py::arg("s1"), py::arg("s2"), py::arg("s3"), py::arg("trials"),
          py::arg("seed") = 0xC01DE7);

    m.def("random_presentation",
          [](std::uint64_t seed, std::size_t max_generators, std::size_t max_degree,
             double differential_density) {
              RandomDgaSpec spec{seed, max_generators, max_degree, differential_density};
              return random_presentation(spec);
          },
          py::arg("seed"), py::arg("max_generators") = 5, py::arg("max_degree") = 3,
          py::arg("differential_density") = 0.5);
    m.def("brute_force_triple", &brute_force_triple, py::arg("h"), py::arg("s0"), py::arg("s1"),
          py::arg("s2"));
    m.def("brute_force_coindet", &brute_force_coindet, py::arg("h"), py::arg("s0"), py::arg("s1"),
          py::arg("s2"), py::arg("s3"));
    m.def("brute_force_fourfold_defined", &brute_force_fourfold_defined, py::arg("h"),
          py::arg("s0"), py::arg("s1"), py::arg("s2"), py::arg("s3"));
}

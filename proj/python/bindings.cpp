// Python bindings for the main operations: vector construction, the
// admissibility decision, enumeration, IFS extraction and verification.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cantor/admissibility.hpp"
#include "cantor/constructors.hpp"
#include "cantor/ifs.hpp"
#include "cantor/json_io.hpp"

namespace py = pybind11;

namespace {

cantor::TranslationVector make_vector(int cap, const std::vector<std::vector<int>>& entries) {
    std::vector<cantor::DigitString> ds;
    ds.reserve(entries.size());
    for (const auto& digits : entries) ds.emplace_back(digits, cap);
    return cantor::TranslationVector(cap, std::move(ds));
}

py::object json_to_py(const nlohmann::json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Self-similarity of unions of a homogeneous symmetric Cantor set "
              "with its translations";

    py::class_<cantor::TranslationVector>(m, "TranslationVector")
        .def(py::init(&make_vector), py::arg("N"), py::arg("entries"),
             "Build from N and a list of digit lists (lowest index first); the "
             "first entry must be empty (t_0 = 0).")
        .def_property_readonly("N", &cantor::TranslationVector::alphabet_cap)
        .def_property_readonly("m", &cantor::TranslationVector::m)
        .def_property_readonly("tau", &cantor::TranslationVector::tau)
        .def_property_readonly("entries",
                               [](const cantor::TranslationVector& t) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& e : t.entries()) out.push_back(e.digits());
                                   return out;
                               })
        .def("__eq__", [](const cantor::TranslationVector& a,
                          const cantor::TranslationVector& b) { return a == b; })
        .def("__repr__", [](const cantor::TranslationVector& t) {
            return "TranslationVector(" + cantor::to_json(t).dump() + ")";
        });

    m.def("decide", [](const cantor::TranslationVector& t, const std::string& regime,
                       bool cross_check) {
              auto r = regime == "between" ? cantor::BetaRegime::Between
                                           : cantor::BetaRegime::BelowCritical;
              return json_to_py(cantor::to_json(cantor::decide_self_similar(t, r, cross_check)));
          },
          py::arg("vector"), py::arg("regime") = "below", py::arg("cross_check") = false,
          "Full self-similarity verdict as a dict.");

    m.def("is_admissible", [](const cantor::TranslationVector& t, bool cross_check) {
              return cantor::check_admissible(t, cross_check).admissible;
          },
          py::arg("vector"), py::arg("cross_check") = false);

    m.def("conjugate", [](const cantor::TranslationVector& t) -> py::object {
              auto c = cantor::conjugate(t);
              if (!c.in_T()) return py::none();
              return py::cast(*c.vec);
          },
          py::arg("vector"), "Conjugate vector, or None when it leaves T.");

    m.def("scale", [](const cantor::TranslationVector& t, int q) -> py::object {
              auto s = cantor::scale(t, q);
              if (!s) return py::none();
              return py::cast(*s);
          },
          py::arg("vector"), py::arg("q"), "beta^q * t, or None when it leaves T.");

    m.def("construct_admissible", &cantor::construct_admissible, py::arg("m"), py::arg("N"));

    m.def("corollary_m1", [](const std::vector<int>& digits, int cap) {
              return cantor::corollary_m1(cantor::DigitString(digits, cap), cap);
          },
          py::arg("digits"), py::arg("N"));

    m.def("enumerate_admissible",
          [](int m, int cap, int tau_max, std::uint64_t budget, int jobs) {
              return cantor::enumerate_admissible(m, cap, tau_max, budget, jobs);
          },
          py::arg("m"), py::arg("N"), py::arg("tau_max"),
          py::arg("budget") = std::uint64_t(20'000'000), py::arg("jobs") = 1);

    m.def("extract_ifs", [](const cantor::TranslationVector& t) {
              return json_to_py(cantor::to_json(cantor::extract_ifs(t)));
          },
          py::arg("vector"), "Generating IFS as a list of dicts.");

    m.def("verify_symbolic", [](const cantor::TranslationVector& t) {
              return cantor::verify_symbolic(t, cantor::extract_ifs(t));
          },
          py::arg("vector"));

    m.def("verify_numeric", [](const cantor::TranslationVector& t, const std::string& beta,
                               int samples, int depth, std::uint64_t seed, bool float_mode,
                               double tolerance) {
              auto ifs = cantor::extract_ifs(t);
              auto report = cantor::verify_numeric(t, ifs, cantor::parse_rational(beta),
                                                   samples, depth, seed, float_mode, tolerance);
              return json_to_py(cantor::to_json(report));
          },
          py::arg("vector"), py::arg("beta"), py::arg("samples") = 1000, py::arg("depth") = 12,
          py::arg("seed") = std::uint64_t(1), py::arg("float_mode") = false,
          py::arg("tolerance") = 1e-9);

    m.def("greedy_coding", [](const std::string& x, const std::string& beta, int cap, int depth) {
              auto r = cantor::greedy_coding(cantor::parse_rational(x),
                                             cantor::parse_rational(beta), cap, depth);
              py::dict out;
              out["ok"] = r.ok;
              out["digits"] = r.digits;
              out["fail_index"] = r.fail_index;
              out["residual"] = cantor::to_string(r.residual);
              return out;
          },
          py::arg("x"), py::arg("beta"), py::arg("N"), py::arg("depth"));

    m.def("graph_dot", [](const cantor::TranslationVector& t) {
              return cantor::graph_dot(cantor::build_graph(t));
          },
          py::arg("vector"), "Word graph G_t in Graphviz DOT form.");
}

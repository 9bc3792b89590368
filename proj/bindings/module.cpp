#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "admis/corpus.hpp"
#include "admis/query.hpp"

namespace py = pybind11;
using namespace admis;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const Json& v : j) out.append(json_to_py(v));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

IntPoly poly_from_desc(const std::vector<long>& desc) {
    std::vector<Int> asc;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) asc.emplace_back(*it);
    return IntPoly(std::move(asc));
}

std::vector<long> poly_desc_list(const IntPoly& f) {
    std::vector<long> out;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) out.push_back(it->get_si());
    if (out.empty()) out.push_back(0);
    return out;
}

DecisionMode mode_from_string(const std::string& mode) {
    if (mode == "admissible") return DecisionMode::Admissible;
    if (mode == "tame") return DecisionMode::Tame;
    throw Error(ErrorCode::ParseError, "mode must be admissible or tame");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "admissibility of finite groups over number fields";

    py::register_exception<Error>(m, "AdmisError");

    py::class_<NumberField>(m, "Field")
        .def(py::init([](const std::vector<long>& desc) {
                 return NumberField::make(poly_from_desc(desc));
             }),
             py::arg("coeffs"), "number field from descending defining coefficients")
        .def_property_readonly("degree", &NumberField::degree)
        .def_property_readonly("discriminant",
                               [](const NumberField& K) { return K.disc_defpoly().get_str(); })
        .def("is_galois", &NumberField::is_galois)
        .def("decompose",
             [](const NumberField& K, long p) {
                 PrimeDecomposition d = K.decompose_prime(Int(p));
                 return d.pairs;
             },
             py::arg("p"), "(e_i, f_i) pairs sorted by descending local degree")
        .def("decomposes", [](const NumberField& K, long p) { return K.p_decomposes(Int(p)); },
             py::arg("p"))
        .def("has_root",
             [](const NumberField& K, const std::vector<long>& desc) {
                 return K.has_root(poly_from_desc(desc));
             },
             py::arg("coeffs"))
        .def("__repr__", [](const NumberField& K) {
            return "Field(" + K.defining_poly().str() + ")";
        });

    py::class_<FiniteGroup>(m, "Group")
        .def_static("metacyclic",
                    [](long e, long f, long i, long q) {
                        return FiniteGroup::from_metacyclic({e, f, i, q});
                    },
                    py::arg("e"), py::arg("f"), py::arg("i"), py::arg("q"))
        .def_static("permutations",
                    [](const std::vector<std::vector<std::vector<int>>>& gens) {
                        Json spec = Json{{"permutations", gens}};
                        return group_from_json(spec);
                    },
                    py::arg("generators"), "each generator is a list of 1-based cycles")
        .def_static("product",
                    [](const std::vector<FiniteGroup>& parts) {
                        FiniteGroup acc = FiniteGroup::trivial();
                        for (const auto& g : parts) acc = FiniteGroup::direct_product(acc, g);
                        return acc;
                    })
        .def_static("trivial", &FiniteGroup::trivial)
        .def_property_readonly("order", &FiniteGroup::order)
        .def("d", &FiniteGroup::d_of_group, "minimum number of generators (p-groups)")
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("is_solvable", &FiniteGroup::is_solvable)
        .def("is_nilpotent", &FiniteGroup::is_nilpotent)
        .def("is_metacyclic",
             [](const FiniteGroup& G) -> py::object {
                 auto pres = G.is_metacyclic();
                 if (!pres) return py::none();
                 return py::make_tuple(pres->e, pres->f, pres->i, pres->q);
             })
        .def("presentations",
             [](const FiniteGroup& G) {
                 std::vector<std::tuple<long, long, long, long>> out;
                 for (const auto& p : G.enumerate_metacyclic_presentations())
                     out.emplace_back(p.e, p.f, p.i, p.q);
                 return out;
             })
        .def("sylow", [](const FiniteGroup& G, long p) { return G.sylow_subgroup(Int(p)); },
             py::arg("p"))
        .def("demuskin_test",
             [](const FiniteGroup& G, int n, py::object s, long p) -> py::object {
                 DemuskinQuery q{n, std::nullopt};
                 if (!s.is_none()) q.s = s.cast<int>();
                 auto w = G.demuskin_quotient_test(q, Int(p));
                 if (!w) return py::none();
                 return py::cast(*w);
             },
             py::arg("n"), py::arg("s"), py::arg("p"))
        .def("__repr__", [](const FiniteGroup& G) {
            return "Group(order=" + std::to_string(G.order()) + ")";
        });

    m.def("cyclotomic", [](long n) { return poly_desc_list(cyclotomic_poly(n)); }, py::arg("n"));
    m.def("gaussian_period_min_poly",
          [](long e, const std::vector<long>& H) {
              return poly_desc_list(gaussian_period_min_poly(e, H));
          },
          py::arg("e"), py::arg("H"));
    m.def("alpha_p_min_poly", [](long p) { return poly_desc_list(alpha_p_min_poly(p)); },
          py::arg("p"));
    m.def("liedahl_condition",
          [](const NumberField& K, long e, long q) { return liedahl_condition(K, e, q); },
          py::arg("field"), py::arg("e"), py::arg("q"));
    m.def("zeta_in_completion",
          [](const NumberField& K, long p, int s) { return zeta_in_completion(K, Int(p), s); },
          py::arg("field"), py::arg("p"), py::arg("s"));

    m.def("decide",
          [](const FiniteGroup& G, const NumberField& K, const std::string& mode) {
              static Engine engine;
              Verdict v = engine.decide(G, K, mode_from_string(mode));
              return json_to_py(verdict_to_json(v));
          },
          py::arg("group"), py::arg("field"), py::arg("mode") = "admissible");

    m.def("all_metacyclic_tame",
          [](const NumberField& K, long p) {
              static Engine engine;
              auto pred = engine.all_metacyclic_tame_predicate(K, Int(p));
              py::dict out;
              out["value"] = pred.value;
              out["theorem"] = theorem_tag_name(pred.theorem);
              out["witness"] = json_to_py(pred.witness);
              return out;
          },
          py::arg("field"), py::arg("p"));

    m.def("run_corpus",
          [](const std::string& filter) {
              static Engine engine;
              return json_to_py(run_corpus(engine, filter).report);
          },
          py::arg("filter") = "");
}

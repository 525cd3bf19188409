#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cobalt/io.hpp"

namespace py = pybind11;
using namespace cobalt;

namespace {

Scalar scalar_from_py(const py::handle& h) {
    if (py::isinstance<Scalar>(h)) return h.cast<Scalar>();
    if (py::isinstance<py::int_>(h)) return Scalar(h.cast<long>());
    if (py::isinstance<py::str>(h)) return parse_scalar(h.cast<std::string>());
    throw py::type_error("expected a Scalar, int or scalar literal string");
}

Matrix matrix_from_py(const py::object& rows) {
    std::vector<std::vector<Scalar>> data;
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        for (const auto& cell : row) r.push_back(scalar_from_py(cell));
        data.push_back(std::move(r));
    }
    size_t nr = data.size();
    size_t nc = nr ? data[0].size() : 0;
    Matrix m(nr, nc);
    for (size_t i = 0; i < nr; ++i) {
        if (data[i].size() != nc) throw py::value_error("ragged matrix");
        for (size_t j = 0; j < nc; ++j) m.at(i, j) = data[i][j];
    }
    return m;
}

py::list matrix_to_py(const Matrix& m) {
    py::list rows;
    for (size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (size_t j = 0; j < m.cols(); ++j) row.append(m.at(i, j));
        rows.append(row);
    }
    return rows;
}

py::dict verdict_to_py(const Verdict& v) {
    py::dict d;
    d["ok"] = v.ok;
    d["detail"] = v.detail;
    return d;
}

std::vector<Scalar> scalars_from_py(const py::object& seq) {
    std::vector<Scalar> out;
    for (const auto& item : seq) out.push_back(scalar_from_py(item));
    return out;
}

py::list scalars_to_py(const std::vector<Scalar>& v) {
    py::list out;
    for (const Scalar& s : v) out.append(s);
    return out;
}

Sector sector_from_dim(int dim, bool constrained) {
    if (dim == 1) return Sector::OneD;
    if (dim == 2) return constrained ? Sector::TwoConstrained : Sector::TwoClosed;
    throw py::value_error("dimension must be 1 or 2");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact workbench for 2-characters, Frobenius TQFTs, cobordism words and anomalies";

    py::register_exception<Error>(m, "CobaltError");

    py::class_<Scalar>(m, "Scalar")
        .def(py::init([](const py::handle& h) { return scalar_from_py(h); }))
        .def_static("root_of_unity", &Scalar::root_of_unity, py::arg("n"), py::arg("k") = 1)
        .def_property_readonly("conductor", &Scalar::conductor)
        .def("is_zero", &Scalar::is_zero)
        .def("is_one", &Scalar::is_one)
        .def("is_rational", &Scalar::is_rational)
        .def("inverse", &Scalar::inverse)
        .def("conjugate", &Scalar::conjugate)
        .def("pow", &Scalar::pow)
        .def("to_complex", &Scalar::to_complex)
        .def("__add__", [](const Scalar& a, const py::handle& b) { return a + scalar_from_py(b); })
        .def("__radd__", [](const Scalar& a, const py::handle& b) { return scalar_from_py(b) + a; })
        .def("__sub__", [](const Scalar& a, const py::handle& b) { return a - scalar_from_py(b); })
        .def("__rsub__", [](const Scalar& a, const py::handle& b) { return scalar_from_py(b) - a; })
        .def("__mul__", [](const Scalar& a, const py::handle& b) { return a * scalar_from_py(b); })
        .def("__rmul__", [](const Scalar& a, const py::handle& b) { return scalar_from_py(b) * a; })
        .def("__truediv__",
             [](const Scalar& a, const py::handle& b) { return a / scalar_from_py(b); })
        .def("__neg__", [](const Scalar& a) { return -a; })
        .def("__eq__", [](const Scalar& a, const py::handle& b) { return a == scalar_from_py(b); })
        .def("__hash__", [](const Scalar& a) { return py::hash(py::str(a.to_string())); })
        .def("__str__", &Scalar::to_string)
        .def("__repr__", [](const Scalar& a) { return "Scalar('" + a.to_string() + "')"; });

    m.def("scalar", [](const py::handle& h) { return scalar_from_py(h); },
          "Parse a scalar literal like '1/2*q8^3 + -1/2*q8'");
    m.def("conductor_cap", &conductor_cap);
    m.def("set_conductor_cap", &set_conductor_cap);

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_readonly("order", &FiniteGroup::order)
        .def_readonly("names", &FiniteGroup::names)
        .def_readonly("identity", &FiniteGroup::identity)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("__repr__",
             [](const FiniteGroup& g) {
                 return "FiniteGroup(order=" + std::to_string(g.order) + ")";
             });

    m.def("make_group", &parse_group_spec,
          "Catalog spec, e.g. 'symmetric(3)' or 'product(cyclic(2),cyclic(2))'");
    m.def("verify_group",
          [](const FiniteGroup& g, uint64_t seed) { return verdict_to_py(verify_group(g, seed)); },
          py::arg("group"), py::arg("seed") = 0);
    m.def("conjugacy_classes", &conjugacy_classes);

    py::class_<CrossedModule>(m, "CrossedModule")
        .def(py::init([](const FiniteGroup& base, const FiniteGroup& fiber,
                         std::vector<int> boundary, std::vector<std::vector<int>> action) {
                 CrossedModule x;
                 x.base = base;
                 x.fiber = fiber;
                 x.boundary = std::move(boundary);
                 x.action = std::move(action);
                 return x;
             }),
             py::arg("base"), py::arg("fiber"), py::arg("boundary"), py::arg("action"))
        .def_readonly("base", &CrossedModule::base)
        .def_readonly("fiber", &CrossedModule::fiber);
    m.def("verify_crossed_module",
          [](const CrossedModule& x) { return verdict_to_py(verify_crossed_module(x)); });
    m.def("pi0", &pi0);

    py::class_<Cocycle>(m, "Cocycle")
        .def(py::init([](const FiniteGroup& g, const py::object& values) {
                 Cocycle a;
                 a.group = g;
                 a.values = scalars_from_py(values);
                 if (a.values.size() != static_cast<size_t>(g.order) * g.order)
                     throw py::value_error("table size must be order^2");
                 return a;
             }),
             py::arg("group"), py::arg("values"))
        .def_static("trivial", &Cocycle::trivial)
        .def_property_readonly("group", [](const Cocycle& a) { return a.group; })
        .def_property_readonly("values", [](const Cocycle& a) { return scalars_to_py(a.values); })
        .def("at", [](const Cocycle& a, int g, int h) { return a.at(g, h); });
    m.def("verify_cocycle", [](const Cocycle& a) { return verdict_to_py(verify_cocycle(a)); });
    m.def("coboundary", [](const FiniteGroup& g, const py::object& beta) {
        return coboundary(g, scalars_from_py(beta));
    });
    m.def("multiply_cocycles", &multiply_cocycles);
    m.def("commutator_pairing", &commutator_pairing);

    py::class_<TwoCharacter>(m, "TwoCharacter")
        .def_property_readonly("group", [](const TwoCharacter& c) { return c.group; })
        .def_property_readonly("psi", [](const TwoCharacter& c) { return scalars_to_py(c.psi); })
        .def_property_readonly("holonomy",
                               [](const TwoCharacter& c) { return scalars_to_py(c.holonomy); })
        .def_property_readonly("is_two_group", &TwoCharacter::is_two_group);
    m.def("from_cocycle", &from_cocycle);
    m.def("character_over",
          [](const CrossedModule& x, const py::object& psi, const py::object& holonomy) {
              return character_over(x, scalars_from_py(psi),
                                    holonomy.is_none() ? std::vector<Scalar>{}
                                                       : scalars_from_py(holonomy));
          },
          py::arg("crossed_module"), py::arg("psi"), py::arg("holonomy") = py::none());
    m.def("verify_two_character",
          [](const TwoCharacter& c) { return verdict_to_py(verify_two_character(c)); });
    m.def("holonomy_table", [](const TwoCharacter& c) {
        HolonomyReport r = holonomy_table(c);
        py::dict d;
        d["trivial"] = r.trivial;
        d["table"] = scalars_to_py(r.table);
        return d;
    });

    py::class_<ProjRep>(m, "ProjRep")
        .def(py::init([](const FiniteGroup& g, const Cocycle& a, int dim,
                         const py::object& mats) {
                 ProjRep r;
                 r.group = g;
                 r.cocycle = a;
                 r.dim = dim;
                 for (const auto& mat : mats) {
                     r.mats.push_back(
                         matrix_from_py(py::reinterpret_borrow<py::object>(mat)));
                 }
                 return r;
             }),
             py::arg("group"), py::arg("cocycle"), py::arg("dim"), py::arg("mats"))
        .def_property_readonly("group", [](const ProjRep& r) { return r.group; })
        .def_property_readonly("cocycle", [](const ProjRep& r) { return r.cocycle; })
        .def_readonly("dim", &ProjRep::dim)
        .def_property_readonly("mats", [](const ProjRep& r) {
            py::list out;
            for (const Matrix& mm : r.mats) out.append(matrix_to_py(mm));
            return out;
        });
    m.def("verify_projrep", [](const ProjRep& r) { return verdict_to_py(verify_projrep(r)); });
    m.def("twisted_regular_rep", &twisted_regular_rep);

    py::class_<HomotopyFixedPoint>(m, "HomotopyFixedPoint")
        .def_property_readonly("character",
                               [](const HomotopyFixedPoint& p) { return p.character; })
        .def_readonly("dim", &HomotopyFixedPoint::dim)
        .def_property_readonly("maps", [](const HomotopyFixedPoint& p) {
            py::list out;
            for (const Matrix& mm : p.maps) out.append(matrix_to_py(mm));
            return out;
        });
    m.def("to_fixed_point", &to_fixed_point);
    m.def("from_fixed_point", &from_fixed_point);
    m.def("verify_fixed_point",
          [](const HomotopyFixedPoint& p) { return verdict_to_py(verify_fixed_point(p)); });
    m.def("extract_holonomy", &extract_holonomy);

    py::class_<FrobeniusAlgebra>(m, "FrobeniusAlgebra")
        .def_readonly("dim", &FrobeniusAlgebra::dim)
        .def("__repr__", [](const FrobeniusAlgebra& a) {
            return "FrobeniusAlgebra(dim=" + std::to_string(a.dim) + ")";
        });
    m.def("make_group_algebra", &make_group_algebra);
    m.def("verify_frobenius", [](const FrobeniusAlgebra& a) {
        FrobeniusReport rep = verify_frobenius(a);
        py::dict d = verdict_to_py(rep.verdict);
        d["commutative"] = rep.commutative;
        d["symmetric"] = rep.symmetric;
        return d;
    });
    m.def("center", [](const FrobeniusAlgebra& a) {
        py::list out;
        for (const auto& vec : center(a)) out.append(scalars_to_py(vec));
        return out;
    });
    m.def("handle_element",
          [](const FrobeniusAlgebra& a) { return scalars_to_py(handle_element(a)); });
    m.def("is_semisimple", &is_semisimple);
    m.def("genus_invariant", &genus_invariant);

    py::class_<CobWord>(m, "CobWord")
        .def_property_readonly("source",
                               [](const CobWord& w) { return w.source().to_string(); })
        .def_property_readonly("target",
                               [](const CobWord& w) { return w.target().to_string(); })
        .def_property_readonly("dimension", &CobWord::dimension)
        .def("__str__", [](const CobWord& w) { return serialize_word(w); })
        .def("__repr__", [](const CobWord& w) {
            return "CobWord('" + serialize_word(w) + "')";
        });
    m.def("parse_word",
          [](const std::string& text, int dim, bool constrained) {
              return parse_word(text, sector_from_dim(dim, constrained));
          },
          py::arg("text"), py::arg("dim") = 2, py::arg("constrained") = false);
    m.def("serialize_word", &serialize_word);
    m.def("cylinderize", &cylinderize);
    m.def("eval_closed_2d", [](const CobWord& w, const FrobeniusAlgebra& a) {
        return matrix_to_py(eval_closed_2d(w, a));
    });

    py::class_<BoundaryCondition>(m, "BoundaryCondition")
        .def(py::init([](int dim, const py::object& v, const py::object& phi) {
                 BoundaryCondition bc;
                 bc.dim = dim;
                 bc.v = scalars_from_py(v);
                 bc.phi = scalars_from_py(phi);
                 return bc;
             }),
             py::arg("dim"), py::arg("v"), py::arg("phi"))
        .def_readonly("dim", &BoundaryCondition::dim);
    m.def("eval_1d", [](const CobWord& w, const BoundaryCondition& bc) {
        return matrix_to_py(eval_1d(w, bc));
    });
    m.def("mapping_cylinder", &mapping_cylinder);
    m.def("transmission", [](const FiniteGroup& g, const ProjRep& r) {
        return scalars_to_py(transmission(g, r));
    });

    py::class_<SemitrivializedAnomaly>(m, "SemitrivializedAnomaly")
        .def_property_readonly("morphism_count", [](const SemitrivializedAnomaly& w) {
            return w.model.morphisms.size();
        });
    py::class_<AnomalousTheory>(m, "AnomalousTheory")
        .def_property_readonly("anomaly", [](const AnomalousTheory& z) { return z.anomaly; })
        .def_property_readonly("dims", [](const AnomalousTheory& z) { return z.dims; });
    m.def("verify_anomaly",
          [](const SemitrivializedAnomaly& w) { return verdict_to_py(verify_anomaly(w)); });
    m.def("verify_anomalous_theory",
          [](const AnomalousTheory& z, int threads) {
              return verdict_to_py(verify_anomalous_theory(z, threads));
          },
          py::arg("theory"), py::arg("threads") = 1);
    m.def("reduce_boundary",
          [](const py::handle& lambda, const BoundaryCondition& bc, int max_points, int threads) {
              return reduce_boundary(scalar_from_py(lambda), bc, {max_points, 1}, threads);
          },
          py::arg("lam"), py::arg("bc"), py::arg("max_points") = 2, py::arg("threads") = 1);
    m.def("two_group_anomaly", &two_group_anomaly);
    m.def("anomaly_character", &anomaly_character);

    py::class_<ModularData>(m, "ModularData")
        .def(py::init([](const py::object& s, const py::object& t) {
                 ModularData md;
                 md.S = matrix_from_py(s);
                 md.T = matrix_from_py(t);
                 md.dim = static_cast<int>(md.S.rows());
                 return md;
             }),
             py::arg("S"), py::arg("T"))
        .def_readonly("dim", &ModularData::dim);
    m.def("verify_modular",
          [](const ModularData& md) { return verdict_to_py(verify_modular(md)); });
    m.def("modular_defect", [](const ModularData& md, const std::string& relator) {
        return modular_defect(md, relator);
    });

    // JSON bridge, for interop with the CLI's file formats.
    m.def("load_projrep", [](const std::string& p) { return projrep_from_json(load_json_file(p)); });
    m.def("load_frobenius",
          [](const std::string& p) { return frobenius_from_json(load_json_file(p)); });
    m.def("load_modular", [](const std::string& p) { return modular_from_json(load_json_file(p)); });
    m.def("load_boundary_condition",
          [](const std::string& p) { return boundary_condition_from_json(load_json_file(p)); });
    m.def("load_group", [](const std::string& p) { return group_from_json(load_json_file(p)); });
    m.def("load_cocycle", [](const std::string& p) { return cocycle_from_json(load_json_file(p)); });
}

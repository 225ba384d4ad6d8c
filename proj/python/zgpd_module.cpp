#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zgpd/cli.hpp"
#include "zgpd/serialize.hpp"
#include "zgpd/universe.hpp"

namespace py = pybind11;
using namespace zgpd;

namespace {

py::object wrap(Document d) {
  if (auto* a = std::get_if<ZTwoPtr>(&d)) return py::cast(std::const_pointer_cast<ZTwoGroupoid>(*a));
  if (auto* f = std::get_if<EquivariantFunctor>(&d)) return py::cast(*f);
  if (auto* g = std::get_if<GroupoidPtr>(&d)) return py::cast(serialize(**g));
  throw Error(ErrorCode::SchemaViolation, "only ztwo-groupoid and map documents convert to Python objects", {"/kind"});
}

py::dict fibration_dict(const FibrationReport& r) {
  py::dict d;
  d["holds"] = r.holds;
  d["isofibration"] = r.isofibration;
  d["i_prime_lifting"] = r.i_prime_lifting;
  d["squares_checked"] = r.squares_checked;
  d["has_witness"] = r.failing_square.has_value();
  return d;
}

}  // namespace

PYBIND11_MODULE(_zgpd, m) {
  m.doc() = "Z2-equivariant groupoids: injective model structure, path objects and the finite universe";

  py::register_exception<Error>(m, "ZgpdError");

  py::class_<ZTwoGroupoid, std::shared_ptr<ZTwoGroupoid>>(m, "ZTwoGroupoid")
      .def_property_readonly("object_count", [](const ZTwoGroupoid& a) { return a.g().object_count(); })
      .def_property_readonly("morphism_count", [](const ZTwoGroupoid& a) { return a.g().morphism_count(); })
      .def_property_readonly("objects",
                             [](const ZTwoGroupoid& a) {
                               std::vector<std::string> out;
                               for (ObjectId x : a.g().objects()) out.push_back(a.g().object_name(x));
                               return out;
                             })
      .def("fixed_object_count", [](const ZTwoGroupoid& a) { return fixed_points(a).size(); })
      .def("to_json", [](const ZTwoGroupoid& a) { return serialize(a); });

  py::class_<EquivariantFunctor>(m, "Map")
      .def_property_readonly("source", [](const EquivariantFunctor& f) { return std::const_pointer_cast<ZTwoGroupoid>(f.source); })
      .def_property_readonly("target", [](const EquivariantFunctor& f) { return std::const_pointer_cast<ZTwoGroupoid>(f.target); })
      .def("is_cofibration", &is_cofibration)
      .def("is_weak_equivalence", &is_weak_equivalence)
      .def("is_acyclic_cofibration", &is_acyclic_cofibration)
      .def("is_projective_fibration", &is_projective_fibration)
      .def("injective_fibration_report", [](const EquivariantFunctor& f) { return fibration_dict(is_injective_fibration(f)); })
      .def("is_injective_fibration", [](const EquivariantFunctor& f) { return is_injective_fibration(f).holds; })
      .def("is_covering", [](const EquivariantFunctor& f) { return is_covering(f).holds; })
      .def("to_json", [](const EquivariantFunctor& f) { return serialize(f); })
      .def("__eq__", [](const EquivariantFunctor& a, const EquivariantFunctor& b) { return a == b; });

  m.def("standard", [](const std::string& name) -> py::object {
    auto v = standard(name);
    if (auto* a = std::get_if<ZTwoPtr>(&v)) return py::cast(std::const_pointer_cast<ZTwoGroupoid>(*a));
    return py::cast(std::get<EquivariantFunctor>(v));
  }, "A standard object or map: one, check_I, nabla, s_one, s_I, i, i_prime, s_i");
  m.def("to_one", [](std::shared_ptr<ZTwoGroupoid> a) { return to_one(a); });
  m.def("compose", [](const EquivariantFunctor& g, const EquivariantFunctor& f) { return compose(g, f); });
  m.def("is_fibrant", [](std::shared_ptr<ZTwoGroupoid> a) { return is_fibrant(a); });
  m.def("deserialize", [](const std::string& text) { return wrap(deserialize(text)); });

  m.def("factorize", [](const EquivariantFunctor& f) {
    const Factorization fac = factorize(f);
    return py::make_tuple(fac.j, fac.q);
  });
  m.def("path_object_report", [](const EquivariantFunctor& f) {
    const PathObject p = path_object(f);
    const PathObjectReport r = check_path_object(p);
    py::dict d;
    d["objects"] = p.total->g().object_count();
    d["delta1_acyclic_cofibration"] = r.delta1_acyclic_cofibration;
    d["delta2_fibration"] = r.delta2_fibration;
    d["ok"] = r.ok();
    return d;
  });

  m.def("universe_counts", [](std::size_t pool) {
    const UniverseBundle b = build_universe(pool);
    py::dict d;
    d["objects"] = b.U->g().object_count();
    d["morphisms"] = b.U->g().morphism_count();
    d["fixed_objects"] = fixed_points(*b.U).size();
    d["total_objects"] = b.Utilde->g().object_count();
    d["total_morphisms"] = b.Utilde->g().morphism_count();
    return d;
  });
  m.def("check_universe_maps", [](std::size_t pool) { return check_universe_maps(build_universe(pool)).passed(); });
  m.def("check_univalence", [](std::size_t pool) {
    const UnivalenceCertificate c = check_univalence(build_universe(pool));
    py::dict d;
    d["delta1_acyclic_cofibration"] = c.delta1_acyclic_cofibration;
    d["u_fibrant"] = c.u_fibrant;
    d["path_fibrant"] = c.path_fibrant;
    d["delta1_weak_equivalence"] = c.delta1_weak_equivalence;
    d["path_objects"] = c.path_objects;
    d["conclusion"] = c.conclusion;
    return d;
  });
  m.def("classify_roundtrip", [](const EquivariantFunctor& q, std::size_t pool) {
    const SmallFibrationWitness w = classify(q, build_universe(pool));
    return is_isomorphism(w.comparison.map) && compose(w.pullback.first, w.comparison) == q;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs a zgpd command; returns (exit code, stdout, stderr)");
}

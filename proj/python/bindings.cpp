#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evidence/error.hpp"
#include "evidence/frame.hpp"
#include "evidence/harness.hpp"
#include "evidence/io.hpp"
#include "evidence/labeling.hpp"
#include "evidence/mass.hpp"
#include "evidence/population.hpp"
#include "evidence/rational.hpp"

namespace py = pybind11;
using namespace evidence;

// Rational <-> fractions.Fraction (ints are accepted on the way in).
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyBool_Check(src.ptr())) return false;
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    if (PyFloat_Check(src.ptr())) return false;
    value = Rational::from_strings(py::str(src.attr("numerator")).cast<std::string>(),
                                   py::str(src.attr("denominator")).cast<std::string>());
    return true;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::int_(py::str(r.numerator_string()));
    py::object den = py::int_(py::str(r.denominator_string()));
    return fraction(num, den).release();
  }
};
}  // namespace pybind11::detail

namespace {

std::map<std::string, Rational> by_encoding(const Frame& frame, const std::map<Mask, Rational>& w) {
  std::map<std::string, Rational> out;
  for (const auto& [bits, value] : w) out.emplace(encode_mask(frame, bits), value);
  return out;
}

FrameSubset subset_arg(const Frame& frame, const py::handle& h) {
  if (py::isinstance<FrameSubset>(h)) return h.cast<FrameSubset>();
  if (py::isinstance<py::str>(h)) return FrameSubset::decode(frame, h.cast<std::string>());
  return FrameSubset::from_names(frame, h.cast<std::vector<std::string>>());
}

}  // namespace

PYBIND11_MODULE(_evidence, m) {
  m.doc() = "Exact finite-frame evidence theory over measured populations";

  static py::exception<Error> evidence_error(m, "EvidenceError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(e.what(), std::string(to_string(e.code())));
      PyErr_SetObject(evidence_error.ptr(), args.ptr());
    }
  });

  py::class_<Frame>(m, "Frame")
      .def(py::init(&Frame::make), py::arg("names"))
      .def_property_readonly("names", &Frame::names)
      .def("__len__", &Frame::size)
      .def("subset", [](const Frame& f, const py::handle& h) { return subset_arg(f, h); })
      .def("full", [](const Frame& f) { return FrameSubset::full(f); })
      .def("empty", [](const Frame& f) { return FrameSubset::empty(f); })
      .def(py::self == py::self)
      .def("__repr__", [](const Frame& f) {
        return "Frame(" + encode_mask(f, f.full_mask()) + ")";
      });

  py::class_<FrameSubset>(m, "FrameSubset")
      .def(py::init<Frame, Mask>(), py::arg("frame"), py::arg("bits"))
      .def_property_readonly("frame", &FrameSubset::frame)
      .def_property_readonly("bits", &FrameSubset::bits)
      .def_property_readonly("names", &FrameSubset::names)
      .def("encode", &FrameSubset::encode)
      .def("__len__", &FrameSubset::cardinality)
      .def("is_empty", &FrameSubset::is_empty)
      .def("complement", &FrameSubset::complement)
      .def("is_subset_of", &FrameSubset::is_subset_of)
      .def("__and__", &FrameSubset::intersect)
      .def("__or__", &FrameSubset::unite)
      .def("__sub__", &FrameSubset::minus)
      .def("__eq__", [](const FrameSubset& a, const FrameSubset& b) { return a == b; })
      .def("__hash__", [](const FrameSubset& s) { return py::hash(py::make_tuple(s.encode(), s.frame().size())); })
      .def("__repr__", [](const FrameSubset& s) { return "FrameSubset(" + s.encode() + ")"; });

  py::class_<MassFunction>(m, "MassFunction")
      .def(py::init([](const Frame& frame, const py::dict& weights) {
             std::vector<std::pair<FrameSubset, Rational>> entries;
             for (auto [key, value] : weights) {
               entries.emplace_back(subset_arg(frame, key), value.cast<Rational>());
             }
             return MassFunction::make(frame, entries);
           }),
           py::arg("frame"), py::arg("weights"))
      .def_static("vacuous", &MassFunction::vacuous)
      .def_static("categorical", &MassFunction::categorical)
      .def_property_readonly("frame", &MassFunction::frame)
      .def_property_readonly("weights",
                             [](const MassFunction& mf) { return by_encoding(mf.frame(), mf.weights()); })
      .def("weight", [](const MassFunction& mf, const py::handle& h) {
        return mf.weight(subset_arg(mf.frame(), h));
      })
      .def(py::self == py::self)
      .def("__repr__", [](const MassFunction& mf) { return io::mass_to_json(mf); });

  m.def("belief", [](const MassFunction& mf, const py::handle& a) { return belief(mf, subset_arg(mf.frame(), a)); });
  m.def("plausibility",
        [](const MassFunction& mf, const py::handle& a) { return plausibility(mf, subset_arg(mf.frame(), a)); });
  m.def("belief_table", [](const MassFunction& mf) { return belief_table(mf).values(); },
        "Belief of every subset, indexed by bit pattern");
  m.def("mass_from_belief", [](const Frame& frame, std::vector<Rational> values) {
    return mass_from_belief(BeliefTable(frame, std::move(values)));
  });
  m.def("dempster_combine", [](const MassFunction& a, const MassFunction& b) {
    Combination c = dempster_combine(a, b);
    return py::make_tuple(c.mass, c.conflict);
  }, "Returns (combined mass, conflict)");

  py::class_<PopulationRecord>(m, "PopulationRecord")
      .def(py::init<std::string, FrameSubset, FrameSubset>(), py::arg("object_id"), py::arg("response"),
           py::arg("label"))
      .def(py::init<std::string, FrameSubset>(), py::arg("object_id"), py::arg("response"))
      .def_property_readonly("object_id", &PopulationRecord::object_id)
      .def_property_readonly("response", &PopulationRecord::response)
      .def_property_readonly("label", &PopulationRecord::label);

  py::class_<Population>(m, "Population")
      .def(py::init<Frame, std::vector<PopulationRecord>>(), py::arg("frame"), py::arg("records"))
      .def_property_readonly("frame", &Population::frame)
      .def_property_readonly("records", &Population::records)
      .def("__len__", &Population::size)
      .def(py::self == py::self);

  m.def("measure", [](const PopulationRecord& r, const py::handle& a) { return measure(r, subset_arg(r.frame(), a)); });
  m.def("measure_labeled",
        [](const PopulationRecord& r, const py::handle& a) { return measure_labeled(r, subset_arg(r.frame(), a)); });
  m.def("effective_response", &effective_response);
  m.def("expr_holds", [](const PopulationRecord& r, const py::handle& a) { return expr_holds(r, subset_arg(r.frame(), a)); });
  m.def("estimate_mass", &estimate_mass);
  m.def("estimate_belief_direct",
        [](const Population& p, const py::handle& a) { return estimate_belief_direct(p, subset_arg(p.frame(), a)); });
  m.def("estimate_plausibility_direct", [](const Population& p, const py::handle& a) {
    return estimate_plausibility_direct(p, subset_arg(p.frame(), a));
  });
  m.def("validate_axioms", [](const Frame& frame, std::vector<bool> truth) {
    const AxiomReport r = validate_axioms(MeasurementTable{frame, std::move(truth)});
    py::dict out;
    out["frame_true"] = r.frame_true;
    out["superset_consistent"] = r.superset_consistent;
    out["subset_consistent"] = r.subset_consistent;
    out["singleton_determined"] = r.singleton_determined;
    out["violations"] = r.violations;
    out["ok"] = r.ok();
    return out;
  }, "Checks a full truth table indexed by bit pattern");
  m.def("synthesize_population",
        [](const MassFunction& mf, std::size_t size, const std::string& mode, std::uint64_t seed) {
          if (mode != "exact" && mode != "sampled") throw Error(Errc::parse_error, "mode must be exact or sampled");
          return synthesize_population(mf, size, mode == "exact" ? SynthesisMode::exact : SynthesisMode::sampled,
                                       seed);
        },
        py::arg("mass"), py::arg("size"), py::arg("mode") = "exact", py::arg("seed") = 0);

  py::class_<LabelingProcessSpec>(m, "LabelingProcessSpec")
      .def(py::init([](const Frame& frame, const py::dict& probs) {
             std::vector<FrameSubset> labels;
             std::vector<Rational> values;
             for (auto [key, value] : probs) {
               labels.push_back(subset_arg(frame, key));
               values.push_back(value.cast<Rational>());
             }
             return LabelingProcessSpec::make(labels, values);
           }),
           py::arg("frame"), py::arg("probs"))
      .def_static("point", &LabelingProcessSpec::point)
      .def_property_readonly("mass", &LabelingProcessSpec::as_mass);

  m.def("simple_relabel", [](const Population& p, const py::handle& label) {
    RelabelOutcome out = simple_relabel(p, subset_arg(p.frame(), label));
    return py::make_tuple(out.population, out.discarded);
  }, "Returns (population, discarded count)");
  m.def("general_relabel",
        [](const Population& p, const LabelingProcessSpec& spec, std::uint64_t seed, unsigned threads) {
          RelabelOutcome out = general_relabel(p, spec, seed, threads);
          return py::make_tuple(out.population, out.discarded);
        },
        py::arg("population"), py::arg("spec"), py::arg("seed"), py::arg("threads") = 1);
  m.def("expected_class_weights", [](const Population& p, const LabelingProcessSpec& spec) {
    return by_encoding(p.frame(), expected_class_weights(p, spec));
  });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_property_readonly("overall", &VerificationReport::overall)
      .def_property_readonly("checks",
                             [](const VerificationReport& r) {
                               py::list out;
                               for (const auto& c : r.checks()) {
                                 out.append(py::make_tuple(c.name, std::string(to_string(c.status)), c.lhs,
                                                           c.rhs, c.detail));
                               }
                               return out;
                             })
      .def("to_json", &VerificationReport::to_json)
      .def("to_text", &VerificationReport::to_text);

  m.def("coot_frame", &coot_frame);
  m.def("coot_label", &coot_label);
  m.def("coot_fixture", &coot_fixture);
  m.def("coot_standin", &coot_standin);
  m.def("verify_coot_table", &verify_coot_table);
  m.def("verify_mte_axioms", [](const Population& p) { return verify_mte_axioms(p); });
  m.def("verify_simple_relabel", [](const Population& p, const py::handle& label) {
    return verify_simple_relabel(p, subset_arg(p.frame(), label));
  });
  m.def("verify_general_relabel",
        [](const Population& p, const LabelingProcessSpec& spec, std::size_t trials, std::uint64_t seed,
           const Rational& tolerance, unsigned threads) {
          return verify_general_relabel(p, spec, MonteCarloOptions{trials, seed, tolerance, threads});
        },
        py::arg("population"), py::arg("spec"), py::arg("trials") = 10000, py::arg("seed") = 0,
        py::arg("tolerance") = Rational(1, 100), py::arg("threads") = 1);

  m.def("mass_to_json", &io::mass_to_json);
  m.def("mass_from_json", [](const std::string& text) { return io::mass_from_json(text); });
  m.def("population_to_csv", &io::population_to_csv);
  m.def("population_from_csv", [](const std::string& text) { return io::population_from_csv(text); });
}

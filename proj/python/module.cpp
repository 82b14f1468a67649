#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gqc/channels.hpp"
#include "gqc/coherence.hpp"
#include "gqc/fock.hpp"
#include "gqc/gaussian.hpp"
#include "gqc/random.hpp"
#include "gqc/states.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace gqc;

namespace {

std::string state_repr(const GaussianState& s) {
  std::ostringstream os;
  os << "GaussianState(modes=" << s.modes << ")";
  return os.str();
}

std::string channel_repr(const GaussianChannel& ch) {
  std::ostringstream os;
  os << "GaussianChannel(modes=" << ch.modes << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relative-entropy coherence of multimode Gaussian states";

  py::class_<GaussianState>(m, "GaussianState",
                            "Covariance matrix V (vacuum = identity), displacement d "
                            "with coherent |alpha> at d = (2 Re alpha, 2 Im alpha)")
      .def(py::init([](Matrix V, Vector d) {
             return make_state(std::move(V), std::move(d));
           }),
           "V"_a, "d"_a)
      .def_readonly("modes", &GaussianState::modes)
      .def_readonly("V", &GaussianState::V)
      .def_readonly("d", &GaussianState::d)
      .def("__repr__", &state_repr);

  py::class_<Violation>(m, "Violation")
      .def_readonly("check", &Violation::check)
      .def_readonly("measured", &Violation::measured)
      .def_readonly("threshold", &Violation::threshold)
      .def("__repr__", [](const Violation& v) {
        std::ostringstream os;
        os << "Violation(" << v.check << ", measured=" << v.measured << ")";
        return os.str();
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("ok", &ValidationReport::ok)
      .def_readonly("violations", &ValidationReport::violations)
      .def("__bool__", [](const ValidationReport& r) { return r.ok; });

  py::class_<CoherenceReport>(m, "CoherenceReport")
      .def_readonly("coherence_bits", &CoherenceReport::coherence_bits)
      .def_readonly("entropy_bits", &CoherenceReport::entropy_bits)
      .def_readonly("mean_photons", &CoherenceReport::mean_photons)
      .def_property_readonly(
          "symplectic_eigenvalues",
          [](const CoherenceReport& r) { return r.symplectic.values; })
      .def_readonly("closest_incoherent", &CoherenceReport::closest_incoherent);

  py::class_<GaussianChannel>(m, "GaussianChannel",
                              "Gaussian map (T, N, dbar): V -> T V T^t + N, "
                              "d -> T d + dbar")
      .def(py::init([](Matrix T, Matrix N, Vector dbar) {
             return make_channel(std::move(T), std::move(N), std::move(dbar));
           }),
           "T"_a, "N"_a, "dbar"_a)
      .def_readonly("modes", &GaussianChannel::modes)
      .def_readonly("T", &GaussianChannel::T)
      .def_readonly("N", &GaussianChannel::N)
      .def_readonly("dbar", &GaussianChannel::dbar)
      .def("__repr__", &channel_repr);

  py::class_<IncoherentModeSpec>(m, "IncoherentModeSpec")
      .def(py::init([](double t, double theta, bool reflect, double w) {
             return IncoherentModeSpec{t, theta, reflect, w};
           }),
           "t"_a, "theta"_a = 0.0, "reflect"_a = false, "w"_a = 0.0)
      .def_readwrite("t", &IncoherentModeSpec::t)
      .def_readwrite("theta", &IncoherentModeSpec::theta)
      .def_readwrite("reflect", &IncoherentModeSpec::reflect)
      .def_readwrite("w", &IncoherentModeSpec::w);

  py::class_<IncoherentModeFactor>(m, "IncoherentModeFactor")
      .def_readonly("t", &IncoherentModeFactor::t)
      .def_readonly("orthogonal", &IncoherentModeFactor::orthogonal)
      .def_readonly("det_o", &IncoherentModeFactor::det_o)
      .def_readonly("theta", &IncoherentModeFactor::theta)
      .def_readonly("reflect", &IncoherentModeFactor::reflect)
      .def_readonly("w", &IncoherentModeFactor::w);

  py::class_<IncoherentDecomposition>(m, "IncoherentDecomposition")
      .def_readonly("permutation", &IncoherentDecomposition::permutation)
      .def_readonly("factors", &IncoherentDecomposition::factors);

  py::class_<IncoherentClassification>(m, "IncoherentClassification")
      .def_property_readonly("incoherent", &IncoherentClassification::incoherent)
      .def_readonly("rejection", &IncoherentClassification::rejection)
      .def_property_readonly(
          "decomposition",
          [](const IncoherentClassification& c)
              -> std::optional<IncoherentDecomposition> { return c.decomposition; })
      .def("__bool__", &IncoherentClassification::incoherent);

  py::class_<QuadraticFormCoefficients>(m, "QuadraticFormCoefficients")
      .def_readonly("b2", &QuadraticFormCoefficients::b2)
      .def_readonly("b1", &QuadraticFormCoefficients::b1)
      .def_readonly("b0", &QuadraticFormCoefficients::b0)
      .def_readonly("det_a", &QuadraticFormCoefficients::det_a);

  py::class_<FockMatrix>(m, "FockMatrix")
      .def_readonly("cutoff", &FockMatrix::cutoff)
      .def_readonly("elements", &FockMatrix::elements)
      .def_readonly("trace_deficit", &FockMatrix::trace_deficit)
      .def_readonly("cutoff_warning", &FockMatrix::cutoff_warning);

  // states
  m.def("vacuum", &make_vacuum, "modes"_a = 1);
  m.def("thermal", &make_thermal, "nbar"_a);
  m.def("coherent", &make_coherent, "alpha"_a);
  m.def("squeezed", &make_squeezed, "r"_a, "theta"_a = 0.0);
  m.def("displaced_squeezed_thermal", &make_displaced_squeezed_thermal, "nbar"_a,
        "r"_a, "theta"_a, "alpha"_a);
  m.def("two_mode_squeezed", &make_two_mode_squeezed, "r"_a);

  // core operations
  m.def("symplectic_form", &symplectic_form, "modes"_a);
  m.def(
      "validate_state",
      [](const GaussianState& s, double tol) { return validate_state(s, tol); },
      "state"_a, "tol"_a = kDefaultTol);
  m.def(
      "symplectic_eigenvalues",
      [](const GaussianState& s) { return symplectic_eigenvalues(s).values; },
      "state"_a, "Symplectic spectrum, sorted descending");
  m.def("g_function", &g_function, "nu"_a);
  m.def("entropy", &entropy, "state"_a, "Von Neumann entropy in bits");
  m.def("tensor", &tensor, "a"_a, "b"_a);
  m.def("reduce", &reduce, "state"_a, "modes"_a, "Restrict to 0-based mode indices");

  // coherence
  m.def("mean_photon_numbers", &mean_photon_numbers, "state"_a);
  m.def("coherence", &coherence, "state"_a,
        "Relative-entropy coherence report (bits)");
  m.def("closest_incoherent_state", &closest_incoherent_state, "state"_a);
  m.def("relative_entropy_to_incoherent", &relative_entropy_to_incoherent, "state"_a,
        "nbars"_a);
  m.def("is_incoherent", &is_incoherent, "state"_a, "tol"_a);

  // channels
  m.def("identity_channel", &identity_channel, "modes"_a = 1);
  m.def("loss", &make_loss, "eta"_a);
  m.def("amplifier", &make_amplifier, "gain"_a);
  m.def("rotation", &make_rotation, "theta"_a);
  m.def(
      "validate_channel",
      [](const GaussianChannel& ch, double tol) { return validate_channel(ch, tol); },
      "channel"_a, "tol"_a = kDefaultTol);
  m.def("apply", &apply, "channel"_a, "state"_a);
  m.def("compose", &compose, "outer"_a, "inner"_a);
  m.def(
      "classify_incoherent",
      [](const GaussianChannel& ch, double tol) {
        return classify_incoherent(ch, tol);
      },
      "channel"_a, "tol"_a = kDefaultTol);
  m.def("incoherent_channel", &make_incoherent_channel, "modes"_a,
        "permutation"_a = std::vector<int>{});
  m.def("reassemble", &reassemble, "decomposition"_a);

  // number-basis oracle
  m.def("integral_form_matrix", &integral_form_matrix, "V"_a);
  m.def("quadratic_coeffs", &quadratic_coeffs, "V"_a, "d"_a);
  m.def("fock_element", &fock_element, "V"_a, "d"_a, "m"_a, "n"_a);
  m.def("fock_matrix", &fock_matrix, "state"_a, "cutoff"_a);
  m.def("default_cutoff", &default_cutoff, "state"_a);
  m.def("oracle_mean_photon", &oracle_mean_photon, "fock"_a);
  m.def("oracle_coherence", &oracle_coherence, "fock"_a);
  m.def("diagonality_residual", &diagonality_residual, "fock"_a);

  m.attr("DEFAULT_TOL") = kDefaultTol;
  m.attr("__version__") = "0.1.0";
}

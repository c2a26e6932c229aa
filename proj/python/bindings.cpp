#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tricoh/bench.hpp"
#include "tricoh/error.hpp"
#include "tricoh/geometry.hpp"
#include "tricoh/measures.hpp"
#include "tricoh/sampling.hpp"
#include "tricoh/state.hpp"

namespace py = pybind11;
using namespace tricoh;

namespace {

using Triple = std::tuple<double, double, double>;

Subsystem sub_of(const std::string& label) {
  if (label.size() != 1) throw Error(ErrorCode::InvalidParameters, "subsystem must be 'a', 'b' or 'c'");
  return subsystem_from_char(label[0]);
}

CoherenceVector vec_of(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
Triple triple(const CoherenceVector& v) { return {v.sa, v.sb, v.sc}; }

Noise noise_of(const std::string& name) {
  if (name == "none") return Noise::None;
  if (name == "poisson") return Noise::Poisson;
  throw Error(ErrorCode::InvalidParameters, "noise must be 'none' or 'poisson'");
}

TomographySettings settings(std::uint64_t shots, const std::string& noise, std::uint64_t seed) {
  TomographySettings t;
  t.shots = shots;
  t.noise = noise_of(noise);
  t.seed = seed;
  return t;
}

py::dict check(const Check& c) {
  py::dict d;
  d["value"] = c.value;
  d["pass"] = c.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Three-qubit separability coherences, constraint geometry and bench simulation";

  static py::exception<Error> error(m, "TricohError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<ThreeQubitState>(m, "State")
      .def(py::init([](const std::vector<Amplitude>& amps, bool normalize) {
             if (amps.size() != 8) throw Error(ErrorCode::InvalidParameters, "a state needs eight amplitudes");
             std::array<Amplitude, 8> a{};
             std::copy(amps.begin(), amps.end(), a.begin());
             return make_state(a, normalize);
           }),
           py::arg("amplitudes"), py::arg("normalize") = false)
      .def_property_readonly("amplitudes",
                             [](const ThreeQubitState& s) {
                               return std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
                             })
      .def("norm", &ThreeQubitState::norm)
      .def("__repr__", [](const ThreeQubitState& s) {
        std::string out = "State([";
        for (std::size_t i = 0; i < 8; ++i) {
          if (i) out += ", ";
          out += py::str(py::cast(s[i]));
        }
        return out + "])";
      });

  py::class_<BeamParameters>(m, "Beam")
      .def(py::init<>())
      .def_readwrite("alpha", &BeamParameters::alpha)
      .def_readwrite("beta", &BeamParameters::beta)
      .def_readwrite("gx", &BeamParameters::gx)
      .def_readwrite("gy", &BeamParameters::gy)
      .def_readwrite("fx", &BeamParameters::fx)
      .def_readwrite("fy", &BeamParameters::fy)
      .def_property_readonly("delta", &BeamParameters::delta)
      .def_property_readonly("gamma", &BeamParameters::gamma)
      .def("validate", &BeamParameters::validate);

  m.def("beam_to_state", &beam_to_state, py::arg("beam"));
  m.def(
      "reduced_matrix", [](const ThreeQubitState& s, const std::string& sub) { return reduced_matrix(s, sub_of(sub)).matrix(); },
      py::arg("state"), py::arg("subsystem"));
  m.def(
      "apply_local_unitary",
      [](const ThreeQubitState& s, const std::string& sub, const Matrix2c& u) { return apply_local_unitary(s, sub_of(sub), u); },
      py::arg("state"), py::arg("subsystem"), py::arg("unitary"));
  m.def("fidelity", &fidelity);

  m.def("separability_det", py::overload_cast<const Matrix2c&>(&separability_det), py::arg("w"));
  m.def("separability_eig", py::overload_cast<const Matrix2c&>(&separability_eig), py::arg("w"));
  m.def(
      "stokes_vector",
      [](const Matrix2c& w) {
        const auto v = stokes_vector(w);
        return Triple{v.s1, v.s2, v.s3};
      },
      py::arg("w"));
  m.def(
      "separabilities", [](const ThreeQubitState& s) { return triple(separabilities(s)); }, py::arg("state"));
  m.def(
      "closed_form_separabilities", [](const BeamParameters& p) { return triple(closed_form_separabilities(p)); },
      py::arg("beam"));

  m.def(
      "constraint_slacks",
      [](const Triple& v) {
        const auto s = constraint_slacks(vec_of(v));
        return Triple{s.slack_a, s.slack_b, s.slack_c};
      },
      py::arg("s"));
  m.def(
      "directed_coherences",
      [](const Triple& v) {
        const auto d = directed_coherences(vec_of(v));
        return Triple{d.c_a_bc, d.c_b_ca, d.c_c_ab};
      },
      py::arg("s"));
  m.def(
      "genuine_coherence", [](const Triple& v) { return genuine_coherence(vec_of(v)); }, py::arg("s"));
  m.def(
      "classify_point", [](const Triple& v, double tol) { return std::string(to_string(classify_point(vec_of(v), tol))); },
      py::arg("s"), py::arg("tol") = kBoundaryTolerance);
  m.def(
      "nearest_vertex", [](const Triple& v, double tol) { return nearest_vertex(vec_of(v), tol); }, py::arg("s"),
      py::arg("tol") = 1e-6);
  m.def("cross_section_area", &cross_section_area, py::arg("total"));
  m.def(
      "allowed_volume_mc",
      [](std::uint64_t n, std::uint64_t seed, unsigned shards) {
        py::gil_scoped_release release;
        const auto v = allowed_volume_mc(n, seed, shards);
        py::gil_scoped_acquire acquire;
        py::dict d;
        d["n"] = v.n;
        d["seed"] = v.seed;
        d["shards"] = v.shards;
        d["estimate"] = v.estimate;
        d["std_error"] = v.std_error;
        return d;
      },
      py::arg("n"), py::arg("seed"), py::arg("shards") = 1);
  m.def("mesh_export", [] {
    const auto mesh = mesh_export();
    return py::make_tuple(mesh.vertices, mesh.faces);
  });

  m.def("haar_random_state", &haar_random_state, py::arg("seed"), py::arg("index") = 0);
  m.def(
      "verify_appendix",
      [](const ThreeQubitState& s, double tol) {
        const auto r = verify_appendix(s, tol);
        py::dict d;
        d["all_pass"] = r.all_pass();
        d["degenerate_branch"] = r.degenerate_branch;
        d["reconstruction"] = check(r.reconstruction);
        d["norm_x"] = check(r.norm_x);
        d["norm_y"] = check(r.norm_y);
        d["orthogonality"] = check(r.orthogonality);
        py::list ids;
        for (const auto& c : r.eigen_identities) ids.append(check(c));
        d["eigen_identities"] = ids;
        d["sum_bc"] = r.sum_bc;
        d["one_plus_sa"] = r.one_plus_sa;
        d["inequality"] = check(r.inequality);
        d["min_slack"] = r.slacks.min();
        return d;
      },
      py::arg("state"), py::arg("tol") = 1e-9);
  m.def(
      "sweep",
      [](std::uint64_t n, std::uint64_t seed, unsigned bins, unsigned shards) {
        SweepStatistics st;
        {
          py::gil_scoped_release release;
          st = sweep(n, seed, bins, shards);
        }
        py::dict d;
        d["n"] = st.n;
        d["seed"] = st.seed;
        d["shards"] = st.shards;
        d["violations"] = st.violations;
        d["min_slack"] = st.min_slack;
        d["min_c_abc"] = st.min_c_abc;
        d["max_c_abc"] = st.max_c_abc;
        d["counts"] = st.counts;
        return d;
      },
      py::arg("n"), py::arg("seed"), py::arg("bins") = 20, py::arg("shards") = 1);

  m.def("recipe_names", &recipe_names);
  m.def(
      "run_recipe", [](const std::string& name) { return run_pipeline(named_recipe(name)); }, py::arg("name"));
  m.def(
      "run_pipeline",
      [](double theta, double phi, double phi0, double theta0, double phi1, double theta1, double delta) {
        BenchPipeline p;
        p.source_theta = theta;
        p.hwp_phi = phi;
        p.soc0 = {phi0, theta0};
        p.soc1 = {phi1, theta1};
        p.delay = delta;
        return run_pipeline(p);
      },
      py::arg("theta") = 0.0, py::arg("phi") = 0.0, py::arg("phi0") = 0.0, py::arg("theta0") = 0.0,
      py::arg("phi1") = 0.0, py::arg("theta1") = 0.0, py::arg("delta") = 0.0);
  m.def(
      "tomography",
      [](const ThreeQubitState& s, std::uint64_t shots, const std::string& noise, std::uint64_t seed) {
        const auto r = tomography(s, settings(shots, noise, seed));
        py::dict d;
        d["separabilities"] = triple(r.separabilities());
        d["std_errors"] = triple(r.std_errors());
        py::list matrices;
        for (const auto& sub : r.subsystems) matrices.append(py::cast(Matrix2c(sub.reconstructed)));
        d["reconstructed"] = matrices;
        return d;
      },
      py::arg("state"), py::arg("shots") = 10000, py::arg("noise") = "none", py::arg("seed") = 0);
  m.def(
      "reproduce_table",
      [](std::uint64_t shots, const std::string& noise, std::uint64_t seed) {
        py::list rows;
        for (const auto& r : reproduce_table(settings(shots, noise, seed))) {
          py::dict d;
          d["beam"] = r.beam;
          d["kind"] = r.theory ? "theory" : "measured";
          d["S"] = triple(r.s);
          d["S_err"] = triple(r.s_error);
          d["C_abc"] = r.c_abc;
          d["C_abc_T"] = r.c_theory;
          d["dot"] = r.dot;
          rows.append(d);
        }
        return rows;
      },
      py::arg("shots") = 10000, py::arg("noise") = "none", py::arg("seed") = 0);
}
